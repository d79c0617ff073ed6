#include "iwahori/mazur.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace iwahori {

namespace {

using ClassKey = std::pair<RatVec, IntVec>;

ClassKey class_key(const SigmaClass& o) { return {o.newton, o.kappa.label}; }

std::string vec_string(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string set_string(const std::vector<int>& j) {
  std::string s = "{";
  for (size_t i = 0; i < j.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(j[i]);
  }
  return s + "}";
}

std::string datum_string(const RootDatum& d) {
  std::string s = d.type_string();
  switch (d.lattice_choice()) {
    case LatticeChoice::SimplyConnected: s += " sc"; break;
    case LatticeChoice::Adjoint: s += " ad"; break;
    case LatticeChoice::Intermediate: s += " intermediate"; break;
  }
  return s;
}

std::string twist_string(const FrobeniusTwist& tw) {
  std::string s = "sigma0=[";
  for (size_t i = 0; i < tw.sigma0_nodes().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(tw.sigma0_nodes()[i]);
  }
  return s + "] tau=" + tw.aw().describe(tw.tau());
}

std::string class_string(const FrobeniusTwist& tw, const SigmaClass& o) {
  return "nu=" + ratvec_to_string(o.newton) + " kappa=" +
         vec_string(o.kappa.label) + " min=" + tw.aw().describe(o.key());
}

// Route A of the non-emptiness predicate: invariant keys of the psi-image.
std::set<ClassKey> psi_image(const FrobeniusTwist& tw,
                             const AdmissibleSet& adm_j) {
  std::set<ClassKey> image;
  for (const WElem& w : adm_j.elements) image.insert(class_key(psi(tw, w)));
  return image;
}

// Route B: the class sits below some generator in the preceq sense.
bool below_generators(const FrobeniusTwist& tw, const SigmaClass& o,
                      const AdmissibleSet& adm_j) {
  for (const WElem& g : adm_j.generators)
    if (preceq_element(tw, o, g)) return true;
  return false;
}

// dominance-maximal Newton points among a set of classes
std::vector<RatVec> maximal_newtons(const RootDatum& d,
                                    const std::vector<SigmaClass>& classes) {
  std::vector<RatVec> out;
  for (const SigmaClass& o : classes) {
    bool top = true;
    for (const SigmaClass& other : classes)
      if (!(other.newton == o.newton) && d.dominance_leq(o.newton, other.newton))
        top = false;
    if (top && std::find(out.begin(), out.end(), o.newton) == out.end())
      out.push_back(o.newton);
  }
  return out;
}

}  // namespace

AcceptableSet b_g_mu(const FrobeniusTwist& tw, const IntVec& mu) {
  const AffineWeyl& aw = tw.aw();
  if (!aw.datum().is_dominant(mu))
    throw std::invalid_argument("b_g_mu requires dominant mu");
  // <mu_diamond, 2 rho> = <mu, 2 rho> since sigma0 permutes the positive roots
  const Int bound = aw.datum().rho_pairing(mu);
  const Pi1Class sharp = tw.mu_sharp(mu);
  const RatVec diamond = tw.mu_diamond(mu);
  AcceptableSet out;
  out.mu = mu;
  for (const SigmaClass& o : enumerate_straight_classes(tw, static_cast<int>(bound)))
    if (o.kappa == sharp && aw.datum().dominance_leq(o.newton, diamond))
      out.classes.push_back(o);
  if (out.classes.empty()) throw std::logic_error("empty acceptable set");
  auto maxima = maximal_newtons(aw.datum(), out.classes);
  if (maxima.size() != 1)
    throw std::logic_error("acceptable set has no unique maximal Newton point");
  out.maximal_newton = maxima.front();
  return out;
}

bool x_mu_b_nonempty(const FrobeniusTwist& tw, const IntVec& mu,
                     const std::vector<int>& j, const SigmaClass& o) {
  if (!o.straight) throw std::invalid_argument("class must be straight");
  if (!(o.kappa == tw.mu_sharp(mu))) return false;
  AdmissibleSet adm_j = admissible_set_J(tw.aw(), mu, j);
  const bool via_psi = psi_image(tw, adm_j).count(class_key(o)) > 0;
  const bool via_preceq = below_generators(tw, o, adm_j);
  if (via_psi != via_preceq)
    throw std::logic_error("non-emptiness routes disagree");
  return via_psi;
}

Report verify_theorem_A(const FrobeniusTwist& tw, const IntVec& mu,
                        const std::vector<int>& j) {
  const AffineWeyl& aw = tw.aw();
  Report rep;
  rep.theorem = "non-emptiness criterion";
  rep.parameters = {{"datum", datum_string(aw.datum())},
                    {"twist", twist_string(tw)},
                    {"mu", vec_string(mu)},
                    {"j", set_string(j)}};
  AcceptableSet accept = b_g_mu(tw, mu);
  AdmissibleSet adm_j = admissible_set_J(aw, mu, j);
  int bound = static_cast<int>(aw.datum().rho_pairing(mu));
  if (!adm_j.elements.empty())
    bound = std::max(bound, aw.length(adm_j.elements.back()));

  const auto image = psi_image(tw, adm_j);
  std::set<ClassKey> nonempty, acceptable;
  for (const SigmaClass& o : enumerate_straight_classes(tw, bound)) {
    const bool via_psi = image.count(class_key(o)) > 0;
    const bool via_preceq = below_generators(tw, o, adm_j);
    if (via_psi != via_preceq)
      throw std::logic_error("non-emptiness routes disagree");
    if (via_psi) {
      nonempty.insert(class_key(o));
      rep.witnesses.push_back("nonempty: " + class_string(tw, o));
    }
  }
  for (const SigmaClass& o : accept.classes) acceptable.insert(class_key(o));

  for (const auto& k : nonempty)
    if (!acceptable.count(k))
      rep.diff.push_back("nonempty but not acceptable: nu=" +
                         ratvec_to_string(k.first) + " kappa=" +
                         vec_string(k.second));
  for (const auto& k : acceptable)
    if (!nonempty.count(k))
      rep.diff.push_back("acceptable but empty: nu=" +
                         ratvec_to_string(k.first) + " kappa=" +
                         vec_string(k.second));
  rep.pass = rep.diff.empty();
  return rep;
}

Report verify_prop_4_1(const FrobeniusTwist& tw, const IntVec& mu) {
  const AffineWeyl& aw = tw.aw();
  Report rep;
  rep.theorem = "acceptable classes meet the admissible set";
  rep.parameters = {{"datum", datum_string(aw.datum())},
                    {"twist", twist_string(tw)},
                    {"mu", vec_string(mu)}};
  AcceptableSet accept = b_g_mu(tw, mu);
  AdmissibleSet adm = admissible_set(aw, mu);

  for (const SigmaClass& o : accept.classes) {
    const WElem* witness = nullptr;
    for (const WElem& w : adm.elements) {
      WElem m = reduce_to_minimal(tw, w);
      if (std::count(o.min_reps.begin(), o.min_reps.end(), m)) {
        witness = &w;
        break;
      }
    }
    if (witness)
      rep.witnesses.push_back(class_string(tw, o) + " meets Adm at " +
                              aw.describe(*witness));
    else
      rep.diff.push_back("class misses Adm: " + class_string(tw, o));
  }

  // uniqueness of the maximal Newton point, re-derived here
  auto maxima = maximal_newtons(aw.datum(), accept.classes);
  if (maxima.size() != 1 || !(maxima.front() == accept.maximal_newton))
    rep.diff.push_back("maximal Newton point not unique");

  // some admissible element attains the maximum
  const WElem* top = nullptr;
  for (const WElem& w : adm.elements)
    if (newton_point(tw, w) == accept.maximal_newton) {
      top = &w;
      break;
    }
  if (top)
    rep.witnesses.push_back("maximal nu=" + ratvec_to_string(accept.maximal_newton) +
                            " attained at " + aw.describe(*top));
  else
    rep.diff.push_back("maximal Newton point not attained in Adm(mu)");
  rep.pass = rep.diff.empty();
  return rep;
}

Report verify_mazur_iwahori(const FrobeniusTwist& tw, const IntVec& mu) {
  const AffineWeyl& aw = tw.aw();
  Report rep;
  rep.theorem = "Mazur inequality on the admissible set";
  rep.parameters = {{"datum", datum_string(aw.datum())},
                    {"twist", twist_string(tw)},
                    {"mu", vec_string(mu)}};
  const RatVec diamond = tw.mu_diamond(mu);
  const Pi1Class sharp = tw.mu_sharp(mu);
  AdmissibleSet adm = admissible_set(aw, mu);
  for (const WElem& w : adm.elements) {
    RatVec nu = newton_point(tw, w);
    if (!aw.datum().dominance_leq(nu, diamond))
      rep.diff.push_back("newton too large: " + aw.describe(w) + " nu=" +
                         ratvec_to_string(nu));
    if (!(tw.kottwitz_kappa(w) == sharp))
      rep.diff.push_back("kappa mismatch: " + aw.describe(w));
  }
  rep.witnesses.push_back("checked " + std::to_string(adm.elements.size()) +
                          " elements");
  rep.pass = rep.diff.empty();
  return rep;
}

Report verify_tri_order(const FrobeniusTwist& tw, int length_bound) {
  const AffineWeyl& aw = tw.aw();
  Report rep;
  rep.theorem = "preceq equals (kappa, dominance) on straight classes";
  rep.parameters = {{"datum", datum_string(aw.datum())},
                    {"twist", twist_string(tw)},
                    {"length_bound", std::to_string(length_bound)}};
  auto classes = enumerate_straight_classes(tw, length_bound);
  for (const SigmaClass& o : classes)
    for (const SigmaClass& op : classes) {
      const bool by_order = preceq_classes(tw, o, op);
      const bool by_inv = o.kappa == op.kappa &&
                          aw.datum().dominance_leq(o.newton, op.newton);
      if (by_order != by_inv)
        rep.diff.push_back("mismatch: " + class_string(tw, o) + " vs " +
                           class_string(tw, op));
    }
  rep.witnesses.push_back("checked " + std::to_string(classes.size()) +
                          " classes");
  rep.pass = rep.diff.empty();
  return rep;
}

}  // namespace iwahori
