#include "iwahori/admissible.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace iwahori {

namespace {

// full Bruhat lower set of y: subword products of one reduced word, built
// prefix by prefix so the cost is |lower set| * word length, not 2^length
std::set<WElem> lower_set(const AffineWeyl& aw, const WElem& y) {
  const auto word = aw.reduced_word(y);
  std::set<WElem> cur{aw.identity_elem()};
  for (int s : word.letters) {
    std::set<WElem> next = cur;
    for (const WElem& x : cur) next.insert(aw.mul(x, aw.simple(s)));
    cur = std::move(next);
  }
  if (word.omega == 0) return cur;
  std::set<WElem> out;
  const WElem& om = aw.omega()[word.omega];
  for (const WElem& x : cur) out.insert(aw.mul(x, om));
  return out;
}

std::vector<WElem> sorted_by_length(const AffineWeyl& aw,
                                    const std::set<WElem>& s) {
  std::vector<WElem> out(s.begin(), s.end());
  std::stable_sort(out.begin(), out.end(), [&](const WElem& a, const WElem& b) {
    const int la = aw.length(a), lb = aw.length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

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

void diff_sets(const AffineWeyl& aw, const std::set<WElem>& lhs,
               const std::set<WElem>& rhs, const std::string& ltag,
               const std::string& rtag, Report& rep) {
  for (const WElem& x : lhs)
    if (!rhs.count(x)) rep.diff.push_back(ltag + ": " + aw.describe(x));
  for (const WElem& x : rhs)
    if (!lhs.count(x)) rep.diff.push_back(rtag + ": " + aw.describe(x));
  rep.pass = rep.diff.empty();
}

}  // namespace

bool AdmissibleSet::contains(const WElem& x) const {
  return std::find(elements.begin(), elements.end(), x) != elements.end();
}

AdmissibleSet admissible_set(const AffineWeyl& aw, const IntVec& mu) {
  if (!aw.datum().is_dominant(mu))
    throw std::invalid_argument("admissible_set requires dominant mu");
  const WElem t_mu = aw.translation(mu);
  std::set<WElem> gens;
  for (int x = 0; x < aw.w0().size(); ++x)
    gens.insert(aw.translation(aw.w0().apply(x, mu)));

  const int bound = aw.length(t_mu);
  const int comp = aw.omega_component(t_mu);
  std::set<WElem> elems;
  for (const WElem& y : aw.enumerate_coset_by_length(bound, comp))
    for (const WElem& g : gens)
      if (aw.bruhat_leq(y, g)) {
        elems.insert(y);
        break;
      }

  // independent route: union of subword lower sets of the generators
  std::set<WElem> by_words;
  for (const WElem& g : gens) {
    auto l = lower_set(aw, g);
    by_words.insert(l.begin(), l.end());
  }
  if (by_words != elems)
    throw std::logic_error("admissible set routes disagree");

  AdmissibleSet out;
  out.mu = mu;
  out.elements = sorted_by_length(aw, elems);
  // orbit translations all have length l(t^mu), hence pairwise incomparable
  out.generators = sorted_by_length(aw, gens);
  return out;
}

AdmissibleSet admissible_set_J(const AffineWeyl& aw, const IntVec& mu,
                               const std::vector<int>& j) {
  AdmissibleSet base = admissible_set(aw, mu);
  if (j.empty()) return base;
  const std::vector<WElem> wj = aw.wj_elements(j);

  std::set<WElem> sat;
  for (const WElem& u : wj)
    for (const WElem& w : base.elements) {
      const WElem uw = aw.mul(u, w);
      for (const WElem& v : wj) sat.insert(aw.mul(uw, v));
    }

  // Bruhat-maximal elements: the double-coset maxima of the orbit
  // translations, minus any that sit below another maximum
  std::set<WElem> maxima;
  for (const WElem& g : base.generators) maxima.insert(aw.coset_max(g, j, j));
  std::vector<WElem> gens;
  for (const WElem& m : maxima) {
    bool top = true;
    for (const WElem& other : maxima)
      if (!(other == m) && aw.bruhat_leq(m, other)) top = false;
    if (top) gens.push_back(m);
  }

  // downward closedness, verified: the saturation must equal the union of
  // the full lower sets of its maximal elements
  std::set<WElem> closed;
  for (const WElem& g : gens) {
    auto l = lower_set(aw, g);
    closed.insert(l.begin(), l.end());
  }
  if (closed != sat)
    throw std::logic_error("double-coset saturation is not Bruhat-closed");

  AdmissibleSet out;
  out.mu = mu;
  out.j = j;
  out.elements = sorted_by_length(aw, sat);
  out.generators = sorted_by_length(
      aw, std::set<WElem>(gens.begin(), gens.end()));
  return out;
}

Report check_additivity(const AffineWeyl& aw, const IntVec& mu,
                        const IntVec& mu_prime) {
  Report rep;
  rep.theorem = "additivity";
  rep.parameters = {{"datum", datum_string(aw.datum())},
                    {"mu", vec_string(mu)},
                    {"mu_prime", vec_string(mu_prime)}};
  AdmissibleSet a = admissible_set(aw, mu);
  AdmissibleSet b = admissible_set(aw, mu_prime);
  std::set<WElem> product;
  for (const WElem& x : a.elements)
    for (const WElem& y : b.elements) product.insert(aw.mul(x, y));
  IntVec sum = vec_add(mu, mu_prime);
  AdmissibleSet c = admissible_set(aw, sum);
  std::set<WElem> target(c.elements.begin(), c.elements.end());
  rep.witnesses.push_back("product size " + std::to_string(product.size()));
  rep.witnesses.push_back("admissible(mu+mu') size " +
                          std::to_string(target.size()));
  diff_sets(aw, product, target, "product only", "sum only", rep);
  return rep;
}

Report check_compatibility(const AffineWeyl& aw, const IntVec& mu,
                           const std::vector<int>& j) {
  Report rep;
  rep.theorem = "parahoric compatibility";
  rep.parameters = {{"datum", datum_string(aw.datum())},
                    {"mu", vec_string(mu)},
                    {"j", set_string(j)}};
  AdmissibleSet adm = admissible_set(aw, mu);
  AdmissibleSet adm_j = admissible_set_J(aw, mu, j);
  std::set<WElem> lhs, rhs;
  for (const WElem& x : adm_j.elements)
    if (aw.is_min_coset_rep_left(x, j)) lhs.insert(x);
  for (const WElem& x : adm.elements)
    if (aw.is_min_coset_rep_left(x, j)) rhs.insert(x);
  rep.witnesses.push_back("min-rep count " + std::to_string(lhs.size()));
  diff_sets(aw, lhs, rhs, "saturated only", "plain only", rep);
  return rep;
}

Report check_sigma_image(const FrobeniusTwist& tw, const IntVec& mu) {
  const AffineWeyl& aw = tw.aw();
  Report rep;
  rep.theorem = "sigma image of the admissible set";
  rep.parameters = {{"datum", datum_string(aw.datum())},
                    {"mu", vec_string(mu)},
                    {"tau", aw.describe(tw.tau())}};
  AdmissibleSet adm = admissible_set(aw, mu);
  std::set<WElem> image;
  for (const WElem& x : adm.elements) image.insert(tw.apply(x));
  AdmissibleSet target = admissible_set(aw, tw.apply_sigma0_lattice(mu));
  std::set<WElem> rhs(target.elements.begin(), target.elements.end());
  rep.witnesses.push_back("size " + std::to_string(image.size()));
  diff_sets(aw, image, rhs, "image only", "target only", rep);
  return rep;
}

}  // namespace iwahori
