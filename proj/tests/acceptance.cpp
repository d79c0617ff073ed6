// The acceptance gate: one test case per criterion, each printing a single
// pass/fail line. Everything is checked against independent oracles or by
// exact set comparison at desk scale.
#include "doctest.h"

#include "iwahori/admissible.hpp"
#include "iwahori/classes.hpp"
#include "iwahori/mazur.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <memory>
#include <set>
#include <string>
#include <vector>

using namespace iwahori;

namespace {

struct Ctx {
  std::string label;
  std::shared_ptr<RootDatum> datum;
  std::shared_ptr<AffineWeyl> aw;
  std::shared_ptr<FrobeniusTwist> twist;
};

Ctx make_ctx(const std::string& type, LatticeChoice lattice,
             std::vector<int> sigma0, bool nontrivial_tau) {
  Ctx c;
  std::vector<CartanComponent> comps;
  for (size_t i = 0; i < type.size();) {
    char series = type[i++];
    int rank = type[i++] - '0';
    comps.push_back({series, rank});
    if (i < type.size() && type[i] == 'x') ++i;
  }
  c.datum = std::make_shared<RootDatum>(std::move(comps), lattice);
  c.aw = std::make_shared<AffineWeyl>(*c.datum);
  WElem tau = nontrivial_tau ? c.aw->omega().at(1) : c.aw->identity_elem();
  c.twist = std::make_shared<FrobeniusTwist>(*c.aw, std::move(sigma0), tau);
  c.label = c.datum->type_string() +
            (lattice == LatticeChoice::SimplyConnected ? " sc" : " ad");
  if (!c.twist->is_trivial()) c.label += " twisted";
  return c;
}

// the full (datum, twist) grid: trivial twist everywhere, the A2 diagram
// swap, and the adjoint-A1 twist by a nontrivial length-zero tau
std::vector<Ctx> full_grid() {
  std::vector<Ctx> out;
  for (const std::string& type : {"A1", "A2", "B2", "A1xA1"})
    for (LatticeChoice lat :
         {LatticeChoice::SimplyConnected, LatticeChoice::Adjoint}) {
      out.push_back(make_ctx(type, lat, {}, false));
      if (type == "A2") out.push_back(make_ctx(type, lat, {1, 0}, false));
      if (type == "A1" && lat == LatticeChoice::Adjoint)
        out.push_back(make_ctx(type, lat, {}, true));
    }
  return out;
}

std::vector<IntVec> dominant_mus(const RootDatum& d) {
  std::vector<IntVec> out;
  for (unsigned mask = 0; mask < (1u << d.rank()); ++mask) {
    IntVec mu(d.rank(), 0);
    for (int i = 0; i < d.rank(); ++i)
      if (mask & (1u << i)) mu[i] = 1;
    if (d.is_dominant(mu)) out.push_back(mu);
  }
  return out;
}

std::vector<std::vector<int>> stable_finite_j(const Ctx& c) {
  std::vector<std::vector<int>> out;
  const int m = c.aw->num_simple();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> j;
    for (int s = 0; s < m; ++s)
      if (mask & (1u << s)) j.push_back(s);
    if (c.aw->wj_finite(j) && c.twist->stabilizes(j)) out.push_back(j);
  }
  return out;
}

bool announce(int n, const char* name, long long checked, long long failures) {
  std::printf("[%s] criterion %d: %s — %lld checks, %lld failures\n",
              failures == 0 ? "PASS" : "FAIL", n, name, checked, failures);
  std::fflush(stdout);
  return failures == 0;
}

}  // namespace

TEST_CASE("criterion 1: length and Bruhat order match the oracles") {
  const auto t0 = std::chrono::steady_clock::now();
  long long checked = 0, failures = 0;
  for (const Ctx& c : full_grid()) {
    if (!c.twist->is_trivial()) continue;  // length/Bruhat are twist-free
    const auto ball = c.aw->enumerate_by_length(6);
    const auto dist = oracle::bfs_lengths(*c.aw, 6);
    for (const WElem& x : ball) {
      ++checked;
      if (c.aw->length(x) != dist.at(x)) ++failures;
    }
    for (const WElem& y : ball) {
      const std::set<WElem> below = oracle::subword_lower_set(*c.aw, y);
      for (const WElem& x : ball) {
        ++checked;
        if (c.aw->bruhat_leq(x, y) != (below.count(x) != 0)) ++failures;
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 60.0) ++failures;
  CHECK(announce(1, "length and Bruhat order vs alcove-BFS and subword oracles",
                 checked, failures));
  CHECK(secs < 60.0);
}

TEST_CASE("criterion 2: additivity Adm(mu) Adm(mu') = Adm(mu+mu')") {
  long long checked = 0, failures = 0;
  for (const std::string& type : {"A1", "A2", "B2"})
    for (LatticeChoice lat :
         {LatticeChoice::SimplyConnected, LatticeChoice::Adjoint}) {
      Ctx c = make_ctx(type, lat, {}, false);
      const auto mus = dominant_mus(*c.datum);
      for (const IntVec& mu : mus)
        for (const IntVec& mu2 : mus) {
          ++checked;
          if (!check_additivity(*c.aw, mu, mu2).pass) ++failures;
        }
    }
  CHECK(announce(2, "additivity of admissible sets", checked, failures));
}

TEST_CASE("criterion 3: parahoric compatibility of Adm^J") {
  long long checked = 0, failures = 0;
  for (const Ctx& c : full_grid())
    for (const IntVec& mu : dominant_mus(*c.datum))
      for (const auto& j : stable_finite_j(c)) {
        ++checked;
        if (!check_compatibility(*c.aw, mu, j).pass) ++failures;
      }
  CHECK(announce(3, "^J W~ \\cap Adm^J(mu) = ^J W~ \\cap Adm(mu)", checked,
                 failures));
}

TEST_CASE("criterion 4: preceq equals (kappa, Newton dominance) on straight classes") {
  long long checked = 0, failures = 0;
  for (const Ctx& c : full_grid()) {
    const auto classes = enumerate_straight_classes(*c.twist, 6);
    for (const SigmaClass& o : classes)
      for (const SigmaClass& o2 : classes) {
        ++checked;
        const bool lhs = preceq_classes(*c.twist, o, o2);
        const bool rhs = o.kappa == o2.kappa &&
                         c.datum->dominance_leq(o.newton, o2.newton);
        if (lhs != rhs) ++failures;
      }
  }
  CHECK(announce(4, "class order vs invariants, all straight pairs", checked,
                 failures));
}

TEST_CASE("criterion 5: acceptable classes are exactly the non-empty ones") {
  long long checked = 0, failures = 0;
  for (const Ctx& c : full_grid())
    for (const IntVec& mu : dominant_mus(*c.datum))
      for (const auto& j : stable_finite_j(c)) {
        ++checked;
        if (!verify_theorem_A(*c.twist, mu, j).pass) ++failures;
      }

  // |B(G, alpha-check)| = 2 for simply connected A1, against an oracle that
  // uses only group arithmetic: straightness via powers, classes via
  // conjugation closure.
  {
    Ctx c = make_ctx("A1", LatticeChoice::SimplyConnected, {}, false);
    const IntVec mu{1};  // the coroot, in coroot coordinates
    const int bound = static_cast<int>(c.datum->rho_pairing(mu));
    auto is_straight_oracle = [&](const WElem& w) {
      WElem p = c.aw->identity_elem();
      for (int n = 1; n <= c.aw->w0().size(); ++n) {
        p = c.aw->mul(p, w);
        if (c.aw->length(p) != n * c.aw->length(w)) return false;
      }
      return true;
    };
    auto same_sigma = [&](const WElem& u) { return u; };
    std::vector<WElem> reps;
    for (const WElem& w : c.aw->enumerate_by_length(bound)) {
      if (!is_straight_oracle(w)) continue;
      bool fresh = true;
      for (const WElem& r : reps)
        if (oracle::class_up_to_length(*c.aw, r, bound, same_sigma).count(w))
          fresh = false;
      if (fresh) reps.push_back(w);
    }
    ++checked;
    if (reps.size() != 2) ++failures;
    ++checked;
    if (b_g_mu(*c.twist, mu).classes.size() != reps.size()) ++failures;
  }
  CHECK(announce(5, "non-emptiness over the full grid, |B(G, coroot)| = 2 for sc A1",
                 checked, failures));
}

TEST_CASE("criterion 6: reduction, straight decomposition, minimal elements") {
  long long checked = 0, failures = 0;
  for (const Ctx& c : full_grid()) {
    const FrobeniusTwist& tw = *c.twist;

    // every element reduces, and the minimum decomposes as u * x
    for (const WElem& w : c.aw->enumerate_by_length(6)) {
      ++checked;
      std::vector<int> path;
      WElem w_min = reduce_to_minimal(tw, w, &path);
      // replay the witness chain: moves never increase length
      WElem cur = w;
      bool ok = true;
      for (int s : path) {
        auto [next, down] = sigma_step(tw, cur, s);
        ok = ok && down;
        cur = next;
      }
      ok = ok && cur == w_min && c.aw->length(w_min) <= c.aw->length(w);
      StraightDecomposition d = straight_decomposition(tw, w_min);
      ok = ok && is_straight(tw, d.x) && c.aw->mul(d.u, d.x) == d.base &&
           c.aw->length(d.base) == c.aw->length(w_min);
      if (!ok) ++failures;
    }

    // in every straight class: min-length elements are one orbit under
    // length-preserving moves and coincide with the Bruhat-minimal elements
    auto sigma = [&](const WElem& u) { return tw.apply(u); };
    for (const SigmaClass& o : enumerate_straight_classes(tw, 6)) {
      ++checked;
      const auto cls =
          oracle::class_up_to_length(*c.aw, o.key(), o.min_length + 2, sigma);
      std::vector<WElem> shortest;
      for (const WElem& x : cls)
        if (c.aw->length(x) == o.min_length) shortest.push_back(x);
      std::sort(shortest.begin(), shortest.end());
      bool ok = shortest == o.min_reps;
      for (const WElem& x : cls) {
        if (c.aw->length(x) == o.min_length) continue;
        // a longer class element is never Bruhat-minimal
        bool dominated = false;
        for (const WElem& m : shortest)
          if (c.aw->bruhat_leq(m, x)) dominated = true;
        for (const WElem& y : cls)
          if (!(y == x) && c.aw->bruhat_leq(y, x)) dominated = true;
        ok = ok && dominated;
      }
      if (!ok) ++failures;
    }
  }
  CHECK(announce(6, "reduction to minimal, u*x decomposition, minimal = one orbit",
                 checked, failures));
}

TEST_CASE("criterion 7: Mazur inequality over the admissible set") {
  long long checked = 0, failures = 0;
  for (const Ctx& c : full_grid())
    for (const IntVec& mu : dominant_mus(*c.datum)) {
      ++checked;
      if (!verify_mazur_iwahori(*c.twist, mu).pass) ++failures;
    }
  CHECK(announce(7, "newton(w) <= mu_diamond and kappa(w) = mu_sharp on Adm(mu)",
                 checked, failures));
}

#ifndef IWAHORI_CLI_PATH
#error "IWAHORI_CLI_PATH must point at the built binary"
#endif

TEST_CASE("criterion 8: check all is byte-deterministic") {
  auto run = [](std::string* out) {
    const std::string cmd =
        std::string(IWAHORI_CLI_PATH) + " check all 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[65536];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out->append(buf, n);
    return WEXITSTATUS(pclose(p));
  };
  std::string a, b;
  const int ra = run(&a);
  const int rb = run(&b);
  long long failures = 0;
  if (ra != 0 || rb != 0) ++failures;
  if (a.empty() || a != b) ++failures;
  CHECK(announce(8, "two runs of `check all` emit identical bytes", 2, failures));
}
