#pragma once

#include "iwahori/frobenius.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace iwahori {

// A sigma-conjugacy class of W~, described by its minimal-length elements and
// its class invariants. min_reps is sorted; min_reps.front() is the canonical
// key of the class.
struct SigmaClass {
  std::vector<WElem> min_reps;
  RatVec newton;      // dominant Newton point
  Pi1Class kappa;
  bool straight = false;
  int min_length = 0;

  const WElem& key() const { return min_reps.front(); }
  bool operator==(const SigmaClass& o) const { return key() == o.key(); }
  bool operator<(const SigmaClass& o) const {
    if (min_length != o.min_length) return min_length < o.min_length;
    return key() < o.key();
  }
};

// Orbit explorations (plateau search, minimal-element orbits) are bounded;
// exceeding the cap throws std::runtime_error. The default is far above
// anything the supported ranks produce.
inline constexpr std::size_t kOrbitCap = std::size_t(1) << 20;

// w' = s w sigma(s); arrow_down iff the length did not increase.
std::pair<WElem, bool> sigma_step(const FrobeniusTwist& tw, const WElem& w, int s);

// A minimal-length element of the sigma-conjugacy class of w, with a witness
// chain: applying sigma_step with the returned letters in order transforms w
// into the result through non-length-increasing moves. Greedy strict descent;
// plateaus are crossed by BFS over the length-preserving orbit.
WElem reduce_to_minimal(const FrobeniusTwist& tw, const WElem& w,
                        std::vector<int>* path = nullptr,
                        std::size_t cap = kOrbitCap);

// Dominant Newton point: (w sigma)^n = t^lambda for the smallest multiple n of
// order(sigma) that works; returns the dominant W0-representative of lambda/n.
RatVec newton_point(const FrobeniusTwist& tw, const WElem& w);

// l(w) = <newton, 2 rho>; cross-checked against l((w sigma)^n) = n l(w).
bool is_straight(const FrobeniusTwist& tw, const WElem& w);

// Factorization of a minimal-length element: w'' = u * x
// with x sigma-straight, x minimal in W_J w'' and in w'' W_{sigma(J)},
// x sigma(J) x^{-1} = J, u in W_J. The search may move to another element
// w'' in the length-preserving orbit of w_min; moves records the witness
// chain of sigma_step letters from w_min to base = u * x.
struct StraightDecomposition {
  std::vector<int> j;
  WElem x;
  WElem u;
  WElem base;
  std::vector<int> moves;
};
StraightDecomposition straight_decomposition(const FrobeniusTwist& tw,
                                             const WElem& w_min,
                                             std::size_t cap = kOrbitCap);

// The straight class of a sigma-straight element: min_reps is its full orbit
// under length-preserving conjugation plus Omega-twists, which is exactly the
// set of minimal-length elements (asserted elsewhere, not assumed).
SigmaClass straight_class_of(const FrobeniusTwist& tw, const WElem& x,
                             std::size_t cap = kOrbitCap);

// Psi: the straight class attached to any w, via reduction and straight
// decomposition. Preserves (newton, kappa).
SigmaClass psi(const FrobeniusTwist& tw, const WElem& w);

// All straight classes with min_length <= bound, sorted by (length, key).
// Deduplicated by (newton, kappa); injectivity of that invariant on straight
// classes is asserted against the canonical keys.
std::vector<SigmaClass> enumerate_straight_classes(const FrobeniusTwist& tw,
                                                   int bound);

// O preceq w: some minimal-length element of O is Bruhat-below w.
bool preceq_element(const FrobeniusTwist& tw, const SigmaClass& o, const WElem& w);

// O preceq O': O preceq w for some minimal-length w of O'.
bool preceq_classes(const FrobeniusTwist& tw, const SigmaClass& o,
                    const SigmaClass& o_prime);

// The poset of straight classes up to a length bound, with Hasse edges
// (i, j) meaning classes[i] is covered by classes[j].
struct StraightPoset {
  std::vector<SigmaClass> classes;
  std::vector<std::pair<int, int>> hasse;
};
StraightPoset straight_poset(const FrobeniusTwist& tw, int bound);

}  // namespace iwahori
