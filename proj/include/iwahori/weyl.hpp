#pragma once

#include "iwahori/rootdata.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace iwahori {

// The finite Weyl group W0, fully tabulated: matrices on the cocharacter
// lattice, reduced words, lengths, a multiplication table. Small groups only
// (rank <= 8 is enforced upstream; in practice rank <= 3).
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& datum);

  const RootDatum& datum() const { return *datum_; }
  int size() const { return static_cast<int>(action_.size()); }
  int identity() const { return 0; }
  int generator(int i) const { return gen_index_[i]; }
  int mul(int a, int b) const { return mul_table_[a * size() + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int length(int a) const { return length_[a]; }
  const std::vector<int>& word(int a) const { return word_[a]; }
  const IntMat& matrix(int a) const { return action_[a]; }
  int index_of(const IntMat& m) const;  // -1 when absent

  IntVec apply(int a, const IntVec& v) const { return mat_apply(action_[a], v); }
  RatVec apply(int a, const RatVec& v) const { return mat_apply(action_[a], v); }

  // image of w under a permutation p of the simple reflections (p must come
  // from a diagram automorphism, so the word map is well defined)
  int relabel(int a, const std::vector<int>& p) const;

  // the unique dominant element of the W0-orbit, with a minimal-length witness
  std::pair<RatVec, int> dominant_representative(const RatVec& nu) const;
  std::pair<IntVec, int> dominant_representative(const IntVec& lambda) const;

 private:
  const RootDatum* datum_;
  std::vector<IntMat> action_;
  std::vector<std::vector<int>> word_;
  std::vector<int> length_, inverse_, gen_index_;
  std::vector<int> mul_table_;
  std::map<IntMat, int> index_;
};

// Element t^lambda w of the Iwahori-Weyl group: lambda in the cocharacter
// lattice (basis coordinates), w an index into the W0 table. The pair is the
// canonical key; words are caches elsewhere, never identity-defining.
struct WElem {
  IntVec lambda;
  int w = 0;
  bool operator==(const WElem& o) const { return w == o.w && lambda == o.lambda; }
  bool operator<(const WElem& o) const {
    if (lambda != o.lambda) return lambda < o.lambda;
    return w < o.w;
  }
};

struct IntVecHash {
  size_t operator()(const IntVec& v) const {
    size_t h = 14695981039346656037ull;
    for (Int x : v) h = (h ^ std::hash<Int>()(x)) * 1099511628211ull;
    return h;
  }
};

struct WElemHash {
  size_t operator()(const WElem& e) const {
    return IntVecHash()(e.lambda) * 31 + std::hash<int>()(e.w);
  }
};

// The Iwahori-Weyl group W~ = X_*(T) x| W0 = W_a x| Omega: multiplication,
// length, reduced words, Bruhat order, Omega, coset minima and enumeration.
// Immutable after construction; the Bruhat memo cache is internally locked.
class AffineWeyl {
 public:
  explicit AffineWeyl(const RootDatum& datum);

  const RootDatum& datum() const { return *datum_; }
  const WeylGroup& w0() const { return w0_; }

  int rank() const { return datum_->rank(); }
  // simple reflections: indices 0..rank-1 finite, rank..rank+ncomp-1 affine
  int num_simple() const { return static_cast<int>(simple_.size()); }
  int affine_node(int component) const { return rank() + component; }
  const WElem& simple(int s) const { return simple_[s]; }

  WElem identity_elem() const { return WElem{IntVec(rank(), 0), 0}; }
  WElem translation(const IntVec& lambda) const { return WElem{lambda, 0}; }
  WElem finite(int w) const { return WElem{IntVec(rank(), 0), w}; }

  WElem mul(const WElem& x, const WElem& y) const;
  WElem inv(const WElem& x) const;

  int length(const WElem& x) const;

  // x = (product of word letters in S~) * omega, |word| = l(x)
  struct Word {
    std::vector<int> letters;
    int omega = 0;  // index into omega()
  };
  Word reduced_word(const WElem& x) const;
  WElem from_word(const Word& w) const;

  bool descent(const WElem& x, int s, bool left) const;

  // length-zero elements, canonically ordered; omega()[0] is the identity
  const std::vector<WElem>& omega() const { return omega_; }
  // which Omega-coset of W_a an element lies in
  int omega_component(const WElem& x) const;

  // Bruhat order (same Omega-component + subword property), via the lifting
  // property with memoization
  bool bruhat_leq(const WElem& x, const WElem& y) const;

  // all elements with l <= bound, sorted by (length, canonical key); memoized
  std::vector<WElem> enumerate_by_length(int bound) const;
  // advisory injection of a previously computed enumeration (disk cache).
  // The table is validated to be exactly the length ball before being kept;
  // throws std::invalid_argument otherwise, so a stale or corrupt table can
  // never change results.
  void preload_enumeration(int bound, std::vector<WElem> elems) const;
  // same, restricted to one Omega-coset
  std::vector<WElem> enumerate_coset_by_length(int bound, int omega_index) const;

  // parabolic subgroups W_J, J a set of S~ indices
  bool wj_finite(const std::vector<int>& j) const;
  // all elements of W_J (throws if infinite)
  std::vector<WElem> wj_elements(const std::vector<int>& j) const;

  // stable human/machine-readable form "t[l1,...]*s_i1*...*s_ik" (finite word)
  std::string describe(const WElem& x) const;

  WElem coset_min(const WElem& x, const std::vector<int>& j_left,
                  const std::vector<int>& j_right) const;
  WElem coset_max(const WElem& x, const std::vector<int>& j_left,
                  const std::vector<int>& j_right) const;
  bool is_min_coset_rep_left(const WElem& x, const std::vector<int>& j) const;
  bool is_min_coset_rep_right(const WElem& x, const std::vector<int>& j) const;

 private:
  const RootDatum* datum_;
  WeylGroup w0_;
  std::vector<WElem> simple_;
  std::vector<WElem> omega_;
  std::unordered_map<IntVec, int, IntVecHash> omega_by_label_;
  std::unordered_map<IntVec, bool, IntVecHash> root_positive_;  // dual coords
  std::vector<std::vector<bool>> winv_positive_;  // [w][root]: w^{-1}(root) > 0

  mutable std::mutex enum_mu_;
  mutable std::map<int, std::vector<WElem>> enum_memo_;

  std::vector<WElem> compute_enumeration(int bound) const;
  void validate_enumeration(int bound, const std::vector<WElem>& elems) const;

  mutable std::mutex bruhat_mu_;
  mutable std::unordered_map<uint64_t, bool> bruhat_memo_;
  mutable std::unordered_map<WElem, uint32_t, WElemHash> elem_ids_;

  uint32_t elem_id(const WElem& x) const;  // caller holds bruhat_mu_
  bool bruhat_leq_locked(const WElem& x, const WElem& y) const;
};

}  // namespace iwahori
