#pragma once

#include "iwahori/weyl.hpp"

#include <vector>

namespace iwahori {

// Canonical label of a class in the sigma-coinvariants of pi1(G)_Gamma.
struct Pi1Class {
  IntVec label;
  bool operator==(const Pi1Class& o) const { return label == o.label; }
  bool operator<(const Pi1Class& o) const { return label < o.label; }
  bool trivial() const { return is_zero(label); }
};

// The Frobenius twist sigma = Ad(tau) o sigma0: a diagram automorphism
// sigma0 (a permutation of the finite Dynkin nodes preserving the Cartan
// matrix, possibly permuting isomorphic components) composed with
// conjugation by a length-zero element tau. Immutable.
class FrobeniusTwist {
 public:
  // sigma0 = node permutation (identity when empty); tau defaults to the
  // identity. Throws when sigma0 does not preserve the Cartan matrix, does
  // not stabilize the chosen lattice, or tau has positive length.
  FrobeniusTwist(const AffineWeyl& aw, std::vector<int> sigma0 = {},
                 WElem tau = WElem{});

  const AffineWeyl& aw() const { return *aw_; }
  const std::vector<int>& sigma0_nodes() const { return sigma0_; }
  const WElem& tau() const { return tau_; }
  int sigma0_order() const { return sigma0_order_; }
  int order() const { return order_; }  // of sigma as automorphism of W~
  bool is_trivial() const;

  WElem apply_sigma0(const WElem& x) const;
  WElem apply(const WElem& x) const;  // sigma = Ad(tau) o sigma0
  WElem apply_power(const WElem& x, int k) const;

  // induced permutation of the affine simple reflections
  int apply_to_simple(int s) const { return stilde_perm_[s]; }

  IntVec apply_sigma0_lattice(const IntVec& lambda) const;
  RatVec apply_sigma0_lattice(const RatVec& lambda) const;

  // image of the Omega-component in the sigma-coinvariants; constant on
  // sigma-conjugacy classes and additive under multiplication
  Pi1Class kottwitz_kappa(const WElem& x) const;

  // mu^diamond = (1/N) sum sigma0^i(mu); requires dominant mu
  RatVec mu_diamond(const IntVec& mu) const;
  // mu^sharp = kappa(t^mu)
  Pi1Class mu_sharp(const IntVec& mu) const;

  // is the S~-subset J stable under sigma?
  bool stabilizes(const std::vector<int>& j) const;

 private:
  const AffineWeyl* aw_;
  std::vector<int> sigma0_;       // images of finite nodes
  IntMat sigma0_lattice_;         // action on the chosen lattice basis
  WElem tau_;
  int sigma0_order_ = 1;
  int order_ = 1;
  std::vector<int> stilde_perm_;
  SmithForm coinv_;  // of [coroots | sigma0_lattice - 1]
};

}  // namespace iwahori
