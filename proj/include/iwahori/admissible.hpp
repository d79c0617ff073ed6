#pragma once

#include "iwahori/frobenius.hpp"
#include "iwahori/report.hpp"

#include <vector>

namespace iwahori {

// The admissible set of a dominant cocharacter mu: all w Bruhat-below some
// orbit translation t^{x mu}, optionally saturated by a finite parabolic W_J
// on both sides. elements is sorted by (length, key); generators are the
// Bruhat-maximal elements.
struct AdmissibleSet {
  IntVec mu;
  std::vector<int> j;
  std::vector<WElem> elements;
  std::vector<WElem> generators;

  bool contains(const WElem& x) const;
};

// Union of the Bruhat lower sets of {t^{x mu} : x in W0}, computed by
// enumerating the Omega-coset up to length l(t^mu) and filtering; the
// subword expansion of the generators is asserted to give the same set.
AdmissibleSet admissible_set(const AffineWeyl& aw, const IntVec& mu);

// W_J Adm(mu) W_J, computed by double-coset saturation. Bruhat-downward
// closedness is verified (as equality with the union of lower sets of the
// double-coset maxima), not assumed. Throws when W_J is infinite.
AdmissibleSet admissible_set_J(const AffineWeyl& aw, const IntVec& mu,
                               const std::vector<int>& j);

// Adm(mu) Adm(mu') = Adm(mu + mu'): both sides computed exactly.
Report check_additivity(const AffineWeyl& aw, const IntVec& mu,
                        const IntVec& mu_prime);

// ^J W~ \cap Adm^J(mu) = ^J W~ \cap Adm(mu), J a finite parabolic.
Report check_compatibility(const AffineWeyl& aw, const IntVec& mu,
                           const std::vector<int>& j);

// sigma(Adm(mu)) = Adm(sigma0(mu)).
Report check_sigma_image(const FrobeniusTwist& tw, const IntVec& mu);

}  // namespace iwahori
