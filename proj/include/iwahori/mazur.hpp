#pragma once

#include "iwahori/admissible.hpp"
#include "iwahori/classes.hpp"
#include "iwahori/report.hpp"

#include <vector>

namespace iwahori {

// The acceptable straight classes of a dominant mu: kappa equal to mu_sharp
// and Newton point dominance-below mu_diamond. maximal_newton is the unique
// dominance-maximal Newton point among them (its uniqueness is checked, not
// assumed; violation throws std::logic_error).
struct AcceptableSet {
  IntVec mu;
  std::vector<SigmaClass> classes;
  RatVec maximal_newton;
};

AcceptableSet b_g_mu(const FrobeniusTwist& tw, const IntVec& mu);

// Non-emptiness predicate: the class o meets Psi(Adm^J(mu)). Computed two
// ways — membership of o in the psi-image, and o preceq some generator of
// Adm^J(mu) — which must agree (std::logic_error otherwise). A kappa mismatch
// with mu_sharp short-circuits to false.
bool x_mu_b_nonempty(const FrobeniusTwist& tw, const IntVec& mu,
                     const std::vector<int>& j, const SigmaClass& o);

// {O : x_mu_b_nonempty(O)} equals b_g_mu(mu).classes.
Report verify_theorem_A(const FrobeniusTwist& tw, const IntVec& mu,
                        const std::vector<int>& j);

// Every acceptable class meets Adm(mu); some element of Adm(mu) attains the
// maximal Newton point; the maximum is unique.
Report verify_prop_4_1(const FrobeniusTwist& tw, const IntVec& mu);

// Mazur's inequality, directly: every w in Adm(mu) has newton <= mu_diamond
// and kappa = mu_sharp.
Report verify_mazur_iwahori(const FrobeniusTwist& tw, const IntVec& mu);

// preceq on straight classes up to the length bound coincides with
// (equal kappa and Newton dominance).
Report verify_tri_order(const FrobeniusTwist& tw, int length_bound);

}  // namespace iwahori
