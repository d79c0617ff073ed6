#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace iwahori {

// All lattice arithmetic is exact. Coordinates are small in practice but we
// keep rationals arbitrary-precision so dominance comparisons and Newton
// points are always decidable.
using Int = long long;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;  // row-major
using RatMat = std::vector<RatVec>;

IntMat identity_matrix(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_apply(const IntMat& m, const IntVec& v);
RatVec mat_apply(const IntMat& m, const RatVec& v);
IntMat mat_transpose(const IntMat& m);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
bool is_zero(const IntVec& a);

RatVec to_rat(const IntVec& a);
// Rounds nothing: returns nullopt unless every entry is integral.
std::optional<IntVec> to_int(const RatVec& a);

// Inverse over Q; nullopt when singular.
std::optional<RatMat> rat_inverse(const IntMat& m);

// Solve m x = rhs exactly; nullopt when no solution (or underdetermined
// directions are fixed to zero only if consistent). m must have full column
// rank for a unique answer; callers here always pass square invertible m.
std::optional<RatVec> solve_linear(const IntMat& m, const RatVec& rhs);

// Smith normal form U * A * V = diag(d); only U and the diagonal are kept.
// Z^rows / colspan(A) == (+) Z/d_i via y -> (U y)_i mod d_i.
struct SmithForm {
  IntMat u;       // rows x rows unimodular
  IntVec diag;    // length = rows; d_i >= 0, zeros mean free summands
};
SmithForm smith_normal_form(IntMat a, int rows, int cols);

std::string rat_to_string(const Rat& r);
std::string ratvec_to_string(const RatVec& v);

}  // namespace iwahori
