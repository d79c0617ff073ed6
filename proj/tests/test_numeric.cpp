#include "iwahori/numeric.hpp"

#include "doctest.h"

#include <random>

using namespace iwahori;

TEST_CASE("matrix basics") {
  IntMat a = {{1, 2}, {3, 4}};
  IntMat b = {{0, 1}, {1, 0}};
  CHECK(mat_mul(a, b) == IntMat{{2, 1}, {4, 3}});
  CHECK(mat_apply(a, IntVec{1, 1}) == IntVec{3, 7});
  CHECK(mat_transpose(a) == IntMat{{1, 3}, {2, 4}});
}

TEST_CASE("rational inverse round trip") {
  IntMat m = {{2, -1}, {-1, 2}};
  auto inv = rat_inverse(m);
  REQUIRE(inv);
  CHECK((*inv)[0][0] == Rat(2, 3));
  CHECK((*inv)[0][1] == Rat(1, 3));
  CHECK_FALSE(rat_inverse(IntMat{{1, 2}, {2, 4}}));
}

TEST_CASE("solve_linear exact") {
  IntMat m = {{2, -1}, {-1, 2}};
  auto x = solve_linear(m, RatVec{Rat(1), Rat(0)});
  REQUIRE(x);
  CHECK((*x)[0] == Rat(2, 3));
  CHECK((*x)[1] == Rat(1, 3));
  // inconsistent system
  CHECK_FALSE(solve_linear(IntMat{{1, 1}, {2, 2}}, RatVec{Rat(0), Rat(1)}));
}

namespace {
// quotient order oracle: |det| for full-rank square integer matrices
long long abs_det3(const IntMat& m) {
  long long d = 0;
  d += m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  d -= m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
  d += m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return d < 0 ? -d : d;
}
}  // namespace

TEST_CASE("smith normal form small cases") {
  auto s = smith_normal_form(IntMat{{2, 0}, {0, 3}}, 2, 2);
  CHECK(s.diag == IntVec{1, 6});

  s = smith_normal_form(IntMat{{2, 4}, {4, 8}}, 2, 2);
  CHECK(s.diag == IntVec{2, 0});

  // label map: U * A has rows divisible by diag
  IntMat a = {{6, 4}, {2, 8}};
  s = smith_normal_form(a, 2, 2);
  CHECK(s.diag == IntVec{2, 20});  // det = 40, gcd of entries 2
}

TEST_CASE("smith normal form: product of diag equals |det| (randomized)") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    IntMat m(3, IntVec(3));
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    const long long det = abs_det3(m);
    if (det == 0) continue;
    auto s = smith_normal_form(m, 3, 3);
    long long prod = 1;
    for (Int x : s.diag) prod *= x;
    CHECK(prod == det);
    // U must be unimodular
    REQUIRE(rat_inverse(s.u));
  }
}

TEST_CASE("rational printing") {
  CHECK(rat_to_string(Rat(1, 2)) == "1/2");
  CHECK(rat_to_string(Rat(-3)) == "-3");
  CHECK(ratvec_to_string(RatVec{Rat(0), Rat(5, 3)}) == "(0,5/3)");
}
