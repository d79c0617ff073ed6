#include "iwahori/rootdata.hpp"

#include "doctest.h"

using namespace iwahori;

namespace {
RootDatum make(const char* series, int rank, LatticeChoice c) {
  return RootDatum({{series[0], rank}}, c);
}
}  // namespace

TEST_CASE("A1 simply connected: defining data of SL2") {
  RootDatum d = make("A", 1, LatticeChoice::SimplyConnected);
  CHECK(d.positive_roots().size() == 1);
  CHECK(d.pi1_trivial());
  // pairing(alpha_i, alpha_j^vee) = cartan[j][i]
  CHECK(dot(d.simple_root(0).dual, d.simple_root(0).coroot) == d.cartan()[0][0]);
}

TEST_CASE("A1 adjoint: pi1 = Z/2") {
  RootDatum d = make("A", 1, LatticeChoice::Adjoint);
  CHECK(d.pi1_orders() == IntVec{2});
  CHECK_FALSE(d.pi1_trivial());
  // coroot = 2 * basis vector
  CHECK(d.simple_root(0).coroot == IntVec{2});
}

TEST_CASE("A2 simply connected: 3 positive roots, <theta^vee, 2 rho> = 4") {
  RootDatum d = make("A", 2, LatticeChoice::SimplyConnected);
  CHECK(d.positive_roots().size() == 3);
  const Root& theta = d.highest_root(0);
  CHECK(theta.height == 2);
  CHECK(d.rho_pairing(theta.coroot) == 4);
}

TEST_CASE("cartan pairing invariant across types and lattices") {
  for (auto [s, n] : {std::pair{'A', 2}, {'B', 2}, {'C', 3}, {'G', 2}, {'F', 4}}) {
    for (auto lc : {LatticeChoice::SimplyConnected, LatticeChoice::Adjoint}) {
      RootDatum d({{s, n}}, lc);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          CHECK(dot(d.simple_root(i).dual, d.simple_root(j).coroot) == d.cartan()[j][i]);
    }
  }
}

TEST_CASE("positive root counts") {
  CHECK(make("B", 2, LatticeChoice::Adjoint).positive_roots().size() == 4);
  CHECK(make("G", 2, LatticeChoice::SimplyConnected).positive_roots().size() == 6);
  CHECK(make("D", 4, LatticeChoice::SimplyConnected).positive_roots().size() == 12);
  CHECK(make("F", 4, LatticeChoice::Adjoint).positive_roots().size() == 24);
  RootDatum prod({{'A', 1}, {'A', 1}}, LatticeChoice::SimplyConnected);
  CHECK(prod.positive_roots().size() == 2);
  CHECK(prod.type_string() == "A1xA1");
}

TEST_CASE("rho_pairing examples") {
  RootDatum a1 = make("A", 1, LatticeChoice::SimplyConnected);
  CHECK(a1.rho_pairing(IntVec{0}) == 0);
  CHECK(a1.rho_pairing(a1.simple_root(0).coroot) == 2);

  RootDatum a2 = make("A", 2, LatticeChoice::SimplyConnected);
  IntVec lam = vec_add(a2.simple_root(0).coroot, a2.simple_root(1).coroot);
  CHECK(a2.rho_pairing(lam) == 4);
}

TEST_CASE("dominance order") {
  RootDatum a1 = make("A", 1, LatticeChoice::SimplyConnected);
  RatVec zero{Rat(0)}, av = to_rat(a1.simple_root(0).coroot);
  CHECK(a1.dominance_leq(zero, av));
  CHECK_FALSE(a1.dominance_leq(av, zero));
  CHECK(a1.dominance_leq(av, av));

  RootDatum a2 = make("A", 2, LatticeChoice::SimplyConnected);
  RatVec c1 = to_rat(a2.simple_root(0).coroot);
  RatVec c2 = to_rat(a2.simple_root(1).coroot);
  // alpha_1^vee and alpha_2^vee are not dominant; use dominant test coweights
  RatVec r = {Rat(1), Rat(1)};  // rho^vee-ish, dominant in coroot basis? check
  CHECK(a2.is_dominant(r));
  // fundamental-ish: omega_1^vee = (2/3, 1/3) in coroot coords
  RatVec w1 = {Rat(2, 3), Rat(1, 3)};
  RatVec w2 = {Rat(1, 3), Rat(2, 3)};
  CHECK(a2.is_dominant(w1));
  CHECK(a2.is_dominant(w2));
  // incomparable both ways: difference is (1/3)(alpha_1^vee - alpha_2^vee)
  CHECK_FALSE(a2.dominance_leq(w1, w2));
  CHECK_FALSE(a2.dominance_leq(w2, w1));
  CHECK(a2.dominance_leq(w1, r));
  (void)c1;
  (void)c2;
}

TEST_CASE("dominance rejects non-dominant input") {
  RootDatum a1 = make("A", 1, LatticeChoice::SimplyConnected);
  RatVec neg{Rat(-1)};
  CHECK_THROWS_AS(a1.dominance_leq(neg, neg), std::invalid_argument);
}

TEST_CASE("intermediate lattice: adjoint basis of A1 via explicit matrix") {
  // basis vector = fundamental coweight: same as adjoint
  RootDatum d({{'A', 1}}, LatticeChoice::Intermediate, IntMat{{1}});
  CHECK(d.pi1_orders() == IntVec{2});
  // basis not containing the coroot lattice must be rejected:
  // for A1 every nonzero sublattice of P^vee contains some multiple, so use
  // a rank-2 case: span{(2,0),(0,1)} in coweight coords of A1xA1 adjoint
  CHECK_THROWS_AS(RootDatum({{'A', 1}, {'A', 1}}, LatticeChoice::Intermediate,
                            IntMat{{4, 0}, {0, 1}}),
                  std::invalid_argument);
}

TEST_CASE("unknown type rejected") {
  CHECK_THROWS_AS(make("Z", 2, LatticeChoice::Adjoint), std::invalid_argument);
  CHECK_THROWS_AS(make("E", 5, LatticeChoice::Adjoint), std::invalid_argument);
}
