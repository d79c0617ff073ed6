#pragma once

#include "iwahori/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace iwahori {

enum class LatticeChoice { SimplyConnected, Adjoint, Intermediate };

struct CartanComponent {
  char series;  // 'A'..'G'
  int rank;
};

// A root together with its coroot. Roots live in the dual of the chosen
// cocharacter lattice (pairing with a cocharacter is a plain dot product),
// coroots in the lattice itself.
struct Root {
  IntVec dual;           // pairing coordinates against the lattice basis
  IntVec coroot;         // coordinates in the lattice basis
  IntVec simple_coeffs;  // expansion in simple roots
  int component = 0;
  int height = 0;  // sum of simple_coeffs
};

// Based root datum of finite type: Cartan data, a chosen cocharacter lattice
// between the coroot and coweight lattices, positive roots, dominance order.
// Immutable after construction.
class RootDatum {
 public:
  RootDatum(std::vector<CartanComponent> type, LatticeChoice choice,
            std::optional<IntMat> intermediate_basis = std::nullopt);

  int rank() const { return rank_; }
  const std::vector<CartanComponent>& components() const { return type_; }
  int num_components() const { return static_cast<int>(type_.size()); }
  int component_of_node(int i) const { return node_component_[i]; }
  LatticeChoice lattice_choice() const { return choice_; }
  std::string type_string() const;

  // cartan()[i][j] = <alpha_j, alpha_i^vee>
  const IntMat& cartan() const { return cartan_; }

  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Root& simple_root(int i) const { return positive_roots_[simple_index_[i]]; }
  // the highest root of one irreducible component
  const Root& highest_root(int component) const {
    return positive_roots_[highest_index_[component]];
  }

  // basis vectors of the chosen lattice, in fundamental-coweight coordinates
  const IntMat& basis_in_coweight() const { return basis_in_coweight_; }

  Int pairing(const Root& alpha, const IntVec& lambda) const { return dot(alpha.dual, lambda); }
  Rat pairing(const Root& alpha, const RatVec& lambda) const { return dot(alpha.dual, lambda); }

  // <lambda, 2 rho> = sum of pairings with all positive roots
  Int rho_pairing(const IntVec& lambda) const;
  Rat rho_pairing(const RatVec& lambda) const;

  bool is_dominant(const IntVec& lambda) const;
  bool is_dominant(const RatVec& lambda) const;

  // lambda - <alpha, lambda> alpha^vee for simple root i
  IntVec simple_reflect(int i, const IntVec& lambda) const;
  RatVec simple_reflect(int i, const RatVec& lambda) const;

  // dominance order on dominant rational coweights: nu <= nu' iff the
  // difference is a nonnegative rational combination of simple coroots.
  // Throws std::invalid_argument on non-dominant input.
  bool dominance_leq(const RatVec& nu, const RatVec& nu_prime) const;

  // pi1 = lattice / coroot lattice; canonical label of a coset
  const IntVec& pi1_orders() const { return pi1_.diag; }
  IntVec pi1_label(const IntVec& lambda) const;
  bool pi1_trivial() const;

 private:
  void build_cartan();
  void build_lattice(const std::optional<IntMat>& intermediate_basis);
  void generate_roots();

  std::vector<CartanComponent> type_;
  LatticeChoice choice_;
  int rank_ = 0;
  IntMat cartan_;
  std::vector<int> node_component_;
  IntMat basis_in_coweight_;
  std::vector<Root> positive_roots_;
  std::vector<int> simple_index_;
  std::vector<int> highest_index_;
  SmithForm pi1_;  // of the coroot matrix in the lattice basis
};

// expected number of positive roots of an irreducible series, for validation
int positive_root_count(char series, int rank);

}  // namespace iwahori
