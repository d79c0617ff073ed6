#include "iwahori/rootdata.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace iwahori {

int positive_root_count(char series, int rank) {
  switch (series) {
    case 'A': return rank * (rank + 1) / 2;
    case 'B':
    case 'C': return rank * rank;
    case 'D': return rank * (rank - 1);
    case 'E': return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

namespace {

void validate_component(const CartanComponent& c) {
  const char s = c.series;
  const int n = c.rank;
  bool ok = false;
  switch (s) {
    case 'A': ok = n >= 1; break;
    case 'B':
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n == 6 || n == 7 || n == 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: ok = false;
  }
  if (!ok)
    throw std::invalid_argument("unknown Cartan type " + std::string(1, s) +
                                std::to_string(n));
  if (n > 8) throw std::invalid_argument("rank > 8 not supported");
}

// Fills the block for one component into c, offset by base.
// Convention: c[i][j] = <alpha_j, alpha_i^vee>.
void fill_cartan_block(IntMat& c, int base, char series, int n) {
  for (int i = 0; i < n; ++i) c[base + i][base + i] = 2;
  auto edge = [&](int i, int j, Int cij, Int cji) {
    c[base + i][base + j] = cij;  // <alpha_j, alpha_i^vee>
    c[base + j][base + i] = cji;
  };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -1, -1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1, -1);
      edge(n - 2, n - 1, -1, -2);
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1, -1);
      edge(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1, -1);
      edge(n - 3, n - 1, -1, -1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to 4
      edge(0, 2, -1, -1);
      edge(1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, -1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      edge(0, 1, -1, -1);
      edge(1, 2, -2, -1);
      edge(2, 3, -1, -1);
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      edge(0, 1, -3, -1);
      break;
  }
}

}  // namespace

RootDatum::RootDatum(std::vector<CartanComponent> type, LatticeChoice choice,
                     std::optional<IntMat> intermediate_basis)
    : type_(std::move(type)), choice_(choice) {
  if (type_.empty()) throw std::invalid_argument("empty Cartan type");
  for (const auto& c : type_) validate_component(c);
  rank_ = 0;
  for (const auto& c : type_) {
    for (int i = 0; i < c.rank; ++i)
      node_component_.push_back(static_cast<int>(&c - type_.data()));
    rank_ += c.rank;
  }
  if (rank_ > 8) throw std::invalid_argument("total rank > 8 not supported");
  build_cartan();
  build_lattice(intermediate_basis);
  generate_roots();
  pi1_ = [&] {
    IntMat coroot_cols(rank_, IntVec(rank_));
    for (int j = 0; j < rank_; ++j)
      for (int i = 0; i < rank_; ++i) coroot_cols[i][j] = simple_root(j).coroot[i];
    return smith_normal_form(coroot_cols, rank_, rank_);
  }();
}

std::string RootDatum::type_string() const {
  std::string s;
  for (const auto& c : type_) {
    if (!s.empty()) s += "x";
    s += c.series;
    s += std::to_string(c.rank);
  }
  return s;
}

void RootDatum::build_cartan() {
  cartan_.assign(rank_, IntVec(rank_, 0));
  int base = 0;
  for (const auto& c : type_) {
    fill_cartan_block(cartan_, base, c.series, c.rank);
    base += c.rank;
  }
}

void RootDatum::build_lattice(const std::optional<IntMat>& intermediate_basis) {
  switch (choice_) {
    case LatticeChoice::SimplyConnected:
      // basis = simple coroots; coroot_j in coweight coordinates is row j of
      // the Cartan matrix, so the basis matrix is its transpose
      basis_in_coweight_ = mat_transpose(cartan_);
      break;
    case LatticeChoice::Adjoint:
      basis_in_coweight_ = identity_matrix(rank_);
      break;
    case LatticeChoice::Intermediate: {
      if (!intermediate_basis)
        throw std::invalid_argument("intermediate lattice requires a basis");
      const IntMat& rows = *intermediate_basis;
      if (static_cast<int>(rows.size()) != rank_)
        throw std::invalid_argument("intermediate basis must have rank vectors");
      for (const auto& r : rows)
        if (static_cast<int>(r.size()) != rank_)
          throw std::invalid_argument("intermediate basis vector of wrong dimension");
      basis_in_coweight_ = mat_transpose(rows);  // columns = basis vectors
      if (!rat_inverse(basis_in_coweight_))
        throw std::invalid_argument("intermediate basis is singular");
      break;
    }
  }
}

void RootDatum::generate_roots() {
  const auto binv = rat_inverse(basis_in_coweight_);
  if (!binv) throw std::invalid_argument("lattice basis is singular");

  std::vector<Root> simples(rank_);
  for (int j = 0; j < rank_; ++j) {
    Root& r = simples[j];
    r.simple_coeffs.assign(rank_, 0);
    r.simple_coeffs[j] = 1;
    r.component = node_component_[j];
    r.height = 1;
    // dual coords of alpha_j against basis columns: row j of the basis matrix
    r.dual = basis_in_coweight_[j];
    // coroot_j: coweight coords = row j of Cartan; convert to basis coords
    RatVec cw = to_rat(cartan_[j]);
    RatVec x(rank_, Rat(0));
    for (int i = 0; i < rank_; ++i)
      for (int k = 0; k < rank_; ++k) x[i] += (*binv)[i][k] * cw[k];
    auto xi = to_int(x);
    if (!xi)
      throw std::invalid_argument(
          "lattice does not contain the coroot lattice");
    r.coroot = *xi;
  }

  auto reflect_cowt = [&](int i, const IntVec& lambda) {
    const Int p = dot(simples[i].dual, lambda);
    IntVec out = lambda;
    for (int k = 0; k < rank_; ++k) out[k] -= p * simples[i].coroot[k];
    return out;
  };

  std::map<IntVec, Root> seen;  // keyed by simple_coeffs
  std::vector<Root> work = simples;
  for (const auto& r : simples) seen.emplace(r.simple_coeffs, r);
  while (!work.empty()) {
    Root r = work.back();
    work.pop_back();
    for (int i = 0; i < rank_; ++i) {
      const Int p = dot(r.dual, simples[i].coroot);  // <r, alpha_i^vee>
      Root img;
      img.dual = r.dual;
      for (int k = 0; k < rank_; ++k) img.dual[k] -= p * simples[i].dual[k];
      img.coroot = reflect_cowt(i, r.coroot);
      img.simple_coeffs = r.simple_coeffs;
      img.simple_coeffs[i] -= p;
      img.component = r.component;
      img.height = 0;
      for (Int c : img.simple_coeffs) img.height += static_cast<int>(c);
      if (seen.emplace(img.simple_coeffs, img).second) work.push_back(img);
      if (seen.size() > 2048)
        throw std::invalid_argument("root system closure did not terminate");
    }
  }

  simple_index_.assign(rank_, -1);
  for (const auto& [coeffs, r] : seen) {
    bool nonneg = true, nonpos = true;
    for (Int c : coeffs) {
      if (c < 0) nonneg = false;
      if (c > 0) nonpos = false;
    }
    if (!nonneg && !nonpos)
      throw std::invalid_argument("generated root system is not reduced/finite");
    if (nonneg) positive_roots_.push_back(r);
  }
  // deterministic order: by height then coefficients
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const Root& a, const Root& b) {
              if (a.height != b.height) return a.height < b.height;
              return a.simple_coeffs < b.simple_coeffs;
            });
  for (size_t i = 0; i < positive_roots_.size(); ++i) {
    const Root& r = positive_roots_[i];
    if (r.height == 1)
      for (int j = 0; j < rank_; ++j)
        if (r.simple_coeffs[j] == 1) simple_index_[j] = static_cast<int>(i);
  }

  int expected = 0;
  for (const auto& c : type_) expected += positive_root_count(c.series, c.rank);
  if (static_cast<int>(positive_roots_.size()) != expected)
    throw std::invalid_argument("positive root count mismatch for type " +
                                type_string());

  highest_index_.assign(type_.size(), -1);
  for (size_t i = 0; i < positive_roots_.size(); ++i) {
    const Root& r = positive_roots_[i];
    int& h = highest_index_[r.component];
    if (h < 0 || positive_roots_[h].height < r.height) h = static_cast<int>(i);
  }
}

Int RootDatum::rho_pairing(const IntVec& lambda) const {
  Int s = 0;
  for (const Root& r : positive_roots_) s += dot(r.dual, lambda);
  return s;
}

Rat RootDatum::rho_pairing(const RatVec& lambda) const {
  Rat s = 0;
  for (const Root& r : positive_roots_) s += dot(r.dual, lambda);
  return s;
}

bool RootDatum::is_dominant(const IntVec& lambda) const {
  for (int i = 0; i < rank_; ++i)
    if (dot(simple_root(i).dual, lambda) < 0) return false;
  return true;
}

bool RootDatum::is_dominant(const RatVec& lambda) const {
  for (int i = 0; i < rank_; ++i)
    if (dot(simple_root(i).dual, lambda) < 0) return false;
  return true;
}

IntVec RootDatum::simple_reflect(int i, const IntVec& lambda) const {
  const Root& a = simple_root(i);
  const Int p = dot(a.dual, lambda);
  IntVec out = lambda;
  for (int k = 0; k < rank_; ++k) out[k] -= p * a.coroot[k];
  return out;
}

RatVec RootDatum::simple_reflect(int i, const RatVec& lambda) const {
  const Root& a = simple_root(i);
  const Rat p = dot(a.dual, lambda);
  RatVec out = lambda;
  for (int k = 0; k < rank_; ++k) out[k] -= p * Rat(a.coroot[k]);
  return out;
}

bool RootDatum::dominance_leq(const RatVec& nu, const RatVec& nu_prime) const {
  if (!is_dominant(nu) || !is_dominant(nu_prime))
    throw std::invalid_argument("dominance_leq requires dominant coweights");
  RatVec diff(rank_);
  for (int i = 0; i < rank_; ++i) diff[i] = nu_prime[i] - nu[i];
  IntMat coroot_cols(rank_, IntVec(rank_));
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i) coroot_cols[i][j] = simple_root(j).coroot[i];
  auto c = solve_linear(coroot_cols, diff);
  if (!c) return false;
  for (const Rat& ci : *c)
    if (ci < 0) return false;
  return true;
}

IntVec RootDatum::pi1_label(const IntVec& lambda) const {
  IntVec y = mat_apply(pi1_.u, lambda);
  IntVec label(rank_);
  for (int i = 0; i < rank_; ++i) {
    const Int d = pi1_.diag[i];
    label[i] = d == 0 ? y[i] : ((y[i] % d) + d) % d;
  }
  return label;
}

bool RootDatum::pi1_trivial() const {
  for (Int d : pi1_.diag)
    if (d != 1) return false;
  return true;
}

}  // namespace iwahori
