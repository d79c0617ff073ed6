#include "iwahori/frobenius.hpp"

#include <algorithm>
#include <stdexcept>

namespace iwahori {

FrobeniusTwist::FrobeniusTwist(const AffineWeyl& aw, std::vector<int> sigma0,
                               WElem tau)
    : aw_(&aw), sigma0_(std::move(sigma0)), tau_(std::move(tau)) {
  const RootDatum& d = aw.datum();
  const int n = d.rank();

  if (sigma0_.empty()) {
    sigma0_.resize(n);
    for (int i = 0; i < n; ++i) sigma0_[i] = i;
  }
  if (static_cast<int>(sigma0_.size()) != n)
    throw std::invalid_argument("sigma0 permutation has wrong size");
  std::vector<bool> hit(n, false);
  for (int i : sigma0_) {
    if (i < 0 || i >= n || hit[i])
      throw std::invalid_argument("sigma0 is not a permutation");
    hit[i] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.cartan()[sigma0_[i]][sigma0_[j]] != d.cartan()[i][j])
        throw std::invalid_argument("sigma0 does not preserve the Cartan matrix");

  sigma0_order_ = 1;
  {
    std::vector<int> p = sigma0_;
    while (true) {
      bool id = true;
      for (int i = 0; i < n; ++i)
        if (p[i] != i) id = false;
      if (id) break;
      for (int i = 0; i < n; ++i) p[i] = sigma0_[p[i]];
      ++sigma0_order_;
    }
  }

  // lattice action: permutation of fundamental coweights, transported to the
  // chosen basis; must stay integral
  {
    IntMat perm(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) perm[sigma0_[i]][i] = 1;
    const IntMat& b = d.basis_in_coweight();
    auto binv = rat_inverse(b);
    if (!binv) throw std::invalid_argument("lattice basis is singular");
    const IntMat pb = mat_mul(perm, b);
    RatMat m(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m[i][j] += (*binv)[i][k] * Rat(pb[k][j]);
    sigma0_lattice_.assign(n, IntVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (denominator(m[i][j]) != 1)
          throw std::invalid_argument("sigma0 does not stabilize the lattice");
        sigma0_lattice_[i][j] = static_cast<Int>(numerator(m[i][j]));
      }
  }

  if (tau_.lambda.empty()) tau_ = aw.identity_elem();
  if (aw.length(tau_) != 0)
    throw std::invalid_argument("tau must be a length-zero element");

  // sigma permutes S~
  stilde_perm_.resize(aw.num_simple());
  for (int s = 0; s < aw.num_simple(); ++s) {
    const WElem img = apply(aw.simple(s));
    int found = -1;
    for (int t = 0; t < aw.num_simple(); ++t)
      if (aw.simple(t) == img) found = t;
    if (found < 0)
      throw std::invalid_argument("sigma does not preserve the simple reflections");
    stilde_perm_[s] = found;
  }

  // order of sigma as an automorphism of W~: track images of a generating set
  {
    std::vector<WElem> gens;
    for (int s = 0; s < aw.num_simple(); ++s) gens.push_back(aw.simple(s));
    for (const WElem& o : aw.omega()) gens.push_back(o);
    std::vector<WElem> img = gens;
    order_ = 0;
    do {
      for (WElem& x : img) x = apply(x);
      ++order_;
      if (order_ > 1024) throw std::runtime_error("sigma order not found");
    } while (img != gens);
  }

  // sigma-coinvariants of pi1: Z^n / (coroot lattice + (sigma0 - 1) Z^n)
  {
    IntMat cols(n, IntVec(2 * n, 0));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        cols[i][j] = d.simple_root(j).coroot[i];
        cols[i][n + j] = sigma0_lattice_[i][j] - (i == j ? 1 : 0);
      }
    coinv_ = smith_normal_form(cols, n, 2 * n);
    for (Int x : coinv_.diag)
      if (x == 0) throw std::runtime_error("sigma-coinvariants not finite");
  }
}

bool FrobeniusTwist::is_trivial() const {
  for (size_t i = 0; i < sigma0_.size(); ++i)
    if (sigma0_[i] != static_cast<int>(i)) return false;
  return tau_ == aw_->identity_elem();
}

IntVec FrobeniusTwist::apply_sigma0_lattice(const IntVec& lambda) const {
  return mat_apply(sigma0_lattice_, lambda);
}

RatVec FrobeniusTwist::apply_sigma0_lattice(const RatVec& lambda) const {
  return mat_apply(sigma0_lattice_, lambda);
}

WElem FrobeniusTwist::apply_sigma0(const WElem& x) const {
  return WElem{apply_sigma0_lattice(x.lambda), aw_->w0().relabel(x.w, sigma0_)};
}

WElem FrobeniusTwist::apply(const WElem& x) const {
  return aw_->mul(aw_->mul(tau_, apply_sigma0(x)), aw_->inv(tau_));
}

WElem FrobeniusTwist::apply_power(const WElem& x, int k) const {
  WElem out = x;
  for (int i = 0; i < k; ++i) out = apply(out);
  return out;
}

Pi1Class FrobeniusTwist::kottwitz_kappa(const WElem& x) const {
  IntVec y = mat_apply(coinv_.u, x.lambda);
  IntVec label(y.size());
  for (size_t i = 0; i < y.size(); ++i) {
    const Int d = coinv_.diag[i];
    label[i] = ((y[i] % d) + d) % d;
  }
  return Pi1Class{std::move(label)};
}

RatVec FrobeniusTwist::mu_diamond(const IntVec& mu) const {
  if (!aw_->datum().is_dominant(mu))
    throw std::invalid_argument("mu_diamond requires dominant mu");
  RatVec sum(mu.size(), Rat(0));
  IntVec cur = mu;
  for (int i = 0; i < sigma0_order_; ++i) {
    for (size_t k = 0; k < mu.size(); ++k) sum[k] += Rat(cur[k]);
    cur = apply_sigma0_lattice(cur);
  }
  for (Rat& x : sum) x /= sigma0_order_;
  return sum;
}

Pi1Class FrobeniusTwist::mu_sharp(const IntVec& mu) const {
  return kottwitz_kappa(aw_->translation(mu));
}

bool FrobeniusTwist::stabilizes(const std::vector<int>& j) const {
  std::vector<int> a = j, b;
  for (int s : j) b.push_back(stilde_perm_[s]);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace iwahori
