#include "iwahori/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace iwahori {

namespace {
constexpr size_t kClosureCap = 1u << 20;
}

WeylGroup::WeylGroup(const RootDatum& datum) : datum_(&datum) {
  const int n = datum.rank();
  std::vector<IntMat> gens(n);
  for (int i = 0; i < n; ++i) {
    const Root& a = datum.simple_root(i);
    IntMat m = identity_matrix(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m[r][c] -= a.coroot[r] * a.dual[c];
    gens[i] = std::move(m);
  }

  action_.push_back(identity_matrix(n));
  word_.push_back({});
  length_.push_back(0);
  index_[action_[0]] = 0;
  // BFS gives reduced words
  for (size_t head = 0; head < action_.size(); ++head) {
    const IntMat cur = action_[head];
    const std::vector<int> cur_word = word_[head];
    for (int i = 0; i < n; ++i) {
      IntMat next = mat_mul(gens[i], cur);
      if (index_.emplace(next, static_cast<int>(action_.size())).second) {
        std::vector<int> w{i};
        w.insert(w.end(), cur_word.begin(), cur_word.end());
        action_.push_back(std::move(next));
        word_.push_back(std::move(w));
        length_.push_back(length_[head] + 1);
      }
    }
    if (action_.size() > kClosureCap)
      throw std::runtime_error("finite Weyl group closure exceeded cap");
  }

  const int sz = size();
  gen_index_.resize(n);
  for (int i = 0; i < n; ++i) gen_index_[i] = index_.at(gens[i]);
  mul_table_.resize(static_cast<size_t>(sz) * sz);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b)
      mul_table_[a * sz + b] = index_.at(mat_mul(action_[a], action_[b]));
  inverse_.assign(sz, -1);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b)
      if (mul(a, b) == 0) inverse_[a] = b;
}

int WeylGroup::index_of(const IntMat& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::relabel(int a, const std::vector<int>& p) const {
  int out = identity();
  for (int letter : word(a)) out = mul(out, generator(p[letter]));
  return out;
}

std::pair<RatVec, int> WeylGroup::dominant_representative(const RatVec& nu) const {
  RatVec v = nu;
  int x = identity();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < datum_->rank(); ++i) {
      if (dot(datum_->simple_root(i).dual, v) < 0) {
        v = datum_->simple_reflect(i, v);
        x = mul(generator(i), x);
        moved = true;
        break;
      }
    }
  }
  return {v, x};
}

std::pair<IntVec, int> WeylGroup::dominant_representative(const IntVec& lambda) const {
  auto [v, x] = dominant_representative(to_rat(lambda));
  return {*to_int(v), x};
}

AffineWeyl::AffineWeyl(const RootDatum& datum) : datum_(&datum), w0_(datum) {
  const int n = rank();
  // sign table for all roots, keyed by dual coordinates
  for (const Root& r : datum.positive_roots()) {
    root_positive_[r.dual] = true;
    root_positive_[vec_neg(r.dual)] = false;
  }
  // w^{-1}(alpha) positivity: coords of w^{-1} alpha are matrix(w)^T alpha
  const int nroots = static_cast<int>(datum.positive_roots().size());
  winv_positive_.assign(w0_.size(), std::vector<bool>(nroots));
  for (int w = 0; w < w0_.size(); ++w) {
    const IntMat mt = mat_transpose(w0_.matrix(w));
    for (int r = 0; r < nroots; ++r) {
      const IntVec img = mat_apply(mt, datum.positive_roots()[r].dual);
      winv_positive_[w][r] = root_positive_.at(img);
    }
  }

  // simple reflections: finite ones, then one affine node per component
  for (int i = 0; i < n; ++i) simple_.push_back(finite(w0_.generator(i)));
  for (int c = 0; c < datum.num_components(); ++c) {
    const Root& theta = datum.highest_root(c);
    IntMat m = identity_matrix(n);
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col) m[r][col] -= theta.coroot[r] * theta.dual[col];
    const int s_theta = w0_.index_of(m);
    if (s_theta < 0) throw std::runtime_error("reflection s_theta not in W0 table");
    simple_.push_back(WElem{theta.coroot, s_theta});  // t^{theta^vee} s_theta
  }

  // Omega: one length-zero element per pi1 coset, found by greedy descent
  // from a translation representative
  IntVec orders = datum.pi1_orders();
  for (Int d : orders)
    if (d == 0) throw std::runtime_error("pi1 has free part; datum not semisimple");
  // walk the cosets of the coroot lattice by unit steps from zero
  std::map<IntVec, IntVec> coset_rep;  // pi1 label -> some lambda
  std::deque<IntVec> work;
  IntVec zero(n, 0);
  coset_rep[datum.pi1_label(zero)] = zero;
  work.push_back(zero);
  Int group_order = 1;
  for (Int d : orders) group_order *= d;
  while (!work.empty() && static_cast<Int>(coset_rep.size()) < group_order) {
    IntVec lam = work.front();
    work.pop_front();
    for (int i = 0; i < n; ++i) {
      for (Int delta : {Int(1), Int(-1)}) {
        IntVec nxt = lam;
        nxt[i] += delta;
        if (coset_rep.emplace(datum.pi1_label(nxt), nxt).second) work.push_back(nxt);
      }
    }
  }
  if (static_cast<Int>(coset_rep.size()) != group_order)
    throw std::runtime_error("failed to enumerate pi1 cosets");

  for (const auto& [label, lam] : coset_rep) {
    WElem x = translation(lam);
    int len = length(x);
    while (len > 0) {
      bool dropped = false;
      for (int s = 0; s < num_simple(); ++s) {
        WElem y = mul(simple_[s], x);
        const int ly = length(y);
        if (ly < len) {
          x = std::move(y);
          len = ly;
          dropped = true;
          break;
        }
      }
      if (!dropped) throw std::runtime_error("no descent while seeking Omega element");
    }
    omega_.push_back(x);
    omega_by_label_[label] = static_cast<int>(omega_.size()) - 1;
  }
  // coset_rep is a std::map keyed by label, so omega_ is label-ordered and
  // omega_[0] (label all-zero) is the identity
  assert(omega_[0] == identity_elem());
}

WElem AffineWeyl::mul(const WElem& x, const WElem& y) const {
  WElem out;
  out.lambda = vec_add(x.lambda, w0_.apply(x.w, y.lambda));
  out.w = w0_.mul(x.w, y.w);
  return out;
}

WElem AffineWeyl::inv(const WElem& x) const {
  const int wi = w0_.inverse(x.w);
  return WElem{vec_neg(w0_.apply(wi, x.lambda)), wi};
}

int AffineWeyl::length(const WElem& x) const {
  const auto& roots = datum_->positive_roots();
  Int len = 0;
  for (size_t r = 0; r < roots.size(); ++r) {
    const Int p = dot(roots[r].dual, x.lambda);
    if (winv_positive_[x.w][r]) {
      len += p < 0 ? -p : p;
    } else {
      const Int q = p - 1;
      len += q < 0 ? -q : q;
    }
  }
  return static_cast<int>(len);
}

AffineWeyl::Word AffineWeyl::reduced_word(const WElem& x) const {
  Word out;
  WElem cur = x;
  int len = length(cur);
  while (len > 0) {
    bool dropped = false;
    for (int s = 0; s < num_simple(); ++s) {
      WElem y = mul(simple_[s], cur);
      const int ly = length(y);
      if (ly < len) {
        out.letters.push_back(s);
        cur = std::move(y);
        len = ly;
        dropped = true;
        break;
      }
    }
    if (!dropped) throw std::runtime_error("element of positive length has no descent");
  }
  out.omega = omega_component(cur);
  assert(omega_[out.omega] == cur);
  return out;
}

WElem AffineWeyl::from_word(const Word& w) const {
  WElem out = identity_elem();
  for (int s : w.letters) out = mul(out, simple_[s]);
  return mul(out, omega_[w.omega]);
}

bool AffineWeyl::descent(const WElem& x, int s, bool left) const {
  const WElem y = left ? mul(simple_[s], x) : mul(x, simple_[s]);
  return length(y) < length(x);
}

int AffineWeyl::omega_component(const WElem& x) const {
  return omega_by_label_.at(datum_->pi1_label(x.lambda));
}

uint32_t AffineWeyl::elem_id(const WElem& x) const {
  auto [it, inserted] = elem_ids_.emplace(x, static_cast<uint32_t>(elem_ids_.size()));
  return it->second;
}

bool AffineWeyl::bruhat_leq(const WElem& x, const WElem& y) const {
  std::lock_guard<std::mutex> lock(bruhat_mu_);
  return bruhat_leq_locked(x, y);
}

bool AffineWeyl::bruhat_leq_locked(const WElem& x, const WElem& y) const {
  if (x == y) return true;
  if (omega_component(x) != omega_component(y)) return false;
  const int lx = length(x), ly = length(y);
  if (lx >= ly) return false;  // equal length + distinct => incomparable
  const uint64_t key = (static_cast<uint64_t>(elem_id(x)) << 32) | elem_id(y);
  auto it = bruhat_memo_.find(key);
  if (it != bruhat_memo_.end()) return it->second;
  // lifting property on a left descent of y
  int s = -1;
  for (int i = 0; i < num_simple(); ++i) {
    if (length(mul(simple_[i], y)) < ly) {
      s = i;
      break;
    }
  }
  assert(s >= 0);
  const WElem sy = mul(simple_[s], y);
  const WElem sx = mul(simple_[s], x);
  const bool res = length(sx) < lx ? bruhat_leq_locked(sx, sy) : bruhat_leq_locked(x, sy);
  bruhat_memo_.emplace(key, res);
  return res;
}

std::vector<WElem> AffineWeyl::enumerate_by_length(int bound) const {
  if (bound < 0) return {};
  std::lock_guard<std::mutex> lock(enum_mu_);
  // a ball is a prefix of any larger ball in the (length, key) order
  auto it = enum_memo_.lower_bound(bound);
  if (it != enum_memo_.end()) {
    if (it->first == bound) return it->second;
    std::vector<WElem> out;
    for (const WElem& x : it->second) {
      if (length(x) > bound) break;
      out.push_back(x);
    }
    return out;
  }
  return enum_memo_.emplace(bound, compute_enumeration(bound)).first->second;
}

void AffineWeyl::validate_enumeration(int bound,
                                      const std::vector<WElem>& elems) const {
  std::unordered_set<WElem, WElemHash> set(elems.begin(), elems.end());
  if (set.size() != elems.size())
    throw std::invalid_argument("enumeration table has duplicates");
  for (const WElem& o : omega_)
    if (!set.count(o))
      throw std::invalid_argument("enumeration table misses a length-0 element");
  for (const WElem& x : elems) {
    const int len = length(x);
    if (len > bound)
      throw std::invalid_argument("enumeration table exceeds the bound");
    if (len == bound) continue;
    for (int s = 0; s < num_simple(); ++s) {
      WElem y = mul(x, simple_[s]);
      if (length(y) == len + 1 && !set.count(y))
        throw std::invalid_argument("enumeration table is not upward closed");
    }
  }
}

void AffineWeyl::preload_enumeration(int bound, std::vector<WElem> elems) const {
  if (bound < 0) throw std::invalid_argument("negative enumeration bound");
  validate_enumeration(bound, elems);
  std::sort(elems.begin(), elems.end(), [&](const WElem& a, const WElem& b) {
    const int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  std::lock_guard<std::mutex> lock(enum_mu_);
  enum_memo_.emplace(bound, std::move(elems));
}

std::vector<WElem> AffineWeyl::compute_enumeration(int bound) const {
  std::vector<WElem> out;
  std::unordered_set<WElem, WElemHash> seen;
  std::deque<std::pair<WElem, int>> work;
  for (const WElem& o : omega_) {
    seen.insert(o);
    work.emplace_back(o, 0);
  }
  while (!work.empty()) {
    auto [x, len] = work.front();
    work.pop_front();
    out.push_back(x);
    if (len == bound) continue;
    for (int s = 0; s < num_simple(); ++s) {
      WElem y = mul(x, simple_[s]);
      if (length(y) == len + 1 && seen.insert(y).second) work.emplace_back(y, len + 1);
    }
    if (seen.size() > kClosureCap) throw std::runtime_error("enumeration exceeded cap");
  }
  std::sort(out.begin(), out.end(), [&](const WElem& a, const WElem& b) {
    const int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

std::vector<WElem> AffineWeyl::enumerate_coset_by_length(int bound, int omega_index) const {
  std::vector<WElem> all = enumerate_by_length(bound);
  std::vector<WElem> out;
  for (WElem& x : all)
    if (omega_component(x) == omega_index) out.push_back(std::move(x));
  return out;
}

bool AffineWeyl::wj_finite(const std::vector<int>& j) const {
  // W_J is finite iff J misses at least one node of every affine component
  std::vector<int> count(datum_->num_components(), 0);
  for (int s : j) {
    if (s < 0 || s >= num_simple()) throw std::invalid_argument("bad S~ index");
    const int c = s < rank() ? datum_->component_of_node(s) : s - rank();
    ++count[c];
  }
  for (int c = 0; c < datum_->num_components(); ++c)
    if (count[c] == datum_->components()[c].rank + 1) return false;
  return true;
}

std::vector<WElem> AffineWeyl::wj_elements(const std::vector<int>& j) const {
  if (!wj_finite(j)) throw std::invalid_argument("W_J is infinite");
  std::set<WElem> seen{identity_elem()};
  std::deque<WElem> work{identity_elem()};
  while (!work.empty()) {
    WElem x = work.front();
    work.pop_front();
    for (int s : j) {
      WElem y = mul(x, simple_[s]);
      if (seen.insert(y).second) work.push_back(y);
    }
    if (seen.size() > kClosureCap) throw std::runtime_error("W_J closure exceeded cap");
  }
  return {seen.begin(), seen.end()};
}

std::string AffineWeyl::describe(const WElem& x) const {
  std::string out = "t[";
  for (size_t i = 0; i < x.lambda.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x.lambda[i]);
  }
  out += "]";
  for (int s : w0_.word(x.w)) out += "*s" + std::to_string(s + 1);
  return out;
}

WElem AffineWeyl::coset_min(const WElem& x, const std::vector<int>& j_left,
                            const std::vector<int>& j_right) const {
  WElem cur = x;
  int len = length(cur);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : j_left) {
      WElem y = mul(simple_[s], cur);
      if (length(y) < len) {
        cur = std::move(y);
        --len;
        moved = true;
      }
    }
    for (int s : j_right) {
      WElem y = mul(cur, simple_[s]);
      if (length(y) < len) {
        cur = std::move(y);
        --len;
        moved = true;
      }
    }
  }
  return cur;
}

WElem AffineWeyl::coset_max(const WElem& x, const std::vector<int>& j_left,
                            const std::vector<int>& j_right) const {
  if (!wj_finite(j_left) || !wj_finite(j_right))
    throw std::invalid_argument("coset_max requires finite W_J");
  // enumerate the whole double coset; it is finite and small here
  std::set<WElem> seen{x};
  std::deque<WElem> work{x};
  while (!work.empty()) {
    WElem cur = work.front();
    work.pop_front();
    for (int s : j_left) {
      WElem y = mul(simple_[s], cur);
      if (seen.insert(y).second) work.push_back(y);
    }
    for (int s : j_right) {
      WElem y = mul(cur, simple_[s]);
      if (seen.insert(y).second) work.push_back(y);
    }
    if (seen.size() > kClosureCap) throw std::runtime_error("double coset exceeded cap");
  }
  const WElem* best = nullptr;
  int best_len = -1;
  int ties = 0;
  for (const WElem& e : seen) {
    const int l = length(e);
    if (l > best_len) {
      best = &e;
      best_len = l;
      ties = 1;
    } else if (l == best_len) {
      ++ties;
    }
  }
  if (ties != 1) throw std::runtime_error("double coset maximum is not unique");
  return *best;
}

bool AffineWeyl::is_min_coset_rep_left(const WElem& x, const std::vector<int>& j) const {
  const int len = length(x);
  for (int s : j)
    if (length(mul(simple_[s], x)) < len) return false;
  return true;
}

bool AffineWeyl::is_min_coset_rep_right(const WElem& x, const std::vector<int>& j) const {
  const int len = length(x);
  for (int s : j)
    if (length(mul(x, simple_[s])) < len) return false;
  return true;
}

}  // namespace iwahori
