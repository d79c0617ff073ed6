#include "iwahori/classes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace iwahori {

std::pair<WElem, bool> sigma_step(const FrobeniusTwist& tw, const WElem& w,
                                  int s) {
  const AffineWeyl& aw = tw.aw();
  const WElem left = aw.simple(s);
  const WElem right = aw.simple(tw.apply_to_simple(s));
  WElem out = aw.mul(aw.mul(left, w), right);
  return {out, aw.length(out) <= aw.length(w)};
}

WElem reduce_to_minimal(const FrobeniusTwist& tw, const WElem& w,
                        std::vector<int>* path, std::size_t cap) {
  const AffineWeyl& aw = tw.aw();
  WElem cur = w;
  while (true) {
    const int len = aw.length(cur);
    bool dropped = false;
    for (int s = 0; s < aw.num_simple() && !dropped; ++s) {
      WElem next = sigma_step(tw, cur, s).first;
      if (aw.length(next) < len) {
        if (path) path->push_back(s);
        cur = next;
        dropped = true;
      }
    }
    if (dropped) continue;

    // plateau: BFS the length-preserving orbit looking for a strict drop
    std::map<WElem, std::pair<WElem, int>> parent;  // node -> (prev, letter)
    std::deque<WElem> work{cur};
    parent.emplace(cur, std::make_pair(cur, -1));
    WElem drop_from = cur, drop_to = cur;
    int drop_letter = -1;
    while (!work.empty() && drop_letter < 0) {
      WElem x = work.front();
      work.pop_front();
      for (int s = 0; s < aw.num_simple(); ++s) {
        WElem next = sigma_step(tw, x, s).first;
        const int ln = aw.length(next);
        if (ln < len) {
          drop_from = x;
          drop_to = next;
          drop_letter = s;
          break;
        }
        if (ln == len && parent.emplace(next, std::make_pair(x, s)).second) {
          if (parent.size() > cap)
            throw std::runtime_error("length-preserving orbit exceeds cap");
          work.push_back(next);
        }
      }
    }
    if (drop_letter < 0) return cur;  // whole plateau explored: cur is minimal
    if (path) {
      std::vector<int> chain{drop_letter};
      for (WElem x = drop_from; !(x == cur); x = parent.at(x).first)
        chain.push_back(parent.at(x).second);
      path->insert(path->end(), chain.rbegin(), chain.rend());
    }
    cur = drop_to;
  }
}

namespace {

struct NewtonData {
  RatVec nu;  // dominant
  int n = 0;
  WElem power;  // (w sigma)^n as a translation
};

NewtonData newton_data(const FrobeniusTwist& tw, const WElem& w) {
  const AffineWeyl& aw = tw.aw();
  const int ord = tw.order();
  std::vector<WElem> imgs(ord);
  imgs[0] = w;
  for (int i = 1; i < ord; ++i) imgs[i] = tw.apply(imgs[i - 1]);
  WElem y = aw.identity_elem();
  const int limit = ord * aw.w0().size();
  for (int n = 1; n <= limit; ++n) {
    y = aw.mul(y, imgs[(n - 1) % ord]);
    if (n % ord != 0 || y.w != aw.w0().identity()) continue;
    RatVec nu(aw.rank());
    for (int k = 0; k < aw.rank(); ++k) nu[k] = Rat(y.lambda[k], Int(n));
    return {aw.w0().dominant_representative(nu).first, n, y};
  }
  throw std::logic_error("no translation power of w sigma found");
}

}  // namespace

RatVec newton_point(const FrobeniusTwist& tw, const WElem& w) {
  return newton_data(tw, w).nu;
}

bool is_straight(const FrobeniusTwist& tw, const WElem& w) {
  const AffineWeyl& aw = tw.aw();
  const NewtonData nd = newton_data(tw, w);
  const bool by_pairing = Rat(aw.length(w)) == aw.datum().rho_pairing(nd.nu);
  const bool by_power = aw.length(nd.power) == nd.n * aw.length(w);
  if (by_pairing != by_power)
    throw std::logic_error("straightness criteria disagree");
  return by_pairing;
}

namespace {

// The length-preserving orbit of w under x -> s x sigma(s), in BFS order with
// w first; parents kept so callers can reconstruct witness chains.
struct Plateau {
  std::vector<WElem> order;
  std::map<WElem, std::pair<WElem, int>> parent;
};

Plateau plateau_orbit(const FrobeniusTwist& tw, const WElem& w, std::size_t cap) {
  const AffineWeyl& aw = tw.aw();
  const int len = aw.length(w);
  Plateau p;
  p.order.push_back(w);
  p.parent.emplace(w, std::make_pair(w, -1));
  for (size_t head = 0; head < p.order.size(); ++head) {
    WElem x = p.order[head];
    for (int s = 0; s < aw.num_simple(); ++s) {
      WElem next = sigma_step(tw, x, s).first;
      if (aw.length(next) != len) continue;
      if (p.parent.emplace(next, std::make_pair(x, s)).second) {
        if (p.parent.size() > cap)
          throw std::runtime_error("length-preserving orbit exceeds cap");
        p.order.push_back(next);
      }
    }
  }
  return p;
}

std::vector<int> chain_from(const Plateau& p, const WElem& root, WElem x) {
  std::vector<int> chain;
  for (; !(x == root); x = p.parent.at(x).first) chain.push_back(p.parent.at(x).second);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

// subsets of {0..m-1} ordered by (size, lexicographic on sorted members)
std::vector<std::vector<int>> subsets_by_size(int m) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> j;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) j.push_back(i);
    out.push_back(std::move(j));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

StraightDecomposition straight_decomposition(const FrobeniusTwist& tw,
                                             const WElem& w_min,
                                             std::size_t cap) {
  const AffineWeyl& aw = tw.aw();
  const Plateau orbit = plateau_orbit(tw, w_min, cap);
  for (const auto& j : subsets_by_size(aw.num_simple())) {
    if (!aw.wj_finite(j)) continue;
    std::vector<int> sigma_j;
    for (int s : j) sigma_j.push_back(tw.apply_to_simple(s));
    std::sort(sigma_j.begin(), sigma_j.end());
    for (const WElem& base : orbit.order) {
      WElem x = aw.coset_min(base, j, {});
      if (!aw.is_min_coset_rep_right(x, sigma_j)) continue;
      // x sigma(J) x^{-1} = J as sets of simple reflections
      const WElem xinv = aw.inv(x);
      bool stable = true;
      for (int s : sigma_j) {
        WElem conj = aw.mul(aw.mul(x, aw.simple(s)), xinv);
        bool in_j = false;
        for (int t : j)
          if (conj == aw.simple(t)) in_j = true;
        if (!in_j) {
          stable = false;
          break;
        }
      }
      if (!stable || !is_straight(tw, x)) continue;
      StraightDecomposition out;
      out.j = j;
      out.x = x;
      out.u = aw.mul(base, aw.inv(x));
      out.base = base;
      out.moves = chain_from(orbit, w_min, base);
      return out;
    }
  }
  throw std::logic_error("no straight factorization of a minimal element");
}

SigmaClass straight_class_of(const FrobeniusTwist& tw, const WElem& x,
                             std::size_t cap) {
  const AffineWeyl& aw = tw.aw();
  const int len = aw.length(x);
  std::set<WElem> seen{x};
  std::deque<WElem> work{x};
  while (!work.empty()) {
    WElem y = work.front();
    work.pop_front();
    std::vector<WElem> next;
    for (int s = 0; s < aw.num_simple(); ++s) {
      WElem z = sigma_step(tw, y, s).first;
      if (aw.length(z) < len)
        throw std::logic_error("straight element is not class-minimal");
      if (aw.length(z) == len) next.push_back(std::move(z));
    }
    for (const WElem& o : aw.omega())
      next.push_back(aw.mul(aw.mul(o, y), aw.inv(tw.apply(o))));
    for (WElem& z : next)
      if (seen.insert(z).second) {
        if (seen.size() > cap)
          throw std::runtime_error("minimal-element orbit exceeds cap");
        work.push_back(z);
      }
  }
  SigmaClass cls;
  cls.min_reps.assign(seen.begin(), seen.end());
  cls.newton = newton_point(tw, x);
  cls.kappa = tw.kottwitz_kappa(x);
  cls.straight = is_straight(tw, x);
  cls.min_length = len;
  return cls;
}

SigmaClass psi(const FrobeniusTwist& tw, const WElem& w) {
  WElem w_min = reduce_to_minimal(tw, w);
  return straight_class_of(tw, straight_decomposition(tw, w_min).x);
}

std::vector<SigmaClass> enumerate_straight_classes(const FrobeniusTwist& tw,
                                                   int bound) {
  const AffineWeyl& aw = tw.aw();
  std::set<WElem> assigned;
  std::map<std::pair<RatVec, IntVec>, SigmaClass> by_invariant;
  for (const WElem& w : aw.enumerate_by_length(bound)) {
    if (assigned.count(w) || !is_straight(tw, w)) continue;
    SigmaClass cls = straight_class_of(tw, w);
    assigned.insert(cls.min_reps.begin(), cls.min_reps.end());
    auto key = std::make_pair(cls.newton, cls.kappa.label);
    auto [it, fresh] = by_invariant.emplace(std::move(key), cls);
    if (!fresh && !(it->second == cls))
      throw std::logic_error("distinct straight classes share (newton, kappa)");
  }
  std::vector<SigmaClass> out;
  for (auto& [k, cls] : by_invariant) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end());
  return out;
}

bool preceq_element(const FrobeniusTwist& tw, const SigmaClass& o,
                    const WElem& w) {
  for (const WElem& rep : o.min_reps)
    if (tw.aw().bruhat_leq(rep, w)) return true;
  return false;
}

bool preceq_classes(const FrobeniusTwist& tw, const SigmaClass& o,
                    const SigmaClass& o_prime) {
  for (const WElem& w : o_prime.min_reps)
    if (preceq_element(tw, o, w)) return true;
  return false;
}

StraightPoset straight_poset(const FrobeniusTwist& tw, int bound) {
  StraightPoset p;
  p.classes = enumerate_straight_classes(tw, bound);
  const int n = static_cast<int>(p.classes.size());
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) rel[i][j] = preceq_classes(tw, p.classes[i], p.classes[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!rel[i][j]) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k)
        if (rel[i][k] && rel[k][j]) covered = false;
      if (covered) p.hasse.emplace_back(i, j);
    }
  return p;
}

}  // namespace iwahori
