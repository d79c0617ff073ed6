#include "iwahori/numeric.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace iwahori {

IntMat identity_matrix(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int m = k ? static_cast<int>(b[0].size()) : 0;
  IntMat out(n, IntVec(m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      const Int aij = a[i][j];
      if (aij == 0) continue;
      for (int l = 0; l < m; ++l) out[i][l] += aij * b[j][l];
    }
  return out;
}

IntVec mat_apply(const IntMat& m, const IntVec& v) {
  IntVec out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

RatVec mat_apply(const IntMat& m, const RatVec& v) {
  RatVec out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += Rat(m[i][j]) * v[j];
  return out;
}

IntMat mat_transpose(const IntMat& m) {
  if (m.empty()) return {};
  IntMat out(m[0].size(), IntVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[0].size(); ++j) out[j][i] = m[i][j];
  return out;
}

Int dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec vec_neg(const IntVec& a) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool is_zero(const IntVec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

RatVec to_rat(const IntVec& a) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = Rat(a[i]);
  return out;
}

std::optional<IntVec> to_int(const RatVec& a) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (denominator(a[i]) != 1) return std::nullopt;
    out[i] = static_cast<Int>(numerator(a[i]));
  }
  return out;
}

std::optional<RatMat> rat_inverse(const IntMat& m) {
  const int n = static_cast<int>(m.size());
  RatMat a(n, RatVec(n)), inv(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    inv[i][i] = 1;
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rat p = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<RatVec> solve_linear(const IntMat& m, const RatVec& rhs) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  RatMat a(rows, RatVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a[i][j] = Rat(m[i][j]);
    a[i][cols] = rhs[i];
  }
  std::vector<int> pivot_col(rows, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    const Rat p = a[r][c];
    for (int j = c; j <= cols; ++j) a[r][j] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (int j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col[r] = c;
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = a[i][cols];
  return x;
}

SmithForm smith_normal_form(IntMat a, int rows, int cols) {
  for (auto& row : a) row.resize(cols, 0);
  a.resize(rows, IntVec(cols, 0));
  IntMat u = identity_matrix(rows);

  auto swap_rows = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto add_row = [&](int dst, int src, Int f) {  // row dst += f * row src
    for (int j = 0; j < cols; ++j) a[dst][j] += f * a[src][j];
    for (int j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
  };
  auto negate_row = [&](int i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  };
  auto swap_cols = [&](int i, int j) {
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  auto add_col = [&](int dst, int src, Int f) {
    for (auto& row : a) row[dst] += f * row[src];
  };

  const int k = std::min(rows, cols);
  for (int t = 0; t < k; ++t) {
  restart:
    // pick the smallest-magnitude nonzero entry of the trailing block as pivot
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        const Int v = a[i][j] < 0 ? -a[i][j] : a[i][j];
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);
    if (a[t][t] < 0) negate_row(t);
    for (int i = t + 1; i < rows; ++i)
      if (a[i][t] != 0) {
        add_row(i, t, -(a[i][t] / a[t][t]));
        if (a[i][t] != 0) goto restart;  // remainder left, shrink pivot
      }
    for (int j = t + 1; j < cols; ++j)
      if (a[t][j] != 0) {
        add_col(j, t, -(a[t][j] / a[t][t]));
        if (a[t][j] != 0) goto restart;
      }
    // divisibility: fold any offending row into row t and re-eliminate
    for (int i = t + 1; i < rows; ++i)
      for (int j = t + 1; j < cols; ++j)
        if (a[i][j] % a[t][t] != 0) {
          add_row(t, i, 1);
          goto restart;
        }
  }
  SmithForm out;
  out.u = std::move(u);
  out.diag.resize(rows, 0);
  for (int t = 0; t < k; ++t) out.diag[t] = a[t][t] < 0 ? -a[t][t] : a[t][t];
  return out;
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::string ratvec_to_string(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

}  // namespace iwahori
