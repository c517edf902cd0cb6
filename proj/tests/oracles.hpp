#pragma once

// Reference computations for the test suites. They deliberately avoid the
// library's own algorithms: determinants by the Leibniz formula, ranks by a
// separate elimination, dominance by an explicit convex hull, Cartan
// invariants by tropical minors.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "bruhat/linalg.hpp"

namespace oracle {

using bruhat::Integer;
using bruhat::Rational;
using Rows = std::vector<std::vector<Rational>>;

inline std::size_t rank(Rows m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

inline Rational det(const Rows& m) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = permutation_sign(perm);
    for (std::size_t i = 0; i < m.size() && term != 0; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Rows rows_of(const bruhat::Matrix& m) {
  Rows out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

/// v_p by repeated division; nullopt for zero.
inline std::optional<long> valuation(const Rational& q, unsigned long p) {
  Integer num = q.get_num();
  if (num == 0) return std::nullopt;
  Integer den = q.get_den();
  long v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

inline Rational dot(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

/// max over permutations s of <x, s(y)>.
inline Rational max_permuted_dot(const std::vector<Rational>& x, std::vector<Rational> y) {
  std::sort(y.begin(), y.end());
  std::optional<Rational> best;
  do {
    const Rational d = dot(x, y);
    if (!best || d > *best) best = d;
  } while (std::next_permutation(y.begin(), y.end()));
  return *best;
}

namespace detail {

struct P2 {
  Rational x, y;
};

inline Rational cross(const P2& o, const P2& a, const P2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace detail

/// Whether x lies in the convex hull of the permutations of y, for vectors of
/// length 3: both live in the plane sum = const, where we take coordinates
/// (v0, v1) and test membership in the hull polygon with cross products.
inline bool in_permutation_hull3(const std::vector<Rational>& x, std::vector<Rational> y) {
  using detail::P2;
  if (x[0] + x[1] + x[2] != y[0] + y[1] + y[2]) return false;
  std::sort(y.begin(), y.end());
  std::vector<P2> pts;
  do {
    pts.push_back({y[0], y[1]});
  } while (std::next_permutation(y.begin(), y.end()));
  std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  const P2 q{x[0], x[1]};
  if (pts.size() == 1) return q.x == pts[0].x && q.y == pts[0].y;
  // Andrew's monotone chain.
  std::vector<P2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && detail::cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && detail::cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2) {
    // Degenerate hull: a segment.
    const auto& a = hull[0];
    const auto& b = hull[1];
    if (detail::cross(a, b, q) != 0) return false;
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= q.y &&
           q.y <= std::max(a.y, b.y);
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (detail::cross(hull[i], hull[(i + 1) % hull.size()], q) < 0) return false;
  }
  return true;
}

/// Cartan invariant of two split norms (basis columns A with weights a, B
/// with weights b) from tropical minors of M = A^-1 B: with entry values
/// v(m_ij) + a_i - b_j, the minimum over k x k minors of
/// v(det) + sum a_I - sum b_J is the sum of the k smallest invariants.
inline std::vector<Rational> cartan_by_minors(const bruhat::Matrix& a_basis, const std::vector<Rational>& a,
                                              const bruhat::Matrix& b_basis, const std::vector<Rational>& b,
                                              unsigned long p) {
  const Rows m = rows_of(a_basis.inverse() * b_basis);
  const std::size_t n = a.size();
  std::vector<Rational> prefix(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    std::optional<Rational> best;
    std::vector<bool> pick_rows(n, false);
    std::fill(pick_rows.begin(), pick_rows.begin() + static_cast<long>(k), true);
    do {
      std::vector<bool> pick_cols(n, false);
      std::fill(pick_cols.begin(), pick_cols.begin() + static_cast<long>(k), true);
      do {
        Rows minor;
        Rational offset = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (!pick_rows[i]) continue;
          offset += a[i];
          std::vector<Rational> row;
          for (std::size_t j = 0; j < n; ++j) {
            if (pick_cols[j]) row.push_back(m[i][j]);
          }
          minor.push_back(std::move(row));
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (pick_cols[j]) offset -= b[j];
        }
        const auto v = valuation(det(minor), p);
        if (v && (!best || *v + offset < *best)) best = *v + offset;
      } while (std::prev_permutation(pick_cols.begin(), pick_cols.end()));
    } while (std::prev_permutation(pick_rows.begin(), pick_rows.end()));
    prefix[k] = *best;
  }
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(prefix[k] - prefix[k - 1]);
  return out;
}

/// Whether the columns of C, with weights w, are an adapted basis of the
/// split norm (columns A, weights a): the weighted matrix of T = A^-1 C,
/// entries v(t_ik) + a_i - w_k, must be integral with unit determinant.
inline bool adapted(const bruhat::Matrix& a_basis, const std::vector<Rational>& a, const bruhat::Matrix& c_basis,
                    const std::vector<Rational>& w, unsigned long p) {
  const Rows t = rows_of(a_basis.inverse() * c_basis);
  Rational offset = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    offset += a[i] - w[i];
    for (std::size_t k = 0; k < w.size(); ++k) {
      const auto v = valuation(t[i][k], p);
      if (v && *v + a[i] - w[k] < 0) return false;
    }
  }
  const auto vdet = valuation(det(t), p);
  return vdet && *vdet + offset == 0;
}

}  // namespace oracle
