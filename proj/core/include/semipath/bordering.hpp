#pragma once

/**
 * @file bordering.hpp
 *
 * Closures and Bellman solves for general square matrices.
 *
 * The bordering method grows the closure of the leading k×k block one row
 * and column at a time. Writing
 *
 *     A_{k+1} = [ A_k   g ]        A_{k+1}* = [ U  v ]
 *               [ hᵀ    a ]                   [ wᵀ u ]
 *
 * the new blocks are
 *
 *     u  = (hᵀ A_k* g ⊕ a)*
 *     v  = A_k* g u
 *     wᵀ = u hᵀ A_k*
 *     U  = A_k* g u hᵀ A_k* ⊕ A_k*
 *
 * and the solution x = A* b extends as
 *
 *     x_{k+1} = u (hᵀ x ⊕ b_{k+1}),   z = x ⊕ A_k* g x_{k+1}.
 *
 * The running closure is kept in one n×n buffer, so a full closure costs
 * O(n³) semiring operations and O(n²) memory.
 *
 * series_closure evaluates the Kleene series I ⊕ A ⊕ A² ⊕ … directly and is
 * used as an independent oracle for everything else.
 */

#include <cmath>
#include <cstdint>
#include <vector>

#include "semipath/errors.hpp"
#include "semipath/instances.hpp"
#include "semipath/matrix.hpp"

namespace semipath {

/// One bordering step at size k: the partition of A_{k+1} and of its closure.
template <class T>
struct BorderingPartition {
  Matrix<T> leading;       // A_k
  Matrix<T> col;           // g_k
  Matrix<T> row;           // h_k (as a column)
  T corner{};              // a_{k+1}
  Matrix<T> star_leading;  // U_k
  Matrix<T> star_col;      // v_k
  Matrix<T> star_row;      // w_k (as a column)
  T star_corner{};         // u_{k+1}
};

namespace detail {

template <Semiring S>
struct BorderExtension {
  std::vector<value_t<S>> closure_times_col;  // A_k* g_k
  value_t<S> corner;                          // u_{k+1}
};

/// ⊕_{j<k} A_ij over row i of a k-prefix; k >= 1.
template <Semiring S, class RowAt, class ColAt>
value_t<S> prefix_dot(const S& s, std::size_t k, RowAt row_at, ColAt col_at) {
  auto acc = s.mul(row_at(0), col_at(0));
  for (std::size_t j = 1; j < k; ++j) acc = s.add(acc, s.mul(row_at(j), col_at(j)));
  return acc;
}

/// Extends the closure held in the leading k×k block of `star` to
/// (k+1)×(k+1), reading the border of `a`. When `update` is false only the
/// quantities needed by the solve are computed and `star` is left intact.
template <Semiring S>
BorderExtension<S> extend_closure(const S& s, const Matrix<value_t<S>>& a, Matrix<value_t<S>>& star,
                                  std::size_t k, bool update = true) {
  using V = value_t<S>;
  if (k == 0) {
    auto u = s.closure(a(0, 0));
    if (!u) throw SolverError(SolverErrorKind::closure_undefined, 1, "closure of a_11");
    if (update) star(0, 0) = *u;
    return {{}, *u};
  }
  // c = A_k* g,  dᵀ = hᵀ A_k*
  std::vector<V> c(k), d(k);
  for (std::size_t i = 0; i < k; ++i) {
    c[i] = prefix_dot(s, k, [&](std::size_t j) { return star(i, j); }, [&](std::size_t j) { return a(j, k); });
  }
  auto pivot = s.add(prefix_dot(s, k, [&](std::size_t j) { return a(k, j); }, [&](std::size_t j) { return c[j]; }),
                     a(k, k));
  auto u = s.closure(pivot);
  if (!u) throw SolverError(SolverErrorKind::closure_undefined, k + 1, "closure of bordering pivot");
  if (update) {
    for (std::size_t j = 0; j < k; ++j) {
      d[j] = prefix_dot(s, k, [&](std::size_t i) { return a(k, i); }, [&](std::size_t i) { return star(i, j); });
    }
    // v = c u and wᵀ = u dᵀ; then U = v dᵀ ⊕ A_k*.
    std::vector<V> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = s.mul(c[i], *u);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) star(i, j) = s.add(s.mul(v[i], d[j]), star(i, j));
    }
    for (std::size_t i = 0; i < k; ++i) {
      star(i, k) = v[i];
      star(k, i) = s.mul(*u, d[i]);
    }
    star(k, k) = *u;
  }
  return {std::move(c), *u};
}

template <class T>
Matrix<T> leading_block(const Matrix<T>& a, std::size_t k) {
  Matrix<T> out(k, k, T{});
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out(i, j) = a(i, j);
  }
  return out;
}

}  // namespace detail

/// A* built up from A₁* by bordering. Throws SolverError(closure_undefined,
/// k) when the scalar closure at step k does not exist.
template <Semiring S>
Matrix<value_t<S>> bordering_closure(const S& s, const Matrix<value_t<S>>& a) {
  detail::require_square(a, "bordering_closure");
  auto star = zero_matrix(s, a.rows(), a.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) detail::extend_closure(s, a, star, k);
  return star;
}

/// The bordering partition of A_{k+1} (1 <= k < n) together with the blocks
/// of A_{k+1}* produced by one bordering step from A_k*.
template <Semiring S>
BorderingPartition<value_t<S>> bordering_partition(const S& s, const Matrix<value_t<S>>& a, std::size_t k) {
  using V = value_t<S>;
  detail::require_square(a, "bordering_partition");
  if (k == 0 || k >= a.rows()) throw ShapeMismatch("bordering_partition: k must lie in [1, n)");
  const auto a_next = detail::leading_block(a, k + 1);
  auto star = zero_matrix(s, k + 1, k + 1);
  for (std::size_t i = 0; i <= k; ++i) detail::extend_closure(s, a_next, star, i);

  BorderingPartition<V> p;
  p.leading = detail::leading_block(a, k);
  p.col = Matrix<V>(k, 1, s.zero());
  p.row = Matrix<V>(k, 1, s.zero());
  p.star_leading = detail::leading_block(star, k);
  p.star_col = Matrix<V>(k, 1, s.zero());
  p.star_row = Matrix<V>(k, 1, s.zero());
  for (std::size_t i = 0; i < k; ++i) {
    p.col(i, 0) = a(i, k);
    p.row(i, 0) = a(k, i);
    p.star_col(i, 0) = star(i, k);
    p.star_row(i, 0) = star(k, i);
  }
  p.corner = a(k, k);
  p.star_corner = star(k, k);
  return p;
}

/// x = A* b by the incremental bordering recursion.
template <Semiring S>
Matrix<value_t<S>> bordering_solve(const S& s, const Matrix<value_t<S>>& a, const Matrix<value_t<S>>& b) {
  detail::require_square(a, "bordering_solve");
  if (!b.is_column() || b.rows() != a.rows()) {
    throw ShapeMismatch("bordering_solve: right-hand side must be an n x 1 column");
  }
  const std::size_t n = a.rows();
  auto x = zero_matrix(s, n, 1);
  if (n == 0) return x;
  auto star = zero_matrix(s, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const bool last = k + 1 == n;
    auto ext = detail::extend_closure(s, a, star, k, !last);
    if (k == 0) {
      x(0, 0) = s.mul(ext.corner, b(0, 0));
      continue;
    }
    auto hx = detail::prefix_dot(s, k, [&](std::size_t j) { return a(k, j); }, [&](std::size_t j) { return x(j, 0); });
    auto xk = s.mul(ext.corner, s.add(hx, b(k, 0)));
    for (std::size_t i = 0; i < k; ++i) x(i, 0) = s.add(x(i, 0), s.mul(ext.closure_times_col[i], xk));
    x(k, 0) = xk;
  }
  return x;
}

/// Default number of series terms for an n×n matrix over an exact carrier.
inline std::size_t default_series_terms(std::size_t n) { return 4 * n + 50; }

/// Extra terms granted to floating-point carriers, whose partial sums only
/// settle geometrically (about 2000 terms reach 1e-12 at spectral radius 0.986).
inline constexpr std::size_t kFloatSeriesExtraTerms = 2000;

template <class T>
std::size_t default_series_terms_for(std::size_t n) {
  return carrier_traits<T>::exact ? default_series_terms(n) : default_series_terms(n) + kFloatSeriesExtraTerms;
}

/// Relative change below which a floating-point partial sum is considered
/// settled; it must hold on two consecutive terms.
inline constexpr double kSeriesSettleTolerance = 1e-12;

namespace detail {

template <class T>
double relative_change(const Matrix<T>& prev, const Matrix<T>& next) {
  double worst = 0.0;
  for (std::size_t i = 0; i < prev.rows(); ++i) {
    for (std::size_t j = 0; j < prev.cols(); ++j) {
      const double p = static_cast<double>(prev(i, j));
      const double q = static_cast<double>(next(i, j));
      if (p == q) continue;
      if (std::isinf(p) || std::isinf(q) || std::isnan(p) || std::isnan(q)) return INFINITY;
      worst = std::max(worst, std::abs(q - p) / std::max({1.0, std::abs(p), std::abs(q)}));
    }
  }
  return worst;
}

}  // namespace detail

/// Partial sums S_m = I ⊕ A ⊕ … ⊕ A^m, evaluated as S_{m+1} = I ⊕ A S_m,
/// until the sum stops changing (exactly for exact carriers) or `max_terms`
/// is reached, in which case SolverError(not_stabilized, max_terms) is thrown.
template <Semiring S>
Matrix<value_t<S>> series_closure(const S& s, const Matrix<value_t<S>>& a, std::size_t max_terms) {
  using V = value_t<S>;
  detail::require_square(a, "series_closure");
  const auto id = identity_matrix(s, a.rows());
  auto sum = id;
  int settled = 0;
  for (std::size_t m = 1; m <= max_terms; ++m) {
    auto next = mat_add(s, id, mat_mul(s, a, sum));
    if constexpr (requires { s.contains(next(0, 0)); }) {
      for (const auto& v : next.values()) {
        if (!s.contains(v)) throw SolverError(SolverErrorKind::not_stabilized, m, "partial sum left the carrier");
      }
    }
    if constexpr (carrier_traits<V>::exact) {
      if (next == sum) return next;
    } else {
      settled = detail::relative_change(sum, next) < kSeriesSettleTolerance ? settled + 1 : 0;
      if (settled >= 2) return next;
    }
    sum = std::move(next);
  }
  throw SolverError(SolverErrorKind::not_stabilized, max_terms, "series did not reach a fixed point");
}

template <Semiring S>
Matrix<value_t<S>> series_closure(const S& s, const Matrix<value_t<S>>& a) {
  return series_closure(s, a, default_series_terms_for<value_t<S>>(a.rows()));
}

/// Largest dimension enumerate_solutions accepts.
inline constexpr std::size_t kEnumerationLimit = 12;

/// Every Boolean column x with x = A x ⊕ b, by exhaustive search over all
/// 2ⁿ candidates. Throws TooLarge for n > kEnumerationLimit.
std::vector<Matrix<std::uint8_t>> enumerate_solutions(const Boolean& s, const Matrix<std::uint8_t>& a,
                                                      const Matrix<std::uint8_t>& b);

}  // namespace semipath
