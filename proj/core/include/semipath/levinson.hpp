#pragma once

/**
 * @file levinson.hpp
 *
 * O(n²) solvers for Bellman equations with a symmetric Toeplitz matrix.
 *
 * durbin solves the Yule–Walker form y = T_n y ⊕ r, where r = (r₁..r_n) both
 * generates T_n (diagonal r₀, first-row tail r₁..r_{n-1}) and is the
 * right-hand side. levinson solves x = T_n x ⊕ b for an arbitrary b by
 * running the same recursion for y alongside the one for x.
 *
 * With y = y⁽ᵏ⁾ the solution of size k and ỹ its reversal (E_k y), a step
 * k → k+1 is
 *
 *     β_k = r₀ ⊕ r⁽ᵏ⁾ᵀ y                       (recompute)
 *     β_k = β_{k-1} ⊕ (β_{k-1}*)⁻¹ α_{k-1}²    (recursive, needs the inverse)
 *     α_k = β_k* (r̃⁽ᵏ⁾ᵀ y ⊕ r_{k+1})
 *     y⁽ᵏ⁺¹⁾ = (y ⊕ ỹ α_k, α_k)
 *
 * and for levinson
 *
 *     μ_k = (r̃⁽ᵏ⁾ᵀ x ⊕ b_{k+1}) β_k*
 *     x⁽ᵏ⁺¹⁾ = (x ⊕ μ_k ỹ, μ_k).
 *
 * Reversals are index traversals; no exchange matrix is ever formed.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semipath/errors.hpp"
#include "semipath/matrix.hpp"
#include "semipath/toeplitz.hpp"

namespace semipath {

enum class BetaVariant {
  recompute,  // β from its definition at every step
  recursive,  // β from the previous β and α; fails where (β*)⁻¹ is undefined
  fallback,   // recursive, recomputing at steps where the inverse is undefined
};

std::string_view to_string(BetaVariant v) noexcept;
std::optional<BetaVariant> parse_beta_variant(std::string_view text) noexcept;

/// y = T_n y ⊕ r with T_n generated by r0 and r[0..n-2]; n = r.size().
template <class T>
struct YuleWalkerProblem {
  T r0{};
  std::vector<T> r;
};

/// x = T_n x ⊕ b with T_n generated by r0 and r; r.size() == b.size() - 1.
template <class T>
struct ToeplitzBellmanProblem {
  T r0{};
  std::vector<T> r;
  std::vector<T> b;
};

template <class T>
struct SolveState {
  std::size_t k = 0;  // current solution length
  std::vector<T> y;
  std::vector<T> x;  // levinson only
  T alpha{};
  T beta{};
  T beta_star{};
  T mu{};            // levinson only
  BetaVariant variant = BetaVariant::recompute;
  std::size_t recomputed_steps = 0;  // fallback steps that took the recompute path
};

/// The recursive β update: β ⊕ (β*)⁻¹ ⊙ α ⊙ α. nullopt if β* or its inverse
/// is undefined.
template <Semiring S>
std::optional<value_t<S>> beta_update(const S& s, const value_t<S>& beta_prev, const value_t<S>& alpha_prev) {
  auto star = s.closure(beta_prev);
  if (!star) return std::nullopt;
  auto inv = s.inverse(*star);
  if (!inv) return std::nullopt;
  return s.add(beta_prev, s.mul(*inv, s.mul(alpha_prev, alpha_prev)));
}

namespace detail {

/// ⊕_{i<k} u[i] ⊙ v[i]; k >= 1.
template <Semiring S>
value_t<S> dot(const S& s, const std::vector<value_t<S>>& u, const std::vector<value_t<S>>& v, std::size_t k) {
  auto acc = s.mul(u[0], v[0]);
  for (std::size_t i = 1; i < k; ++i) acc = s.add(acc, s.mul(u[i], v[i]));
  return acc;
}

/// ⊕_{i<k} u[k-1-i] ⊙ v[i]; k >= 1.
template <Semiring S>
value_t<S> reversed_dot(const S& s, const std::vector<value_t<S>>& u, const std::vector<value_t<S>>& v,
                        std::size_t k) {
  auto acc = s.mul(u[k - 1], v[0]);
  for (std::size_t i = 1; i < k; ++i) acc = s.add(acc, s.mul(u[k - 1 - i], v[i]));
  return acc;
}

/// Advances state.beta from β_{k-1} to β_k.
template <Semiring S>
void advance_beta(const S& s, SolveState<value_t<S>>& st, const value_t<S>& r0, const std::vector<value_t<S>>& r) {
  const std::size_t k = st.k;
  if (st.variant != BetaVariant::recompute) {
    // β_{k-1}* is already known from the previous step.
    if (auto inv = s.inverse(st.beta_star)) {
      st.beta = s.add(st.beta, s.mul(*inv, s.mul(st.alpha, st.alpha)));
      return;
    }
    if (st.variant == BetaVariant::recursive) {
      throw SolverError(SolverErrorKind::inverse_undefined, k, "inverse of beta closure");
    }
    ++st.recomputed_steps;
  }
  st.beta = s.add(r0, dot(s, r, st.y, k));
}

template <Semiring S>
void close_beta(const S& s, SolveState<value_t<S>>& st) {
  auto star = s.closure(st.beta);
  if (!star) throw SolverError(SolverErrorKind::closure_undefined, st.k, "closure of beta");
  st.beta_star = *star;
}

/// y ← (y ⊕ ỹ α, α), computed in place over the symmetric index pairs.
template <Semiring S>
void extend_with_reversal(const S& s, std::vector<value_t<S>>& y, const std::vector<value_t<S>>& reversed_src,
                          const value_t<S>& coef, bool coef_left) {
  const std::size_t k = y.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto& rev = reversed_src[k - 1 - i];
    y[i] = s.add(y[i], coef_left ? s.mul(coef, rev) : s.mul(rev, coef));
  }
}

}  // namespace detail

/// Step-wise Durbin recursion. After construction the state holds y⁽¹⁾;
/// each step() extends it by one entry until done().
template <Semiring S>
class DurbinRecursion {
 public:
  using V = value_t<S>;

  DurbinRecursion(const S& s, YuleWalkerProblem<V> problem, BetaVariant variant = BetaVariant::recompute)
      : s_(s), problem_(std::move(problem)) {
    if (problem_.r.empty()) throw ShapeMismatch("durbin: r must have at least one entry");
    auto r0_star = s_.closure(problem_.r0);
    if (!r0_star) throw SolverError(SolverErrorKind::closure_undefined, 0, "closure of r0");
    state_.variant = variant;
    state_.k = 1;
    state_.y.reserve(problem_.r.size());
    state_.y.push_back(s_.mul(*r0_star, problem_.r[0]));
    state_.beta = problem_.r0;
    state_.beta_star = *r0_star;
    state_.alpha = state_.y[0];
  }

  bool done() const noexcept { return state_.k == problem_.r.size(); }

  void step() {
    auto& st = state_;
    const auto& r = problem_.r;
    detail::advance_beta(s_, st, problem_.r0, r);
    detail::close_beta(s_, st);
    st.alpha = s_.mul(st.beta_star, s_.add(detail::reversed_dot(s_, r, st.y, st.k), r[st.k]));
    detail::extend_with_reversal(s_, st.y, std::vector<V>(st.y), st.alpha, true);
    st.y.push_back(st.alpha);
    ++st.k;
  }

  const SolveState<V>& state() const noexcept { return state_; }
  Matrix<V> solution() const { return Matrix<V>::column(state_.y); }

 private:
  S s_;
  YuleWalkerProblem<V> problem_;
  SolveState<V> state_;
};

/// Step-wise Levinson recursion; state holds x⁽ᵏ⁾ and y⁽ᵏ⁾.
template <Semiring S>
class LevinsonRecursion {
 public:
  using V = value_t<S>;

  LevinsonRecursion(const S& s, ToeplitzBellmanProblem<V> problem, BetaVariant variant = BetaVariant::recompute)
      : s_(s), problem_(std::move(problem)) {
    const std::size_t n = problem_.b.size();
    if (n == 0) throw ShapeMismatch("levinson: b must have at least one entry");
    if (problem_.r.size() + 1 != n) {
      throw ShapeMismatch("levinson: r has " + std::to_string(problem_.r.size()) + " entries, expected " +
                          std::to_string(n - 1));
    }
    auto r0_star = s_.closure(problem_.r0);
    if (!r0_star) throw SolverError(SolverErrorKind::closure_undefined, 0, "closure of r0");
    state_.variant = variant;
    state_.k = 1;
    state_.x.reserve(n);
    state_.x.push_back(s_.mul(*r0_star, problem_.b[0]));
    state_.beta = problem_.r0;
    state_.beta_star = *r0_star;
    if (n > 1) {
      state_.y.reserve(n - 1);
      state_.y.push_back(s_.mul(*r0_star, problem_.r[0]));
      state_.alpha = state_.y[0];
    }
  }

  bool done() const noexcept { return state_.k == problem_.b.size(); }

  void step() {
    auto& st = state_;
    const auto& r = problem_.r;
    const std::size_t n = problem_.b.size();
    const std::size_t k = st.k;
    detail::advance_beta(s_, st, problem_.r0, r);
    detail::close_beta(s_, st);
    st.mu = s_.mul(s_.add(detail::reversed_dot(s_, r, st.x, k), problem_.b[k]), st.beta_star);
    detail::extend_with_reversal(s_, st.x, st.y, st.mu, true);
    st.x.push_back(st.mu);
    if (k + 1 < n) {
      st.alpha = s_.mul(s_.add(detail::reversed_dot(s_, r, st.y, k), r[k]), st.beta_star);
      detail::extend_with_reversal(s_, st.y, std::vector<V>(st.y), st.alpha, true);
      st.y.push_back(st.alpha);
    }
    ++st.k;
  }

  const SolveState<V>& state() const noexcept { return state_; }
  Matrix<V> solution() const { return Matrix<V>::column(state_.x); }

 private:
  S s_;
  ToeplitzBellmanProblem<V> problem_;
  SolveState<V> state_;
};

template <Semiring S>
Matrix<value_t<S>> durbin(const S& s, YuleWalkerProblem<value_t<S>> problem,
                          BetaVariant variant = BetaVariant::recompute) {
  DurbinRecursion<S> rec(s, std::move(problem), variant);
  while (!rec.done()) rec.step();
  return rec.solution();
}

template <Semiring S>
Matrix<value_t<S>> levinson(const S& s, ToeplitzBellmanProblem<value_t<S>> problem,
                            BetaVariant variant = BetaVariant::recompute) {
  LevinsonRecursion<S> rec(s, std::move(problem), variant);
  while (!rec.done()) rec.step();
  return rec.solution();
}

/// The Toeplitz matrix of a Yule–Walker problem: r0 with tail r[0..n-2].
template <class T>
SymToeplitz<T> toeplitz_of(const YuleWalkerProblem<T>& p) {
  return SymToeplitz<T>{p.r0, std::vector<T>(p.r.begin(), p.r.end() - 1)};
}

template <class T>
SymToeplitz<T> toeplitz_of(const ToeplitzBellmanProblem<T>& p) {
  return SymToeplitz<T>{p.r0, p.r};
}

/// sol = T sol ⊕ rhs, compared through the semiring's equality.
template <Semiring S>
bool residual_check(const S& s, const SymToeplitz<value_t<S>>& t, const Matrix<value_t<S>>& sol,
                    const Matrix<value_t<S>>& rhs) {
  const std::size_t n = t.size();
  if (!sol.is_column() || !rhs.is_column() || sol.rows() != n || rhs.rows() != n) {
    throw ShapeMismatch("residual_check: solution and right-hand side must be n x 1");
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto acc = rhs(i, 0);
    for (std::size_t j = 0; j < n; ++j) acc = s.add(acc, s.mul(t.at(i, j), sol(j, 0)));
    if (!s.equal(acc, sol(i, 0))) return false;
  }
  return true;
}

}  // namespace semipath
