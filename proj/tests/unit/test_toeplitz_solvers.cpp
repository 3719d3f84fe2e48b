#include <doctest.h>

#include <cstdint>
#include <limits>
#include <vector>

#include "semipath/bordering.hpp"
#include "semipath/counting.hpp"
#include "semipath/instances.hpp"
#include "semipath/levinson.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace semipath;
using semipath::testing::Rng;

namespace {

using I64 = std::int64_t;
const MaxPlus<I64> mp;

Matrix<I64> series_times(const SymToeplitz<I64>& t, const std::vector<I64>& rhs) {
  return mat_mul(mp, series_closure(mp, toeplitz_expand(t)), Matrix<I64>::column(rhs));
}

template <class Fn>
SolverError expect_solver_error(Fn&& fn) {
  try {
    fn();
  } catch (const SolverError& e) {
    return e;
  }
  FAIL("expected SolverError");
  return SolverError(SolverErrorKind::not_stabilized, 0);
}

}  // namespace

TEST_CASE("beta update") {
  CHECK(beta_update(mp, -1, -3) == -1);
  CHECK(beta_update(NonNegReal{}, 0.5, 0.3).value() == doctest::Approx(0.545));
  CHECK(beta_update(mp, -4, mp.zero()) == -4);
  CHECK(beta_update(NonNegReal{}, 0.2, 0.0).value() == doctest::Approx(0.2));
  CHECK(beta_update(MaxMin<I64>{}, 3, 5) == 5);
  CHECK_FALSE(beta_update(mp, 2, -1).has_value());                      // β* undefined
  CHECK_FALSE(beta_update(MaxPlusComplete<I64>{}, 2, -1).has_value());  // β* = +∞ not invertible
}

TEST_CASE("durbin worked examples") {
  CHECK(durbin(mp, {-4, {-1}}) == Matrix<I64>::column({-1}));
  CHECK(durbin(mp, {-1, {-2, -3}}) == Matrix<I64>::column({-2, -3}));

  const NonNegReal real;
  const auto y = durbin(real, {0.5, {0.25, 0.1}});
  CHECK(y(0, 0) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(y(1, 0) == doctest::Approx(0.6).epsilon(1e-12));
  const auto y1 = durbin(real, {0.5, {0.25}});
  CHECK(y1(0, 0) == doctest::Approx(0.5));

  CHECK_THROWS_AS(durbin(mp, {0, {}}), ShapeMismatch);
}

TEST_CASE("levinson worked examples") {
  CHECK(levinson(mp, {-3, {}, {4}}) == Matrix<I64>::column({4}));
  CHECK(levinson(mp, {-1, {-2}, {0, -1}}) == Matrix<I64>::column({0, -1}));
  CHECK(series_times(SymToeplitz<I64>{-1, {-2}}, {0, -1}) == Matrix<I64>::column({0, -1}));

  const NonNegReal real;
  const auto x = levinson(real, {0.5, {0.25}, {1.0, 2.0}});
  const auto ref = testing::classical_toeplitz_solve({0.5, 0.25}, {1.0, 2.0}).value();
  CHECK(testing::close_relative(x(0, 0), ref[0], 1e-12));
  CHECK(testing::close_relative(x(1, 0), ref[1], 1e-12));

  CHECK_THROWS_AS(levinson(mp, {0, {-1, -2}, {0, 0}}), ShapeMismatch);
  CHECK_THROWS_AS(levinson(mp, {0, {}, {}}), ShapeMismatch);
}

TEST_CASE("levinson with b = r reproduces durbin") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testing::int_in(rng, 1, 10));
    const I64 r0 = testing::int_in(rng, -10, 0);
    const auto r = testing::int_vector(rng, n, -10, 0);
    const std::vector<I64> tail(r.begin(), r.end() - 1);
    CHECK(levinson(mp, {r0, tail, r}) == durbin(mp, {r0, r}));
    for (auto v : {BetaVariant::recursive, BetaVariant::fallback}) {
      CHECK(levinson(mp, {r0, tail, r}, v) == durbin(mp, {r0, r}, v));
    }
  }
}

TEST_CASE("residual check") {
  const SymToeplitz<I64> t{-1, {-2}};
  const auto y = durbin(mp, {-1, {-2, -3}});
  const auto rhs = Matrix<I64>::column({-2, -3});
  CHECK(residual_check(mp, t, y, rhs));
  auto bumped = y;
  bumped(1, 0) = mp.add(bumped(1, 0), -1);  // -3 ⊕ -1 = -1
  CHECK_FALSE(residual_check(mp, t, bumped, rhs));
  CHECK(residual_check(mp, t, zero_matrix(mp, 2, 1), zero_matrix(mp, 2, 1)));
  CHECK_THROWS_AS(residual_check(mp, t, zero_matrix(mp, 3, 1), rhs), ShapeMismatch);
}

TEST_CASE("undefined closures abort with the step index") {
  auto e0 = expect_solver_error([] { (void)durbin(mp, {1, {-1, -1}}); });
  CHECK(e0.kind() == SolverErrorKind::closure_undefined);
  CHECK(e0.step() == 0);

  // β₁ = max(0, 1 + 1) = 2 has no max-plus closure.
  auto e1 = expect_solver_error([] { (void)durbin(mp, {0, {1, 0}}); });
  CHECK(e1.kind() == SolverErrorKind::closure_undefined);
  CHECK(e1.step() == 1);

  auto e2 = expect_solver_error([] { (void)levinson(mp, {0, {1}, {0, 0}}); });
  CHECK(e2.step() == 1);
}

TEST_CASE("recursive variant needs the inverse of beta closure") {
  const MaxPlusComplete<I64> mpc;
  // r0 = 1: r0* = +∞, which has no inverse.
  auto e = expect_solver_error([&] { (void)durbin(mpc, {1, {-1, -2, -3}}, BetaVariant::recursive); });
  CHECK(e.kind() == SolverErrorKind::inverse_undefined);
  CHECK(e.step() == 1);

  const auto recomputed = durbin(mpc, {1, {-1, -2, -3}}, BetaVariant::recompute);
  CHECK(durbin(mpc, {1, {-1, -2, -3}}, BetaVariant::fallback) == recomputed);
  // The positive loop at every node is reachable from everywhere: every path weight is unbounded.
  const I64 inf = carrier_traits<I64>::pos_inf();
  CHECK(recomputed == Matrix<I64>::column({inf, inf, inf}));
  CHECK(recomputed == mat_mul(mpc, bordering_closure(mpc, toeplitz_expand(SymToeplitz<I64>{1, {-1, -2}})),
                              Matrix<I64>::column({-1, -2, -3})));

  DurbinRecursion<MaxPlusComplete<I64>> rec(mpc, {1, {-1, -2, -3}}, BetaVariant::fallback);
  while (!rec.done()) rec.step();
  CHECK(rec.state().recomputed_steps == 2);
}

TEST_CASE("durbin and levinson equal the series oracle over max-plus") {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(testing::int_in(rng, 1, 9));
    const I64 r0 = testing::int_in(rng, -10, 0);
    const auto r = testing::int_vector(rng, n, -10, 0);
    const auto b = testing::int_vector(rng, n, -10, 5);
    const YuleWalkerProblem<I64> yw{r0, r};
    const ToeplitzBellmanProblem<I64> tb{r0, std::vector<I64>(r.begin(), r.end() - 1), b};
    const auto t = toeplitz_of(yw);
    CHECK(durbin(mp, yw) == series_times(t, r));
    CHECK(levinson(mp, tb) == series_times(t, b));
    CHECK(levinson(mp, tb) == bordering_solve(mp, toeplitz_expand(t), Matrix<I64>::column(b)));
    CHECK(residual_check(mp, t, durbin(mp, yw), Matrix<I64>::column(r)));
    CHECK(durbin(mp, yw, BetaVariant::recursive) == durbin(mp, yw));
  }
}

TEST_CASE("complete idempotent instances never fail") {
  Rng rng(33);
  const MaxMin<I64> mm;
  const Boolean boolean;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testing::int_in(rng, 1, 7));
    const auto r = testing::int_vector(rng, n, -10, 10);
    const I64 r0 = testing::int_in(rng, -10, 10);
    const SymToeplitz<I64> t{r0, std::vector<I64>(r.begin(), r.end() - 1)};
    const auto expected = mat_mul(mm, series_closure(mm, toeplitz_expand(t)), Matrix<I64>::column(r));
    CHECK(durbin(mm, {r0, r}) == expected);
    CHECK(durbin(mm, {r0, r}, BetaVariant::recursive) == expected);

    std::vector<std::uint8_t> bits(n);
    for (auto& v : bits) v = static_cast<std::uint8_t>(testing::int_in(rng, 0, 1));
    const auto b0 = static_cast<std::uint8_t>(testing::int_in(rng, 0, 1));
    const SymToeplitz<std::uint8_t> bt{b0, std::vector<std::uint8_t>(bits.begin(), bits.end() - 1)};
    const auto bexp =
        mat_mul(boolean, bordering_closure(boolean, toeplitz_expand(bt)), Matrix<std::uint8_t>::column(bits));
    CHECK(durbin(boolean, {b0, bits}) == bexp);
    CHECK(durbin(boolean, {b0, bits}, BetaVariant::recursive) == bexp);
  }
}

TEST_CASE("each step's partial solution solves the truncated problem") {
  Rng rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(testing::int_in(rng, 2, 8));
    const YuleWalkerProblem<I64> yw{testing::int_in(rng, -10, 0), testing::int_vector(rng, n, -10, 0)};
    for (auto variant : {BetaVariant::recompute, BetaVariant::recursive}) {
      DurbinRecursion<MaxPlus<I64>> rec(mp, yw, variant);
      while (true) {
        const auto k = rec.state().k;
        const std::vector<I64> prefix(yw.r.begin(), yw.r.begin() + static_cast<std::ptrdiff_t>(k));
        CHECK(rec.state().y == durbin(mp, {yw.r0, prefix}).storage());
        // y⁽ᵏ⁾ = T_k* r⁽ᵏ⁾
        const auto tk = SymToeplitz<I64>{yw.r0, std::vector<I64>(prefix.begin(), prefix.end() - 1)};
        CHECK(Matrix<I64>::column(rec.state().y) ==
              mat_mul(mp, bordering_closure(mp, toeplitz_expand(tk)), Matrix<I64>::column(prefix)));
        if (rec.done()) break;
        rec.step();
      }
    }
  }
}

TEST_CASE("beta is consistent between variants") {
  Rng rng(35);
  const NonNegReal real;
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(testing::int_in(rng, 2, 12));
    const auto inst = testing::nonneg_instance(rng, n);
    const YuleWalkerProblem<double> yw{inst.r0, inst.r};
    DurbinRecursion<NonNegReal> direct(real, yw, BetaVariant::recompute);
    DurbinRecursion<NonNegReal> recursive(real, yw, BetaVariant::recursive);
    while (!direct.done()) {
      const auto y_prev = direct.state().y;
      direct.step();
      recursive.step();
      double expected = inst.r0;
      for (std::size_t i = 0; i < y_prev.size(); ++i) expected += inst.r[i] * y_prev[i];
      CHECK(testing::close_relative(direct.state().beta, expected, 1e-12));
      CHECK(testing::close_relative(recursive.state().beta, expected, 1e-10));
    }
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(testing::close_relative(direct.state().y[i], recursive.state().y[i], 1e-10));
    }
  }
}

TEST_CASE("nonneg-real solvers reduce to the classical dense solve") {
  Rng rng(36);
  const NonNegReal real;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testing::int_in(rng, 1, 32));
    const auto inst = testing::nonneg_instance(rng, n);
    std::vector<double> coef{inst.r0};
    coef.insert(coef.end(), inst.r.begin(), inst.r.end() - 1);
    const auto ref_y = testing::classical_toeplitz_solve(coef, inst.r).value();
    const auto ref_x = testing::classical_toeplitz_solve(coef, inst.b).value();
    const auto y = durbin(real, {inst.r0, inst.r});
    const auto x = levinson(real, {inst.r0, std::vector<double>(inst.r.begin(), inst.r.end() - 1), inst.b});
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(testing::close_relative(y(i, 0), ref_y[i], 1e-10));
      CHECK(testing::close_relative(x(i, 0), ref_x[i], 1e-10));
    }
  }
}

TEST_CASE("durbin operation counts follow the closed form") {
  // Per step k: 3k+1 products, 3k sums, one closure; one closure and one
  // product before the loop.
  for (std::size_t n : {1U, 2U, 5U, 17U, 64U}) {
    OpCounts counts;
    const Counting<MaxPlus<I64>> s(mp, counts);
    (void)durbin(s, {-1, std::vector<I64>(n, -2)});
    CHECK(counts.mul == 1 + 3 * n * (n - 1) / 2 + (n - 1));
    CHECK(counts.add == 3 * n * (n - 1) / 2);
    CHECK(counts.closure == n);
    CHECK(counts.inverse == 0);
  }
}
