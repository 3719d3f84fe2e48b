#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "semipath/matrix.hpp"
#include "semipath/levinson.hpp"

namespace semipath::testing {

using Rng = std::mt19937_64;

inline std::int64_t int_in(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline std::vector<std::int64_t> int_vector(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = int_in(rng, lo, hi);
  return v;
}

/// Max-plus matrix with integer entries in [lo, hi]; each entry is −∞ with
/// probability `absent`.
inline Matrix<std::int64_t> maxplus_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t lo,
                                           std::int64_t hi, double absent = 0.0) {
  Matrix<std::int64_t> m(rows, cols, std::int64_t{0});
  std::bernoulli_distribution drop(absent);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = drop(rng) ? carrier_traits<std::int64_t>::neg_inf() : int_in(rng, lo, hi);
    }
  }
  return m;
}

inline Matrix<std::uint8_t> boolean_matrix(Rng& rng, std::size_t rows, std::size_t cols, double density = 0.4) {
  Matrix<std::uint8_t> m(rows, cols, std::uint8_t{0});
  std::bernoulli_distribution bit(density);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = bit(rng) ? 1 : 0;
  }
  return m;
}

/// NonNegReal Yule–Walker coefficients with r0 + 2·Σr_i < 0.9.
struct RealInstance {
  double r0;
  std::vector<double> r;
  std::vector<double> b;
};

inline RealInstance nonneg_instance(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RealInstance inst{unit(rng), std::vector<double>(n), std::vector<double>(n)};
  for (auto& v : inst.r) v = unit(rng);
  for (auto& v : inst.b) v = unit(rng);
  double weight = inst.r0;
  for (double v : inst.r) weight += 2.0 * v;
  const double scale = std::uniform_real_distribution<double>(0.05, 0.89)(rng) / weight;
  inst.r0 *= scale;
  for (auto& v : inst.r) v *= scale;
  return inst;
}

template <class T>
std::vector<std::vector<T>> to_grid(const Matrix<T>& m) {
  std::vector<std::vector<T>> g(m.rows(), std::vector<T>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  }
  return g;
}

}  // namespace semipath::testing
