#pragma once

#include <cstddef>
#include <vector>

#include "semipath/matrix.hpp"

namespace semipath {

/// Symmetric Toeplitz matrix T_ij = r_{|j-i|}, stored as r₀ and the
/// first-row tail r₁..r_{n-1}.
template <class T>
struct SymToeplitz {
  T r0{};
  std::vector<T> tail;

  std::size_t size() const noexcept { return tail.size() + 1; }

  /// r_k for 0 <= k < n.
  const T& coefficient(std::size_t k) const { return k == 0 ? r0 : tail[k - 1]; }
  const T& at(std::size_t i, std::size_t j) const { return coefficient(i > j ? i - j : j - i); }

  /// Leading k×k principal submatrix, itself symmetric Toeplitz.
  SymToeplitz leading(std::size_t k) const {
    return SymToeplitz{r0, std::vector<T>(tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(k - 1))};
  }
};

template <class T>
Matrix<T> toeplitz_expand(const SymToeplitz<T>& t) {
  const std::size_t n = t.size();
  Matrix<T> m(n, n, t.r0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = t.at(i, j);
  }
  return m;
}

}  // namespace semipath
