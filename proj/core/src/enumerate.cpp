#include <cstdint>
#include <string>
#include <vector>

#include "semipath/bordering.hpp"

namespace semipath {

std::vector<Matrix<std::uint8_t>> enumerate_solutions(const Boolean& s, const Matrix<std::uint8_t>& a,
                                                      const Matrix<std::uint8_t>& b) {
  detail::require_square(a, "enumerate_solutions");
  const std::size_t n = a.rows();
  if (!b.is_column() || b.rows() != n) {
    throw ShapeMismatch("enumerate_solutions: right-hand side must be an n x 1 column");
  }
  if (n > kEnumerationLimit) {
    throw TooLarge("enumerate_solutions: n = " + std::to_string(n) + " exceeds " +
                   std::to_string(kEnumerationLimit));
  }
  std::vector<Matrix<std::uint8_t>> solutions;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Matrix<std::uint8_t> x(n, 1, s.zero());
    for (std::size_t i = 0; i < n; ++i) x(i, 0) = static_cast<std::uint8_t>((mask >> i) & 1U);
    if (mat_add(s, mat_mul(s, a, x), b) == x) solutions.push_back(std::move(x));
  }
  return solutions;
}

}  // namespace semipath
