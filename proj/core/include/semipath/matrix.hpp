#pragma once

/**
 * @file matrix.hpp
 *
 * Dense row-major matrices over a semiring. A column vector is an n×1
 * matrix. Matrices hold carrier values only; the semiring is passed to each
 * operation, so one matrix type serves every instance sharing a carrier.
 */

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semipath/errors.hpp"
#include "semipath/semiring.hpp"

namespace semipath {

template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw ShapeMismatch("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                          std::to_string(rows_ * cols_));
    }
  }

  /// Row-major nested initialisation; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<T> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeMismatch("ragged row in matrix literal");
      data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(data));
  }

  static Matrix column(std::vector<T> values) {
    const std::size_t n = values.size();
    return Matrix(n, 1, std::move(values));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_column() const noexcept { return cols_ == 1; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::span<const T> values() const noexcept { return data_; }
  const std::vector<T>& storage() const noexcept { return data_; }

  /// Element-wise identity of the stored values (bitwise for exact carriers).
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Semiring S>
Matrix<value_t<S>> zero_matrix(const S& s, std::size_t rows, std::size_t cols) {
  return Matrix<value_t<S>>(rows, cols, s.zero());
}

template <Semiring S>
Matrix<value_t<S>> identity_matrix(const S& s, std::size_t n) {
  auto m = zero_matrix(s, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s.one();
  return m;
}

/// E_n = [e_n, …, e_1]: unit on the anti-diagonal.
template <Semiring S>
Matrix<value_t<S>> exchange_matrix(const S& s, std::size_t n) {
  if (n == 0) throw ShapeMismatch("exchange matrix needs n >= 1");
  auto m = zero_matrix(s, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = s.one();
  return m;
}

/// Unit column e_i (0-based index).
template <Semiring S>
Matrix<value_t<S>> unit_column(const S& s, std::size_t n, std::size_t i) {
  auto m = zero_matrix(s, n, 1);
  m(i, 0) = s.one();
  return m;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows(), T{});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

namespace detail {

inline std::string shape_text(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

template <class T>
void require_same_shape(const Matrix<T>& a, const Matrix<T>& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch(std::string(op) + ": " + shape_text(a.rows(), a.cols()) + " vs " +
                        shape_text(b.rows(), b.cols()));
  }
}

template <class T>
void require_square(const Matrix<T>& a, const char* op) {
  if (!a.is_square()) {
    throw ShapeMismatch(std::string(op) + ": expected a square matrix, got " +
                        shape_text(a.rows(), a.cols()));
  }
}

}  // namespace detail

template <Semiring S>
Matrix<value_t<S>> mat_add(const S& s, const Matrix<value_t<S>>& a, const Matrix<value_t<S>>& b) {
  detail::require_same_shape(a, b, "mat_add");
  Matrix<value_t<S>> c(a.rows(), a.cols(), s.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s.add(a(i, j), b(i, j));
  }
  return c;
}

/// C_ij = ⊕_k A_ik ⊙ B_kj, accumulated left to right in k.
template <Semiring S>
Matrix<value_t<S>> mat_mul(const S& s, const Matrix<value_t<S>>& a, const Matrix<value_t<S>>& b) {
  if (a.cols() != b.rows()) {
    throw ShapeMismatch("mat_mul: " + detail::shape_text(a.rows(), a.cols()) + " times " +
                        detail::shape_text(b.rows(), b.cols()));
  }
  Matrix<value_t<S>> c(a.rows(), b.cols(), s.zero());
  if (a.cols() == 0) return c;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto acc = s.mul(a(i, 0), b(0, j));
      for (std::size_t k = 1; k < a.cols(); ++k) acc = s.add(acc, s.mul(a(i, k), b(k, j)));
      c(i, j) = acc;
    }
  }
  return c;
}

/// Entry-wise comparison through the semiring's `equal` (exact for exact
/// carriers, relative tolerance for floating-point ones).
template <Semiring S>
bool mat_equal(const S& s, const Matrix<value_t<S>>& a, const Matrix<value_t<S>>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!s.equal(a(i, j), b(i, j))) return false;
    }
  }
  return true;
}

/// A ⪯ B entry-wise in the canonical order.
template <Semiring S>
bool elementwise_leq(const S& s, const Matrix<value_t<S>>& a, const Matrix<value_t<S>>& b) {
  if constexpr (!S::flags.idempotent) {
    throw UnsupportedInstance(std::string{"elementwise order needs an idempotent semiring, got "} +
                              std::string{S::name});
  } else {
    detail::require_same_shape(a, b, "elementwise_leq");
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!canonical_leq(s, a(i, j), b(i, j))) return false;
      }
    }
    return true;
  }
}

/// A = E_n Aᵀ E_n, i.e. A_ij = A_{n-1-j, n-1-i}.
template <Semiring S>
bool is_persymmetric(const S& s, const Matrix<value_t<S>>& a) {
  detail::require_square(a, "is_persymmetric");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!s.equal(a(i, j), a(n - 1 - j, n - 1 - i))) return false;
    }
  }
  return true;
}

template <Semiring S>
bool is_symmetric(const S& s, const Matrix<value_t<S>>& a) {
  detail::require_square(a, "is_symmetric");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (!s.equal(a(i, j), a(j, i))) return false;
    }
  }
  return true;
}

}  // namespace semipath
