#pragma once

/**
 * @file semiring.hpp
 *
 * The semiring contract used by every algorithm in the library.
 *
 * A semiring object `S` exposes a carrier type `S::value_type`, the two
 * operations `add` (⊕) and `mul` (⊙), their neutral elements, and two
 * partial unary operations: the Kleene closure a* = ⊕_{i≥0} aⁱ and the
 * multiplicative inverse. Partial operations return `std::nullopt` where
 * they are undefined; algorithms decide how to surface that.
 *
 * Semiring objects are passed by reference to every routine rather than
 * being selected by type alone, so stateful wrappers (see counting.hpp)
 * can observe each operation.
 */

#include <cmath>
#include <concepts>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>

#include "semipath/errors.hpp"

namespace semipath {

struct SemiringFlags {
  bool idempotent = false;
  bool complete = false;
  bool has_inverses = false;
};

template <class S>
concept Semiring = requires(const S& s, const typename S::value_type& a) {
  typename S::value_type;
  { S::flags } -> std::convertible_to<SemiringFlags>;
  { S::name } -> std::convertible_to<std::string_view>;
  { s.zero() } -> std::same_as<typename S::value_type>;
  { s.one() } -> std::same_as<typename S::value_type>;
  { s.add(a, a) } -> std::same_as<typename S::value_type>;
  { s.mul(a, a) } -> std::same_as<typename S::value_type>;
  { s.closure(a) } -> std::same_as<std::optional<typename S::value_type>>;
  { s.inverse(a) } -> std::same_as<std::optional<typename S::value_type>>;
  { s.equal(a, a) } -> std::same_as<bool>;
};

template <Semiring S>
using value_t = typename S::value_type;

/// Relative tolerance used when comparing floating-point carrier values.
inline constexpr double kFloatTolerance = 1e-10;

/// Per-carrier helpers: infinity sentinels, comparison, and printing.
template <class T>
struct carrier_traits;

template <std::integral T>
struct carrier_traits<T> {
  static constexpr bool exact = true;
  static constexpr T pos_inf() noexcept { return std::numeric_limits<T>::max(); }
  static constexpr T neg_inf() noexcept { return std::numeric_limits<T>::min(); }
  static bool near(T a, T b) noexcept { return a == b; }
  static std::string format(T a) {
    if constexpr (sizeof(T) > 1) {
      if (a == pos_inf()) return "inf";
      if (a == neg_inf()) return "-inf";
    }
    return std::to_string(+a);
  }
};

template <std::floating_point T>
struct carrier_traits<T> {
  static constexpr bool exact = false;
  static constexpr T pos_inf() noexcept { return std::numeric_limits<T>::infinity(); }
  static constexpr T neg_inf() noexcept { return -std::numeric_limits<T>::infinity(); }
  // Scaled by max(1, |a|, |b|) so values near zero compare absolutely.
  static bool near(T a, T b) noexcept {
    if (a == b) return true;
    if (std::isinf(a) || std::isinf(b) || std::isnan(a) || std::isnan(b)) return false;
    const T scale = std::max({T{1}, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= static_cast<T>(kFloatTolerance) * scale;
  }
  static std::string format(T a) {
    if (std::isinf(a)) return a > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.precision(17);
    os << a;
    return os.str();
  }
};

template <Semiring S>
std::optional<value_t<S>> scalar_closure(const S& s, const value_t<S>& a) {
  return s.closure(a);
}

template <Semiring S>
std::optional<value_t<S>> scalar_mul_inverse(const S& s, const value_t<S>& a) {
  return s.inverse(a);
}

/// a ⪯ b iff a ⊕ b = b. Only meaningful for idempotent semirings.
template <Semiring S>
bool canonical_leq(const S& s, const value_t<S>& a, const value_t<S>& b) {
  if constexpr (!S::flags.idempotent) {
    throw UnsupportedInstance(std::string{"canonical order needs an idempotent semiring, got "} +
                              std::string{S::name});
  } else {
    return s.equal(s.add(a, b), b);
  }
}

}  // namespace semipath
