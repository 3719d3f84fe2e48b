#pragma once

// Concrete semirings. Each is an empty, trivially copyable policy object.
//
// Besides the Semiring contract every instance provides
//   contains(a)   membership of a carrier value (rejects foreign sentinels, NaN)
//   sentinels()   the infinity sentinels the carrier admits
//   sample(rng)   a random carrier value, used for axiom sampling

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "semipath/semiring.hpp"

namespace semipath {

/// (ℝ₊, +, ·, 0, 1); a* = 1/(1−a) for a < 1.
struct NonNegReal {
  using value_type = double;
  static constexpr SemiringFlags flags{.idempotent = false, .complete = false, .has_inverses = true};
  static constexpr std::string_view name = "nonneg-real";

  double zero() const noexcept { return 0.0; }
  double one() const noexcept { return 1.0; }
  double add(double a, double b) const noexcept { return a + b; }
  double mul(double a, double b) const noexcept { return a * b; }
  std::optional<double> closure(double a) const noexcept {
    if (a < 1.0) return 1.0 / (1.0 - a);
    return std::nullopt;
  }
  std::optional<double> inverse(double a) const noexcept {
    if (a > 0.0 && std::isfinite(a)) return 1.0 / a;
    return std::nullopt;
  }
  bool equal(double a, double b) const noexcept { return carrier_traits<double>::near(a, b); }

  bool contains(double a) const noexcept { return std::isfinite(a) && a >= 0.0; }
  std::vector<double> sentinels() const { return {}; }
  template <class Rng>
  double sample(Rng& rng) const {
    return std::uniform_real_distribution<double>(0.0, 2.0)(rng);
  }
};

/// (ℝ ∪ {−∞}, max, +, −∞, 0); a* = 0 for a ≤ 0.
template <class T = double>
struct MaxPlus {
  using value_type = T;
  using traits = carrier_traits<T>;
  static constexpr SemiringFlags flags{.idempotent = true, .complete = false, .has_inverses = true};
  static constexpr std::string_view name = "max-plus";

  T zero() const noexcept { return traits::neg_inf(); }
  T one() const noexcept { return T{0}; }
  T add(T a, T b) const noexcept { return std::max(a, b); }
  T mul(T a, T b) const noexcept {
    if (a == zero() || b == zero()) return zero();
    return a + b;
  }
  std::optional<T> closure(T a) const noexcept {
    if (a <= T{0}) return one();
    return std::nullopt;
  }
  std::optional<T> inverse(T a) const noexcept {
    if (a == zero()) return std::nullopt;
    return -a;
  }
  bool equal(T a, T b) const noexcept { return traits::near(a, b); }

  bool contains(T a) const noexcept {
    if constexpr (std::is_floating_point_v<T>) {
      if (std::isnan(a)) return false;
    }
    return a != traits::pos_inf();
  }
  std::vector<T> sentinels() const { return {zero()}; }
  template <class Rng>
  T sample(Rng& rng) const {
    return static_cast<T>(std::uniform_int_distribution<int>(-10, 10)(rng));
  }
};

/// MaxPlus completed with +∞. The annihilator is checked before carrier
/// addition so −∞ + ∞ never reaches the floating-point unit.
template <class T = double>
struct MaxPlusComplete {
  using value_type = T;
  using traits = carrier_traits<T>;
  static constexpr SemiringFlags flags{.idempotent = true, .complete = true, .has_inverses = false};
  static constexpr std::string_view name = "max-plus-complete";

  T zero() const noexcept { return traits::neg_inf(); }
  T one() const noexcept { return T{0}; }
  T top() const noexcept { return traits::pos_inf(); }
  T add(T a, T b) const noexcept { return std::max(a, b); }
  T mul(T a, T b) const noexcept {
    if (a == zero() || b == zero()) return zero();
    if (a == top() || b == top()) return top();
    return a + b;
  }
  std::optional<T> closure(T a) const noexcept {
    if (a <= T{0}) return one();
    return top();
  }
  std::optional<T> inverse(T a) const noexcept {
    if (a == zero() || a == top()) return std::nullopt;
    return -a;
  }
  bool equal(T a, T b) const noexcept { return traits::near(a, b); }

  bool contains(T a) const noexcept {
    if constexpr (std::is_floating_point_v<T>) {
      return !std::isnan(a);
    }
    return true;
  }
  std::vector<T> sentinels() const { return {zero(), top()}; }
  template <class Rng>
  T sample(Rng& rng) const {
    return static_cast<T>(std::uniform_int_distribution<int>(-10, 10)(rng));
  }
};

/// (ℝ ∪ {±∞}, max, min, −∞, +∞); every closure equals the unit.
template <class T = double>
struct MaxMin {
  using value_type = T;
  using traits = carrier_traits<T>;
  static constexpr SemiringFlags flags{.idempotent = true, .complete = true, .has_inverses = false};
  static constexpr std::string_view name = "max-min";

  T zero() const noexcept { return traits::neg_inf(); }
  T one() const noexcept { return traits::pos_inf(); }
  T add(T a, T b) const noexcept { return std::max(a, b); }
  T mul(T a, T b) const noexcept { return std::min(a, b); }
  std::optional<T> closure(T) const noexcept { return one(); }
  // min(a, b) = +∞ forces a = +∞: the unit is the only invertible element.
  std::optional<T> inverse(T a) const noexcept {
    if (a == one()) return one();
    return std::nullopt;
  }
  bool equal(T a, T b) const noexcept { return traits::near(a, b); }

  bool contains(T a) const noexcept {
    if constexpr (std::is_floating_point_v<T>) {
      return !std::isnan(a);
    }
    return true;
  }
  std::vector<T> sentinels() const { return {zero(), one()}; }
  template <class Rng>
  T sample(Rng& rng) const {
    return static_cast<T>(std::uniform_int_distribution<int>(-10, 10)(rng));
  }
};

/// ({0, 1}, or, and, 0, 1). Carrier is a byte so matrices stay plain vectors.
struct Boolean {
  using value_type = std::uint8_t;
  static constexpr SemiringFlags flags{.idempotent = true, .complete = true, .has_inverses = true};
  static constexpr std::string_view name = "boolean";

  std::uint8_t zero() const noexcept { return 0; }
  std::uint8_t one() const noexcept { return 1; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const noexcept { return (a | b) & 1U; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const noexcept { return (a & b) & 1U; }
  std::optional<std::uint8_t> closure(std::uint8_t) const noexcept { return one(); }
  std::optional<std::uint8_t> inverse(std::uint8_t a) const noexcept {
    if (a == 1) return one();
    return std::nullopt;
  }
  bool equal(std::uint8_t a, std::uint8_t b) const noexcept { return a == b; }

  bool contains(std::uint8_t a) const noexcept { return a <= 1; }
  std::vector<std::uint8_t> sentinels() const { return {}; }
  template <class Rng>
  std::uint8_t sample(Rng& rng) const {
    return static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, 1)(rng));
  }
};

}  // namespace semipath
