#pragma once

#include <cstdint>

#include "semipath/semiring.hpp"

namespace semipath {

struct OpCounts {
  std::uint64_t add = 0;
  std::uint64_t mul = 0;
  std::uint64_t closure = 0;
  std::uint64_t inverse = 0;

  std::uint64_t total() const noexcept { return add + mul + closure + inverse; }
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// Forwards every operation to `Base` and tallies it in an accumulator
/// owned by the caller. One accumulator per solve; not thread-safe.
template <Semiring Base>
class Counting {
 public:
  using value_type = value_t<Base>;
  static constexpr SemiringFlags flags = Base::flags;
  static constexpr std::string_view name = Base::name;

  Counting(Base base, OpCounts& counts) : base_(base), counts_(&counts) {}

  value_type zero() const { return base_.zero(); }
  value_type one() const { return base_.one(); }
  value_type add(const value_type& a, const value_type& b) const {
    ++counts_->add;
    return base_.add(a, b);
  }
  value_type mul(const value_type& a, const value_type& b) const {
    ++counts_->mul;
    return base_.mul(a, b);
  }
  std::optional<value_type> closure(const value_type& a) const {
    ++counts_->closure;
    return base_.closure(a);
  }
  std::optional<value_type> inverse(const value_type& a) const {
    ++counts_->inverse;
    return base_.inverse(a);
  }
  bool equal(const value_type& a, const value_type& b) const { return base_.equal(a, b); }

  bool contains(const value_type& a) const
    requires requires(const Base& b) { b.contains(a); }
  {
    return base_.contains(a);
  }
  auto sentinels() const
    requires requires(const Base& b) { b.sentinels(); }
  {
    return base_.sentinels();
  }
  template <class Rng>
  value_type sample(Rng& rng) const {
    return base_.sample(rng);
  }

  const Base& base() const noexcept { return base_; }
  const OpCounts& counts() const noexcept { return *counts_; }

 private:
  Base base_;
  OpCounts* counts_;
};

}  // namespace semipath
