#pragma once

// Name → semiring dispatch for the command-line front end. CLI carriers are
// `double` for the real-valued instances and a byte for the Boolean one.

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "semipath/instances.hpp"
#include "semipath/harness/instance_file.hpp"

namespace semipath::harness {

inline constexpr std::array<std::string_view, 5> kSemiringNames = {
    NonNegReal::name, MaxPlus<double>::name, MaxPlusComplete<double>::name, MaxMin<double>::name,
    Boolean::name,
};

inline bool is_registered(std::string_view name) {
  for (auto n : kSemiringNames) {
    if (n == name) return true;
  }
  return false;
}

/// Calls `f` with a default-constructed instance of the named semiring.
template <class F>
decltype(auto) visit_semiring(std::string_view name, F&& f) {
  if (name == NonNegReal::name) return std::forward<F>(f)(NonNegReal{});
  if (name == MaxPlus<double>::name) return std::forward<F>(f)(MaxPlus<double>{});
  if (name == MaxPlusComplete<double>::name) return std::forward<F>(f)(MaxPlusComplete<double>{});
  if (name == MaxMin<double>::name) return std::forward<F>(f)(MaxMin<double>{});
  if (name == Boolean::name) return std::forward<F>(f)(Boolean{});
  throw UnknownSemiring(std::string(name));
}

}  // namespace semipath::harness
