#include "semipath/levinson.hpp"

namespace semipath {

std::string_view to_string(BetaVariant v) noexcept {
  switch (v) {
    case BetaVariant::recompute:
      return "recompute";
    case BetaVariant::recursive:
      return "recursive";
    case BetaVariant::fallback:
      return "fallback";
  }
  return "unknown";
}

std::optional<BetaVariant> parse_beta_variant(std::string_view text) noexcept {
  if (text == "recompute") return BetaVariant::recompute;
  if (text == "recursive") return BetaVariant::recursive;
  if (text == "fallback") return BetaVariant::fallback;
  return std::nullopt;
}

}  // namespace semipath
