#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace semipath::harness {

/// Malformed instance file. `context()` names the offending field or the
/// line/column of a syntax error.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string context, const std::string& message)
      : std::runtime_error(context.empty() ? message : context + ": " + message), context_(std::move(context)) {}

  const std::string& context() const noexcept { return context_; }

 private:
  std::string context_;
};

class UnknownSemiring : public ParseError {
 public:
  explicit UnknownSemiring(const std::string& name)
      : ParseError("semiring", "unknown semiring '" + name + "'") {}
};

class BadSentinel : public ParseError {
 public:
  using ParseError::ParseError;
};

/// One problem instance. Values are stored as doubles with ±infinity for the
/// sentinels; Boolean values are 0.0 or 1.0. Without `b` the file describes
/// a Yule–Walker problem, with `b` a general Bellman system.
struct InstanceFile {
  std::string semiring;
  double r0 = 0.0;
  std::vector<double> r;
  std::optional<std::vector<double>> b;

  bool is_yule_walker() const noexcept { return !b.has_value(); }
  std::size_t dimension() const noexcept { return b ? b->size() : r.size(); }

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

InstanceFile parse_instance(const std::filesystem::path& path);
InstanceFile parse_instance_text(std::string_view text);

nlohmann::json serialize_instance(const InstanceFile& inst);

/// JSON encoding of a carrier value: a number, or "inf" / "-inf".
nlohmann::json value_to_json(double v);

}  // namespace semipath::harness
