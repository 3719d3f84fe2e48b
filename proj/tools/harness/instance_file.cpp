#include "semipath/harness/instance_file.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "semipath/harness/registry.hpp"

namespace semipath::harness {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

/// Reads one value and checks it against the carrier of `s`.
template <class S>
double read_value(const S& s, const json& j, const std::string& field) {
  using V = typename S::value_type;
  double v = 0.0;
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    if (text == "inf") {
      v = std::numeric_limits<double>::infinity();
    } else if (text == "-inf") {
      v = -std::numeric_limits<double>::infinity();
    } else {
      throw ParseError(field, "expected a number, \"inf\" or \"-inf\", got \"" + text + "\"");
    }
    if constexpr (std::is_floating_point_v<V>) {
      if (!s.contains(static_cast<V>(v))) {
        throw BadSentinel(field, "sentinel \"" + text + "\" is not in the carrier of " + std::string(S::name));
      }
    } else {
      throw BadSentinel(field, "sentinel \"" + text + "\" is not in the carrier of " + std::string(S::name));
    }
    return v;
  }
  if (!j.is_number()) throw ParseError(field, "expected a number, got " + std::string(j.type_name()));
  v = j.get<double>();
  if constexpr (std::is_floating_point_v<V>) {
    if (!s.contains(static_cast<V>(v))) {
      throw ParseError(field, "value " + j.dump() + " is outside the carrier of " + std::string(S::name));
    }
  } else {
    if (v != 0.0 && v != 1.0) {
      throw ParseError(field, "value " + j.dump() + " is outside the carrier of " + std::string(S::name));
    }
  }
  return v;
}

template <class S>
std::vector<double> read_array(const S& s, const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field, "expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read_value(s, j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

InstanceFile from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("", "instance file must hold a single JSON object");
  static const std::set<std::string> known = {"semiring", "r0", "r", "b"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) throw ParseError(key, "unknown field");
  }
  for (const char* required : {"semiring", "r0", "r"}) {
    if (!doc.contains(required)) throw ParseError(required, "missing required field");
  }
  if (!doc["semiring"].is_string()) throw ParseError("semiring", "expected a string");

  InstanceFile inst;
  inst.semiring = doc["semiring"].get<std::string>();
  visit_semiring(inst.semiring, [&](const auto& s) {
    inst.r0 = read_value(s, doc["r0"], "r0");
    inst.r = read_array(s, doc["r"], "r");
    if (doc.contains("b")) inst.b = read_array(s, doc["b"], "b");
  });

  if (inst.b) {
    if (inst.b->empty()) throw ParseError("b", "must have at least one entry");
    if (inst.r.size() + 1 != inst.b->size()) {
      throw ParseError("r", "has " + std::to_string(inst.r.size()) + " entries; a system with " +
                                std::to_string(inst.b->size()) + " right-hand side entries needs " +
                                std::to_string(inst.b->size() - 1));
    }
  } else if (inst.r.empty()) {
    throw ParseError("r", "must have at least one entry");
  }
  return inst;
}

}  // namespace

InstanceFile parse_instance_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  return from_json(doc);
}

InstanceFile parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open instance file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

json value_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json serialize_instance(const InstanceFile& inst) {
  const bool boolean = inst.semiring == Boolean::name;
  auto encode = [&](double v) -> json {
    if (boolean) return static_cast<int>(v);
    return value_to_json(v);
  };
  auto encode_all = [&](const std::vector<double>& values) {
    json arr = json::array();
    for (double v : values) arr.push_back(encode(v));
    return arr;
  };
  json doc = json::object();
  doc["semiring"] = inst.semiring;
  doc["r0"] = encode(inst.r0);
  doc["r"] = encode_all(inst.r);
  if (inst.b) doc["b"] = encode_all(*inst.b);
  return doc;
}

}  // namespace semipath::harness
