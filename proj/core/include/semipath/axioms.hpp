#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "semipath/semiring.hpp"

namespace semipath {

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
  }
  /// True if the named axiom was checked and failed.
  bool failed(std::string_view axiom) const {
    return std::any_of(checks.begin(), checks.end(),
                       [&](const AxiomCheck& c) { return c.axiom == axiom && !c.passed; });
  }
  const AxiomCheck* find(std::string_view axiom) const {
    for (const auto& c : checks) {
      if (c.axiom == axiom) return &c;
    }
    return nullptr;
  }
};

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::size_t kDefaultSampleCount = 8;

/// Zero, one, the carrier's sentinels, then seeded random values, without
/// duplicates, up to `count` values (fewer if the carrier is smaller).
template <Semiring S>
std::vector<value_t<S>> default_samples(const S& s, std::uint64_t seed = kDefaultSeed,
                                        std::size_t count = kDefaultSampleCount) {
  std::vector<value_t<S>> out;
  auto push = [&](const value_t<S>& v) {
    if (out.size() < count && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  push(s.zero());
  push(s.one());
  for (const auto& v : s.sentinels()) push(v);
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; out.size() < count && attempt < 64 * count; ++attempt) {
    push(s.sample(rng));
  }
  return out;
}

namespace detail {

template <class T>
std::string fmt(const T& v) {
  if constexpr (requires { carrier_traits<T>::format(v); }) {
    return carrier_traits<T>::format(v);
  } else {
    return "?";
  }
}

template <class T>
std::string tuple_text(std::initializer_list<T> values) {
  std::string out = "(";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ", ";
    out += fmt(v);
    first = false;
  }
  return out + ")";
}

}  // namespace detail

/// Checks the semiring laws on every pair and triple drawn from `samples`.
/// Failures are recorded with the first counterexample; nothing throws.
/// Closure and inverse laws are checked wherever those operations are defined.
template <Semiring S>
AxiomReport axiom_suite(const S& s, const std::vector<value_t<S>>& samples) {
  using V = value_t<S>;
  AxiomReport report;
  report.checks.reserve(12);
  auto check = [&](std::string name) -> AxiomCheck& {
    report.checks.push_back(AxiomCheck{std::move(name), true, 0, {}});
    return report.checks.back();
  };
  auto record = [](AxiomCheck& c, bool ok, std::initializer_list<V> witness) {
    ++c.cases;
    if (!ok && c.passed) {
      c.passed = false;
      c.counterexample = detail::tuple_text(witness);
    }
  };

  {
    auto& c = check("one-differs-from-zero");
    record(c, !s.equal(s.one(), s.zero()), {s.one(), s.zero()});
  }

  auto& add_assoc = check("add-associative");
  auto& mul_assoc = check("mul-associative");
  auto& left_dist = check("left-distributive");
  auto& right_dist = check("right-distributive");
  for (const V& a : samples) {
    for (const V& b : samples) {
      for (const V& c : samples) {
        record(add_assoc, s.equal(s.add(s.add(a, b), c), s.add(a, s.add(b, c))), {a, b, c});
        record(mul_assoc, s.equal(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c))), {a, b, c});
        record(left_dist, s.equal(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c))), {a, b, c});
        record(right_dist, s.equal(s.mul(s.add(a, b), c), s.add(s.mul(a, c), s.mul(b, c))), {a, b, c});
      }
    }
  }

  auto& add_comm = check("add-commutative");
  for (const V& a : samples) {
    for (const V& b : samples) {
      record(add_comm, s.equal(s.add(a, b), s.add(b, a)), {a, b});
    }
  }

  auto& add_zero = check("add-zero-neutral");
  auto& mul_one = check("mul-one-neutral");
  auto& annihilate = check("zero-annihilates");
  for (const V& a : samples) {
    record(add_zero, s.equal(s.add(a, s.zero()), a) && s.equal(s.add(s.zero(), a), a), {a});
    record(mul_one, s.equal(s.mul(a, s.one()), a) && s.equal(s.mul(s.one(), a), a), {a});
    record(annihilate, s.equal(s.mul(a, s.zero()), s.zero()) && s.equal(s.mul(s.zero(), a), s.zero()),
           {a});
  }

  if constexpr (S::flags.idempotent) {
    auto& idem = check("add-idempotent");
    for (const V& a : samples) record(idem, s.equal(s.add(a, a), a), {a});
  }

  auto& closure = check("closure-fixpoint");
  auto& inverse = check("inverse-cancels");
  for (const V& a : samples) {
    if (auto star = s.closure(a)) {
      const bool ok = s.equal(*star, s.add(s.one(), s.mul(a, *star))) &&
                      s.equal(*star, s.add(s.one(), s.mul(*star, a)));
      record(closure, ok, {a, *star});
    }
    if (auto inv = s.inverse(a)) {
      record(inverse, s.equal(s.mul(a, *inv), s.one()), {a, *inv});
    }
  }
  return report;
}

template <Semiring S>
AxiomReport axiom_suite(const S& s) {
  return axiom_suite(s, default_samples(s));
}

}  // namespace semipath
