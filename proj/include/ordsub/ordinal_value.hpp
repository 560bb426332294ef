// Copyright 2026 The ordsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exact totally ordered values: integers, reduced rationals, or positions in
// a user-supplied label order. Floating point is never used.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ordsub/error.hpp"

namespace ordsub {

enum class CodomainKind : std::uint8_t { integer, rational, labels };

constexpr std::string_view kind_name(CodomainKind k) {
  switch (k) {
    case CodomainKind::integer: return "integer";
    case CodomainKind::rational: return "rational";
    case CodomainKind::labels: return "labels";
  }
  return "unknown";
}

inline std::optional<CodomainKind> parse_kind(std::string_view s) {
  if (s == "integer") return CodomainKind::integer;
  if (s == "rational") return CodomainKind::rational;
  if (s == "labels") return CodomainKind::labels;
  return std::nullopt;
}

class OrdinalValue {
 public:
  OrdinalValue() = default;

  static OrdinalValue integer(std::int64_t v) {
    return OrdinalValue(CodomainKind::integer, v, 1);
  }

  // Stored in lowest terms with a positive denominator, so equal rationals
  // have identical representations.
  static OrdinalValue rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(Errc::validation, "rational with zero denominator");
    return from_wide(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  static OrdinalValue label(std::size_t index) {
    if (index > static_cast<std::size_t>(std::numeric_limits<std::int64_t>::max()))
      throw Error(Errc::range, "label index too large");
    return OrdinalValue(CodomainKind::labels, static_cast<std::int64_t>(index), 1);
  }

  CodomainKind kind() const noexcept { return kind_; }
  bool is_numeric() const noexcept { return kind_ != CodomainKind::labels; }
  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  std::size_t label_index() const noexcept { return static_cast<std::size_t>(num_); }

  friend std::strong_ordering operator<=>(const OrdinalValue& a, const OrdinalValue& b) {
    if (a.kind_ != b.kind_) {
      throw Error(Errc::codomain, std::string("cannot compare ") +
                                      std::string(kind_name(a.kind_)) + " with " +
                                      std::string(kind_name(b.kind_)) + " value");
    }
    if (a.kind_ == CodomainKind::rational && (a.den_ != 1 || b.den_ != 1)) {
      const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
      const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
      return lhs <=> rhs;
    }
    return a.num_ <=> b.num_;
  }

  friend bool operator==(const OrdinalValue& a, const OrdinalValue& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  // Wide-integer construction shared by arithmetic helpers.
  static OrdinalValue from_wide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi)
      throw Error(Errc::overflow, "rational value does not fit in 64-bit terms");
    return OrdinalValue(CodomainKind::rational, static_cast<std::int64_t>(num),
                        static_cast<std::int64_t>(den));
  }

 private:
  OrdinalValue(CodomainKind k, std::int64_t num, std::int64_t den)
      : kind_(k), num_(num), den_(den) {}

  CodomainKind kind_ = CodomainKind::integer;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Description of the totally ordered set a function takes values in.
class Codomain {
 public:
  static Codomain integer() { return Codomain(CodomainKind::integer, {}); }
  static Codomain rational() { return Codomain(CodomainKind::rational, {}); }

  static Codomain labels(std::vector<std::string> order) {
    if (order.empty()) throw Error(Errc::validation, "label codomain needs at least one label");
    std::unordered_set<std::string> seen;
    for (const auto& l : order) {
      if (!seen.insert(l).second)
        throw Error(Errc::validation, "duplicate label '" + l + "'");
    }
    return Codomain(CodomainKind::labels, std::move(order));
  }

  static Codomain numeric(CodomainKind k) {
    if (k == CodomainKind::labels) throw Error(Errc::validation, "labels codomain needs a label order");
    return Codomain(k, {});
  }

  CodomainKind kind() const noexcept { return kind_; }
  bool is_numeric() const noexcept { return kind_ != CodomainKind::labels; }
  const std::vector<std::string>& label_order() const noexcept { return labels_; }

  bool contains(const OrdinalValue& v) const noexcept {
    if (v.kind() != kind_) return false;
    if (kind_ == CodomainKind::labels) return v.label_index() < labels_.size();
    return true;
  }

  std::optional<std::size_t> find_label(std::string_view name) const {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  // Same carrier with the order reversed.
  Codomain reversed() const {
    if (kind_ != CodomainKind::labels) return *this;
    return Codomain(kind_, std::vector<std::string>(labels_.rbegin(), labels_.rend()));
  }

  friend bool operator==(const Codomain&, const Codomain&) = default;

 private:
  Codomain(CodomainKind k, std::vector<std::string> labels)
      : kind_(k), labels_(std::move(labels)) {}

  CodomainKind kind_;
  std::vector<std::string> labels_;
};

inline std::string to_string(const OrdinalValue& v, const Codomain* codomain = nullptr) {
  switch (v.kind()) {
    case CodomainKind::integer:
      return std::to_string(v.numerator());
    case CodomainKind::rational:
      if (v.denominator() == 1) return std::to_string(v.numerator());
      return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
    case CodomainKind::labels:
      if (codomain != nullptr && v.label_index() < codomain->label_order().size())
        return codomain->label_order()[v.label_index()];
      return "#" + std::to_string(v.label_index());
  }
  return "?";
}

namespace detail {

inline void require_numeric(const OrdinalValue& v) {
  if (!v.is_numeric()) throw Error(Errc::unsupported, "arithmetic on a label value");
}

inline void require_same_kind(const OrdinalValue& a, const OrdinalValue& b) {
  if (a.kind() != b.kind()) throw Error(Errc::codomain, "arithmetic across codomains");
}

}  // namespace detail

inline OrdinalValue negate(const OrdinalValue& v) {
  detail::require_numeric(v);
  if (v.kind() == CodomainKind::integer) {
    if (v.numerator() == std::numeric_limits<std::int64_t>::min())
      throw Error(Errc::overflow, "integer negation overflows");
    return OrdinalValue::integer(-v.numerator());
  }
  return OrdinalValue::from_wide(-static_cast<__int128>(v.numerator()), v.denominator());
}

inline OrdinalValue add(const OrdinalValue& a, const OrdinalValue& b) {
  detail::require_numeric(a);
  detail::require_same_kind(a, b);
  if (a.kind() == CodomainKind::integer) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a.numerator(), b.numerator(), &out))
      throw Error(Errc::overflow, "integer addition overflows");
    return OrdinalValue::integer(out);
  }
  const __int128 num = static_cast<__int128>(a.numerator()) * b.denominator() +
                       static_cast<__int128>(b.numerator()) * a.denominator();
  const __int128 den = static_cast<__int128>(a.denominator()) * b.denominator();
  return OrdinalValue::from_wide(num, den);
}

// Compares a + b with c + d exactly. Intermediate products of 64-bit terms
// need up to ~2^254, so the comparison runs in 512-bit integers.
inline std::strong_ordering compare_sums(const OrdinalValue& a, const OrdinalValue& b,
                                         const OrdinalValue& c, const OrdinalValue& d) {
  for (const auto* v : {&a, &b, &c, &d}) {
    detail::require_numeric(*v);
    detail::require_same_kind(a, *v);
  }
  using wide = boost::multiprecision::int512_t;
  const wide lnum = wide(a.numerator()) * b.denominator() + wide(b.numerator()) * a.denominator();
  const wide lden = wide(a.denominator()) * b.denominator();
  const wide rnum = wide(c.numerator()) * d.denominator() + wide(d.numerator()) * c.denominator();
  const wide rden = wide(c.denominator()) * d.denominator();
  const wide lhs = lnum * rden;
  const wide rhs = rnum * lden;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace ordsub
