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

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ordsub/error.hpp"

namespace ordsub {

inline constexpr int kMaxGroundSize = 20;

// A subset of the ground set; bit i is element i.
struct Subset {
  std::uint32_t mask = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t m) : mask(m) {}

  constexpr int size() const noexcept { return std::popcount(mask); }
  constexpr bool empty() const noexcept { return mask == 0; }
  constexpr bool contains(int element) const noexcept { return (mask >> element) & 1U; }
  constexpr bool is_subset_of(Subset other) const noexcept {
    return (mask & other.mask) == mask;
  }

  friend constexpr Subset operator|(Subset a, Subset b) noexcept { return Subset(a.mask | b.mask); }
  friend constexpr Subset operator&(Subset a, Subset b) noexcept { return Subset(a.mask & b.mask); }
  friend constexpr auto operator<=>(Subset, Subset) = default;
};

// Visits every Z with Z ⊆ s in ascending mask order.
template <class Visit>
constexpr void for_each_subset_of(Subset s, Visit&& visit) {
  std::uint32_t sub = 0;
  do {
    visit(Subset(sub));
    sub = (sub - s.mask) & s.mask;
  } while (sub != 0);
}

class GroundSet {
 public:
  // Top-level ground sets are nonempty. Element names must be unique,
  // nonempty and free of ',' (the subset key separator).
  static GroundSet make(std::vector<std::string> names) {
    if (names.empty()) throw Error(Errc::validation, "ground set must be nonempty");
    return make_possibly_empty(std::move(names));
  }

  // Ground sets produced by interval restriction may be empty.
  static GroundSet make_possibly_empty(std::vector<std::string> names) {
    if (names.size() > static_cast<std::size_t>(kMaxGroundSize)) {
      throw Error(Errc::validation, "ground set has " + std::to_string(names.size()) +
                                        " elements; at most " +
                                        std::to_string(kMaxGroundSize) + " are supported");
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : names) {
      if (name.empty()) throw Error(Errc::validation, "empty element name");
      if (name.find(',') != std::string::npos)
        throw Error(Errc::validation, "element name '" + name + "' contains ','");
      if (!seen.insert(name).second)
        throw Error(Errc::validation, "duplicate element name '" + name + "'");
    }
    return GroundSet(std::move(names));
  }

  // Elements named a, b, c, ...
  static GroundSet letters(int n) {
    if (n < 1 || n > kMaxGroundSize)
      throw Error(Errc::validation, "ground set size must be in [1, " +
                                        std::to_string(kMaxGroundSize) + "]");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return GroundSet(std::move(names));
  }

  int size() const noexcept { return static_cast<int>(names_.size()); }
  std::size_t power_set_size() const noexcept { return std::size_t{1} << names_.size(); }
  Subset full() const noexcept { return Subset(static_cast<std::uint32_t>(power_set_size() - 1)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }

  bool valid(Subset s) const noexcept { return s.mask < power_set_size(); }
  void require_valid(Subset s) const {
    if (!valid(s))
      throw Error(Errc::index, "subset mask " + std::to_string(s.mask) + " outside 2^" +
                                   std::to_string(size()));
  }
  Subset complement(Subset s) const noexcept { return Subset(s.mask ^ full().mask); }

  std::optional<int> index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<int>(it - names_.begin());
  }

  std::vector<std::string> element_names(Subset s) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
      if (s.contains(i)) out.push_back(names_[static_cast<std::size_t>(i)]);
    return out;
  }

  // Comma-joined element names in ground-set order; "" for the empty set.
  std::string format(Subset s) const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
      if (!s.contains(i)) continue;
      if (!out.empty()) out += ',';
      out += names_[static_cast<std::size_t>(i)];
    }
    return out;
  }

  // Inverse of format; element order in the key is irrelevant, repeats are not.
  Subset parse(std::string_view key) const {
    Subset s;
    if (key.empty()) return s;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = key.find(',', start);
      const std::string_view token =
          key.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      const auto idx = index_of(token);
      if (!idx)
        throw Error(Errc::parse, "unknown element '" + std::string(token) + "' in subset '" +
                                     std::string(key) + "'");
      if (s.contains(*idx))
        throw Error(Errc::parse, "element '" + std::string(token) + "' repeated in subset '" +
                                     std::string(key) + "'");
      s.mask |= 1U << *idx;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return s;
  }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  explicit GroundSet(std::vector<std::string> names) : names_(std::move(names)) {}

  std::vector<std::string> names_;
};

// The sublattice [lo, hi] = {Z : lo ⊆ Z ⊆ hi}.
class Interval {
 public:
  Interval(Subset lo, Subset hi) : lo_(lo), hi_(hi) {
    if (!lo.is_subset_of(hi))
      throw Error(Errc::interval, "interval lower end " + std::to_string(lo.mask) +
                                      " is not a subset of upper end " + std::to_string(hi.mask));
  }

  Subset lo() const noexcept { return lo_; }
  Subset hi() const noexcept { return hi_; }
  Subset free() const noexcept { return Subset(hi_.mask & ~lo_.mask); }
  bool contains(Subset z) const noexcept { return lo_.is_subset_of(z) && z.is_subset_of(hi_); }
  std::size_t size() const noexcept { return std::size_t{1} << free().size(); }

  // Ascending mask order.
  template <class Visit>
  void for_each(Visit&& visit) const {
    for_each_subset_of(free(), [&](Subset z) { visit(lo_ | z); });
  }

 private:
  Subset lo_;
  Subset hi_;
};

}  // namespace ordsub
