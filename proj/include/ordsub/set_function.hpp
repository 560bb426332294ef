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
#include <initializer_list>
#include <optional>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordsub/error.hpp"
#include "ordsub/ordinal_value.hpp"
#include "ordsub/subset.hpp"

namespace ordsub {

// A tabulated function 2^E -> (P, <=). values()[mask] is the value at the
// subset with that mask. Immutable; copies share the ground set and codomain.
class SetFunction {
 public:
  SetFunction(GroundSet ground, Codomain codomain, std::vector<OrdinalValue> values)
      : SetFunction(std::make_shared<const GroundSet>(std::move(ground)),
                    std::make_shared<const Codomain>(std::move(codomain)), std::move(values)) {}

  SetFunction(std::shared_ptr<const GroundSet> ground, std::shared_ptr<const Codomain> codomain,
              std::vector<OrdinalValue> values)
      : ground_(std::move(ground)), codomain_(std::move(codomain)), values_(std::move(values)) {
    if (values_.size() != ground_->power_set_size()) {
      throw Error(Errc::validation, "expected " + std::to_string(ground_->power_set_size()) +
                                        " values, got " + std::to_string(values_.size()));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!codomain_->contains(values_[i]))
        throw Error(Errc::validation, "value at mask " + std::to_string(i) + " is not in the " +
                                          std::string(kind_name(codomain_->kind())) + " codomain");
    }
  }

  const GroundSet& ground() const noexcept { return *ground_; }
  const Codomain& codomain() const noexcept { return *codomain_; }
  const std::shared_ptr<const GroundSet>& ground_ptr() const noexcept { return ground_; }
  const std::shared_ptr<const Codomain>& codomain_ptr() const noexcept { return codomain_; }

  int n() const noexcept { return ground_->size(); }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const OrdinalValue> values() const noexcept { return values_; }

  // Unchecked lookup for hot loops.
  const OrdinalValue& operator()(Subset s) const noexcept { return values_[s.mask]; }

  const OrdinalValue& at(Subset s) const {
    ground_->require_valid(s);
    return values_[s.mask];
  }

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.ground() == b.ground() && a.codomain() == b.codomain() && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const GroundSet> ground_;
  std::shared_ptr<const Codomain> codomain_;
  std::vector<OrdinalValue> values_;
};

inline SetFunction make_integer_function(GroundSet ground, std::span<const std::int64_t> values) {
  std::vector<OrdinalValue> vs;
  vs.reserve(values.size());
  for (auto v : values) vs.push_back(OrdinalValue::integer(v));
  return SetFunction(std::move(ground), Codomain::integer(), std::move(vs));
}

// On the letter ground set of size log2(values.size()).
inline SetFunction make_integer_function(std::initializer_list<std::int64_t> values) {
  const std::size_t count = values.size();
  if (count < 2 || !std::has_single_bit(count))
    throw Error(Errc::validation, "value table length must be a power of two >= 2");
  return make_integer_function(GroundSet::letters(std::countr_zero(count)),
                               std::span<const std::int64_t>(values.begin(), values.size()));
}

// Distinct values of f in increasing order.
inline std::vector<OrdinalValue> distinct_values(const SetFunction& f) {
  std::vector<OrdinalValue> mu(f.values().begin(), f.values().end());
  std::sort(mu.begin(), mu.end());
  mu.erase(std::unique(mu.begin(), mu.end()), mu.end());
  return mu;
}

inline OrdinalValue evaluate(const SetFunction& f, Subset s) { return f.at(s); }

// g(X) = f(E \ X).
inline SetFunction complement_dual(const SetFunction& f) {
  std::vector<OrdinalValue> out(f.size());
  const std::uint32_t full = f.ground().full().mask;
  for (std::uint32_t m = 0; m < f.size(); ++m) out[m] = f.values()[m ^ full];
  return SetFunction(f.ground_ptr(), f.codomain_ptr(), std::move(out));
}

// Same function read in the reversed order: numeric values are negated and
// label orders are reversed.
inline SetFunction order_dual(const SetFunction& f) {
  std::vector<OrdinalValue> out;
  out.reserve(f.size());
  if (f.codomain().kind() == CodomainKind::labels) {
    const std::size_t last = f.codomain().label_order().size() - 1;
    for (const auto& v : f.values()) out.push_back(OrdinalValue::label(last - v.label_index()));
    return SetFunction(f.ground_ptr(), std::make_shared<const Codomain>(f.codomain().reversed()),
                       std::move(out));
  }
  for (const auto& v : f.values()) out.push_back(negate(v));
  return SetFunction(f.ground_ptr(), f.codomain_ptr(), std::move(out));
}

using ValueMap = std::vector<std::pair<OrdinalValue, OrdinalValue>>;

// sigma o f for a strictly increasing sigma given as (old, new) pairs that
// cover every value f attains. The target codomain defaults to f's when the
// new values share its kind, or the plain numeric codomain of their kind.
inline SetFunction monotone_transform(const SetFunction& f, const ValueMap& sigma,
                                      std::optional<Codomain> target = std::nullopt) {
  if (sigma.empty()) throw Error(Errc::validation, "empty value map");
  ValueMap sorted = sigma;
  for (const auto& [from, to] : sorted) {
    if (!f.codomain().contains(from))
      throw Error(Errc::validation, "value map source " + to_string(from) + " is not in f's codomain");
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1].first == sorted[i].first)
      throw Error(Errc::validation, "value map lists " + to_string(sorted[i].first) + " twice");
    if (!(sorted[i - 1].second < sorted[i].second))
      throw Error(Errc::validation, "value map is not strictly increasing at " +
                                        to_string(sorted[i].first));
  }

  const CodomainKind new_kind = sorted.front().second.kind();
  Codomain codomain = target ? *target
                      : new_kind == f.codomain().kind() ? f.codomain()
                                                        : Codomain::numeric(new_kind);
  std::vector<OrdinalValue> out;
  out.reserve(f.size());
  for (std::size_t m = 0; m < f.size(); ++m) {
    const OrdinalValue& v = f.values()[m];
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v,
                               [](const auto& entry, const OrdinalValue& x) { return entry.first < x; });
    if (it == sorted.end() || !(it->first == v))
      throw Error(Errc::validation, "value map does not cover " + to_string(v, &f.codomain()));
    out.push_back(it->second);
  }
  return SetFunction(f.ground_ptr(), std::make_shared<const Codomain>(std::move(codomain)),
                     std::move(out));
}

// Restriction to [lo, hi], re-based onto the ground set hi \ lo: the result
// maps Z' to f(lo ∪ Z'). A degenerate interval yields a one-point function
// on an empty ground set.
inline SetFunction restrict(const SetFunction& f, const Interval& box) {
  f.ground().require_valid(box.hi());
  std::vector<int> free_elements;
  std::vector<std::string> names;
  for (int i = 0; i < f.n(); ++i) {
    if (box.free().contains(i)) {
      free_elements.push_back(i);
      names.push_back(f.ground().name(i));
    }
  }
  const std::size_t count = std::size_t{1} << free_elements.size();
  std::vector<OrdinalValue> out;
  out.reserve(count);
  for (std::uint32_t local = 0; local < count; ++local) {
    Subset z = box.lo();
    for (std::size_t b = 0; b < free_elements.size(); ++b)
      if ((local >> b) & 1U) z.mask |= 1U << free_elements[b];
    out.push_back(f(z));
  }
  return SetFunction(std::make_shared<const GroundSet>(GroundSet::make_possibly_empty(std::move(names))),
                     f.codomain_ptr(), std::move(out));
}

}  // namespace ordsub
