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

// Level values, the nested sublevel families F_0 ⊂ F_1 ⊂ ... ⊂ F_p = 2^E,
// and the (Qh) condition on equal-valued pairs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordsub/conditions.hpp"
#include "ordsub/error.hpp"
#include "ordsub/set_function.hpp"

namespace ordsub {

struct LevelValues {
  std::vector<OrdinalValue> mu;  // strictly increasing

  std::size_t p() const noexcept { return mu.size(); }
  friend bool operator==(const LevelValues&, const LevelValues&) = default;
};

using Family = std::vector<Subset>;  // ascending mask, no repeats

struct LevelChain {
  std::vector<Family> families;  // F_0 .. F_p

  std::size_t p() const noexcept { return families.empty() ? 0 : families.size() - 1; }
  friend bool operator==(const LevelChain&, const LevelChain&) = default;
};

inline LevelValues levels(const SetFunction& f) { return {distinct_values(f)}; }

// F_i = {X : f(X) <= mu_i}; F_0 is empty.
inline Family level_family(const SetFunction& f, int i) {
  const LevelValues lv = levels(f);
  if (i < 0 || static_cast<std::size_t>(i) > lv.p())
    throw Error(Errc::range, "level index " + std::to_string(i) + " outside [0, " +
                                 std::to_string(lv.p()) + "]");
  Family out;
  if (i == 0) return out;
  const OrdinalValue& bound = lv.mu[static_cast<std::size_t>(i - 1)];
  for (std::uint32_t m = 0; m < f.size(); ++m)
    if (f(Subset(m)) <= bound) out.push_back(Subset(m));
  return out;
}

inline LevelChain family_chain(const SetFunction& f) {
  const LevelValues lv = levels(f);
  LevelChain chain;
  chain.families.resize(lv.p() + 1);
  for (std::uint32_t m = 0; m < f.size(); ++m) {
    const auto level = static_cast<std::size_t>(
        std::lower_bound(lv.mu.begin(), lv.mu.end(), f(Subset(m))) - lv.mu.begin()) + 1;
    for (std::size_t i = level; i <= lv.p(); ++i) chain.families[i].push_back(Subset(m));
  }
  return chain;
}

// Throws Errc::chain unless F_0 is empty, F_p is the whole power set, every
// family is sorted without repeats, and each family strictly contains the
// previous one.
inline void validate_chain(const GroundSet& ground, const LevelChain& chain) {
  if (chain.families.size() < 2)
    throw Error(Errc::chain, "a chain needs at least F_0 and F_1");
  if (!chain.families.front().empty()) throw Error(Errc::chain, "F_0 must be empty");
  for (std::size_t i = 0; i < chain.families.size(); ++i) {
    const Family& fam = chain.families[i];
    for (std::size_t j = 0; j < fam.size(); ++j) {
      if (!ground.valid(fam[j]))
        throw Error(Errc::chain, "F_" + std::to_string(i) + " has a subset outside the power set");
      if (j > 0 && !(fam[j - 1] < fam[j]))
        throw Error(Errc::chain, "F_" + std::to_string(i) + " is not sorted or repeats a subset");
    }
    if (i > 0) {
      const Family& prev = chain.families[i - 1];
      if (!std::includes(fam.begin(), fam.end(), prev.begin(), prev.end()))
        throw Error(Errc::chain, "F_" + std::to_string(i - 1) + " is not contained in F_" +
                                     std::to_string(i));
      if (fam.size() == prev.size())
        throw Error(Errc::chain, "F_" + std::to_string(i) + " does not strictly extend F_" +
                                     std::to_string(i - 1));
    }
  }
  if (chain.families.back().size() != ground.power_set_size())
    throw Error(Errc::chain, "last family is not the whole power set");
}

// (Qh) checked by scanning equal-value classes only; the witness is the
// lexicographically smallest violating ordered pair.
inline CheckResult check_qh(const SetFunction& f) {
  std::vector<std::uint32_t> order(f.size());
  for (std::uint32_t m = 0; m < f.size(); ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return f(Subset(a)) < f(Subset(b));
  });
  std::optional<std::pair<Subset, Subset>> best;
  for (std::size_t lo = 0; lo < order.size();) {
    std::size_t hi = lo + 1;
    while (hi < order.size() && f(Subset(order[hi])) == f(Subset(order[lo]))) ++hi;
    for (std::size_t i = lo; i < hi; ++i) {
      const Subset x(order[i]);
      if (best && best->first < x) break;
      for (std::size_t j = lo; j < hi; ++j) {
        const Subset y(order[j]);
        const OrdinalValue& v = f(x);
        const OrdinalValue& vu = f(x | y);
        const OrdinalValue& vi = f(x & y);
        const bool holds = (vu == v && vi == v) || vu < v || vi < v;
        if (!holds) {
          if (!best || std::pair{x, y} < *best) best = std::pair{x, y};
          break;
        }
      }
    }
    lo = hi;
  }
  if (!best) return {};
  const auto [x, y] = *best;
  return ConditionWitness{ConditionId::Qh, x, y, f(x), f(y), f(x | y), f(x & y)};
}

// Assigns f(X) = i on F_i \ F_{i-1}. Chains whose induced function fails
// (Qh) are rejected.
inline SetFunction qh_from_chain(const GroundSet& ground, const LevelChain& chain) {
  validate_chain(ground, chain);
  std::vector<OrdinalValue> values(ground.power_set_size());
  std::vector<bool> seen(ground.power_set_size(), false);
  for (std::size_t i = 1; i < chain.families.size(); ++i) {
    for (auto s : chain.families[i]) {
      if (seen[s.mask]) continue;
      seen[s.mask] = true;
      values[s.mask] = OrdinalValue::integer(static_cast<std::int64_t>(i));
    }
  }
  SetFunction f(std::make_shared<const GroundSet>(ground),
                std::make_shared<const Codomain>(Codomain::integer()), std::move(values));
  if (auto r = check_qh(f); !r.ok()) {
    const auto& w = *r.witness();
    throw Error(Errc::chain, "chain does not induce a (Qh) function: pair (" +
                                 ground.format(w.x) + "), (" + ground.format(w.y) + ")");
  }
  return f;
}

}  // namespace ordsub
