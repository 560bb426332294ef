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

// Membership tests for the ordinal submodularity classes, with minimal
// violation witnesses.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordsub/error.hpp"
#include "ordsub/parallel.hpp"
#include "ordsub/set_function.hpp"

namespace ordsub {

enum class ConditionId {
  Q1,
  Q2,
  Q3,
  Q4,
  Qh,
  QuasiSubmodular,     // Q1 and Q2
  OrdinarySubmodular,  // f(X) + f(Y) >= f(X ∪ Y) + f(X ∩ Y), numeric codomains only
  Injective,           // all 2^n values distinct
};

inline constexpr std::array<ConditionId, 8> kAllConditions = {
    ConditionId::Q1, ConditionId::Q2, ConditionId::Q3, ConditionId::Q4,
    ConditionId::Qh, ConditionId::QuasiSubmodular, ConditionId::OrdinarySubmodular,
    ConditionId::Injective};

constexpr std::string_view condition_name(ConditionId c) {
  switch (c) {
    case ConditionId::Q1: return "Q1";
    case ConditionId::Q2: return "Q2";
    case ConditionId::Q3: return "Q3";
    case ConditionId::Q4: return "Q4";
    case ConditionId::Qh: return "Qh";
    case ConditionId::QuasiSubmodular: return "QuasiSubmodular";
    case ConditionId::OrdinarySubmodular: return "OrdinarySubmodular";
    case ConditionId::Injective: return "Injective";
  }
  return "?";
}

inline std::optional<ConditionId> parse_condition(std::string_view s) {
  for (auto c : kAllConditions)
    if (condition_name(c) == s) return c;
  if (s == "QS" || s == "Quasi") return ConditionId::QuasiSubmodular;
  if (s == "OS" || s == "Ordinary") return ConditionId::OrdinarySubmodular;
  if (s == "Inj") return ConditionId::Injective;
  return std::nullopt;
}

struct ConditionWitness {
  ConditionId condition;
  Subset x;
  Subset y;
  OrdinalValue vx;
  OrdinalValue vy;
  OrdinalValue vunion;
  OrdinalValue vinter;

  friend bool operator==(const ConditionWitness&, const ConditionWitness&) = default;
};

// Ok, or the lexicographically first violating pair.
class CheckResult {
 public:
  CheckResult() = default;
  CheckResult(ConditionWitness w) : witness_(std::move(w)) {}  // NOLINT(google-explicit-constructor)

  bool ok() const noexcept { return !witness_.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
  const std::optional<ConditionWitness>& witness() const noexcept { return witness_; }

 private:
  std::optional<ConditionWitness> witness_;
};

// Conditions in disjunctive form, so a false hypothesis makes the pair hold.
inline bool holds_on_values(ConditionId cond, const OrdinalValue& fx, const OrdinalValue& fy,
                            const OrdinalValue& fu, const OrdinalValue& fi) {
  switch (cond) {
    case ConditionId::Q1: return fx > fi || fu <= fy;
    case ConditionId::Q2: return fx >= fi || fu < fy;
    case ConditionId::Q3: return fx >= fi || fu <= fy;
    case ConditionId::Q4: return std::max(fx, fy) >= std::min(fu, fi);
    case ConditionId::Qh:
      return fx != fy || (fu == fx && fi == fx) || fu < fx || fi < fx;
    case ConditionId::QuasiSubmodular:
      return (fx > fi || fu <= fy) && (fx >= fi || fu < fy);
    case ConditionId::OrdinarySubmodular:
      return compare_sums(fx, fy, fu, fi) >= 0;
    case ConditionId::Injective:
      break;
  }
  throw Error(Errc::contract, "condition " + std::string(condition_name(cond)) +
                                  " is not a pairwise condition");
}

inline bool holds_at_pair(const SetFunction& f, ConditionId cond, Subset x, Subset y) {
  f.ground().require_valid(x);
  f.ground().require_valid(y);
  if (cond == ConditionId::OrdinarySubmodular && !f.codomain().is_numeric())
    throw Error(Errc::unsupported, "ordinary submodularity needs a numeric codomain");
  return holds_on_values(cond, f(x), f(y), f(x | y), f(x & y));
}

// Re-evaluates the condition on the recorded values.
inline bool reproduces_violation(const ConditionWitness& w) {
  return !holds_on_values(w.condition, w.vx, w.vy, w.vunion, w.vinter);
}

namespace detail {

inline ConditionWitness make_witness(const SetFunction& f, ConditionId cond, Subset x, Subset y) {
  return ConditionWitness{cond, x, y, f(x), f(y), f(x | y), f(x & y)};
}

inline CheckResult scan_pairs(const SetFunction& f, ConditionId cond, ScanOptions opts) {
  const std::size_t n = f.size();
  const auto hit = [&](std::size_t idx) {
    const Subset x(static_cast<std::uint32_t>(idx / n));
    const Subset y(static_cast<std::uint32_t>(idx % n));
    return !holds_on_values(cond, f(x), f(y), f(x | y), f(x & y));
  };
  const auto first = find_first(n * n, hit, opts.threads);
  if (!first) return {};
  return make_witness(f, cond, Subset(static_cast<std::uint32_t>(*first / n)),
                      Subset(static_cast<std::uint32_t>(*first % n)));
}

}  // namespace detail

// Checks a pairwise condition over all ordered pairs in (X.mask, Y.mask)
// order. QuasiSubmodular reports the Q1 witness if Q1 fails, else Q2's.
inline CheckResult check_condition(const SetFunction& f, ConditionId cond, ScanOptions opts = {}) {
  switch (cond) {
    case ConditionId::QuasiSubmodular: {
      auto q1 = detail::scan_pairs(f, ConditionId::Q1, opts);
      if (!q1) return q1;
      return detail::scan_pairs(f, ConditionId::Q2, opts);
    }
    case ConditionId::OrdinarySubmodular:
      if (!f.codomain().is_numeric())
        throw Error(Errc::unsupported, "ordinary submodularity needs a numeric codomain");
      return detail::scan_pairs(f, cond, opts);
    case ConditionId::Injective:
      throw Error(Errc::contract, "use is_injective for the injectivity condition");
    default:
      return detail::scan_pairs(f, cond, opts);
  }
}

inline std::vector<ConditionWitness> all_violations(const SetFunction& f, ConditionId cond) {
  if (cond == ConditionId::QuasiSubmodular) {
    auto out = all_violations(f, ConditionId::Q1);
    auto q2 = all_violations(f, ConditionId::Q2);
    out.insert(out.end(), q2.begin(), q2.end());
    return out;
  }
  std::vector<ConditionWitness> out;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    for (std::uint32_t y = 0; y < f.size(); ++y) {
      if (!holds_at_pair(f, cond, Subset(x), Subset(y)))
        out.push_back(detail::make_witness(f, cond, Subset(x), Subset(y)));
    }
  }
  return out;
}

inline CheckResult is_ordinary_submodular(const SetFunction& f, ScanOptions opts = {}) {
  return check_condition(f, ConditionId::OrdinarySubmodular, opts);
}

inline bool is_injective(const SetFunction& f) {
  std::vector<OrdinalValue> sorted(f.values().begin(), f.values().end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

class ClassReport {
 public:
  // nullopt: not applicable (OrdinarySubmodular on a label codomain).
  std::optional<bool> flag(ConditionId c) const { return flags_[index(c)]; }
  bool holds(ConditionId c) const { return flags_[index(c)].value_or(false); }
  const std::map<ConditionId, ConditionWitness>& witnesses() const noexcept { return witnesses_; }

  void set(ConditionId c, std::optional<bool> value) { flags_[index(c)] = value; }
  void set(ConditionId c, const CheckResult& r) {
    flags_[index(c)] = r.ok();
    if (r.witness()) witnesses_.emplace(c, *r.witness());
  }

  // Throws std::logic_error if the report breaks a known implication.
  void assert_consistent() const {
    const auto implies = [&](ConditionId a, ConditionId b) {
      if (holds(a) && !holds(b)) {
        throw std::logic_error("class report inconsistent: " + std::string(condition_name(a)) +
                               " holds but " + std::string(condition_name(b)) + " does not");
      }
    };
    implies(ConditionId::QuasiSubmodular, ConditionId::Q1);
    implies(ConditionId::QuasiSubmodular, ConditionId::Q2);
    implies(ConditionId::Q1, ConditionId::Q3);
    implies(ConditionId::Q2, ConditionId::Q3);
    implies(ConditionId::Q3, ConditionId::Q4);
    implies(ConditionId::OrdinarySubmodular, ConditionId::QuasiSubmodular);
    implies(ConditionId::Injective, ConditionId::Qh);
    implies(ConditionId::QuasiSubmodular, ConditionId::Qh);
    if (holds(ConditionId::Q1) && holds(ConditionId::Q2) && !holds(ConditionId::QuasiSubmodular))
      throw std::logic_error("class report inconsistent: Q1 and Q2 hold but QuasiSubmodular does not");
  }

  friend bool operator==(const ClassReport&, const ClassReport&) = default;

 private:
  static std::size_t index(ConditionId c) { return static_cast<std::size_t>(c); }

  std::array<std::optional<bool>, kAllConditions.size()> flags_{};
  std::map<ConditionId, ConditionWitness> witnesses_;
};

inline ClassReport classify(const SetFunction& f, ScanOptions opts = {}) {
  ClassReport report;
  const CheckResult q1 = check_condition(f, ConditionId::Q1, opts);
  const CheckResult q2 = check_condition(f, ConditionId::Q2, opts);
  report.set(ConditionId::Q1, q1);
  report.set(ConditionId::Q2, q2);
  report.set(ConditionId::Q3, check_condition(f, ConditionId::Q3, opts));
  report.set(ConditionId::Q4, check_condition(f, ConditionId::Q4, opts));
  report.set(ConditionId::Qh, check_condition(f, ConditionId::Qh, opts));
  report.set(ConditionId::QuasiSubmodular, q1 ? q2 : q1);
  if (f.codomain().is_numeric())
    report.set(ConditionId::OrdinarySubmodular, is_ordinary_submodular(f, opts));
  else
    report.set(ConditionId::OrdinarySubmodular, std::nullopt);
  report.set(ConditionId::Injective, std::optional<bool>(is_injective(f)));
  report.assert_consistent();
  return report;
}

// Diagnostic: "every pair satisfies Q1 or Q2" agrees with "Q3 holds".
inline bool pairwise_q3_equivalence(const SetFunction& f) {
  bool every_pair_q1_or_q2 = true;
  for (std::uint32_t x = 0; x < f.size() && every_pair_q1_or_q2; ++x) {
    for (std::uint32_t y = 0; y < f.size(); ++y) {
      const Subset sx(x), sy(y);
      if (!holds_at_pair(f, ConditionId::Q1, sx, sy) && !holds_at_pair(f, ConditionId::Q2, sx, sy)) {
        every_pair_q1_or_q2 = false;
        break;
      }
    }
  }
  return every_pair_q1_or_q2 == check_condition(f, ConditionId::Q3).ok();
}

}  // namespace ordsub
