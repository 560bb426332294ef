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

// Exhaustive checks of the class relationships and minimizer guarantees over
// every weak order (or linear order) on 2^E for small n.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordsub/conditions.hpp"
#include "ordsub/error.hpp"
#include "ordsub/generate.hpp"
#include "ordsub/hierarchy.hpp"
#include "ordsub/minimize.hpp"

namespace ordsub {

enum class Suite { lemma1, theorem1, theorem2, lemma1a, duality, remark2, remark5, qh };

inline constexpr std::array<Suite, 8> kAllSuites = {Suite::lemma1,  Suite::theorem1, Suite::theorem2,
                                                    Suite::lemma1a, Suite::duality,  Suite::remark2,
                                                    Suite::remark5, Suite::qh};

constexpr std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::lemma1: return "lemma1";
    case Suite::theorem1: return "theorem1";
    case Suite::theorem2: return "theorem2";
    case Suite::lemma1a: return "lemma1a";
    case Suite::duality: return "duality";
    case Suite::remark2: return "remark2";
    case Suite::remark5: return "remark5";
    case Suite::qh: return "qh";
  }
  return "?";
}

constexpr std::string_view suite_claim(Suite s) {
  switch (s) {
    case Suite::lemma1: return "Q3 implies Q4";
    case Suite::theorem1: return "interval-local minima of Q1 (and Q2) functions are global";
    case Suite::theorem2: return "interval-local minima of injective Q4 functions are the unique minimizer";
    case Suite::lemma1a: return "for Q1 functions, a lower-interval minimum X has a global minimizer in [X,E]";
    case Suite::duality: return "Q1 <=> complement-dual Q2; Q3, Q4 complement self-dual";
    case Suite::remark2: return "every pair satisfies Q1 or Q2 <=> Q3";
    case Suite::remark5: return "minimizers of quasisubmodular functions form a lattice";
    case Suite::qh: return "quasisubmodular implies Qh; both Qh checkers agree";
  }
  return "?";
}

inline std::optional<Suite> parse_suite(std::string_view s) {
  for (auto suite : kAllSuites)
    if (suite_name(suite) == s) return suite;
  return std::nullopt;
}

struct SuiteReport {
  Suite suite;
  int n;
  std::size_t scanned = 0;     // functions enumerated
  std::size_t hypothesis = 0;  // functions meeting the claim's hypothesis
  std::size_t violations = 0;
  std::optional<std::vector<int>> first_violation;  // rank vector

  bool passed() const noexcept { return violations == 0; }
};

namespace detail {

inline std::vector<int> ranks_of(const SetFunction& f) {
  std::vector<int> r;
  r.reserve(f.size());
  for (const auto& v : f.values()) r.push_back(static_cast<int>(v.numerator()));
  return r;
}

// Returns {hypothesis applies, claim holds}.
struct Outcome {
  bool applies;
  bool holds;
};

inline bool local_minima_are_global(const SetFunction& f) {
  const OrdinalValue best = argmin(f).min_value;
  for (std::uint32_t m = 0; m < f.size(); ++m)
    if (is_interval_local_min(f, Subset(m)) && !(f(Subset(m)) == best)) return false;
  return true;
}

inline Outcome run_one(Suite suite, const SetFunction& f) {
  switch (suite) {
    case Suite::lemma1: {
      if (!check_condition(f, ConditionId::Q3).ok()) return {false, true};
      return {true, check_condition(f, ConditionId::Q4).ok()};
    }
    case Suite::theorem1: {
      const bool q1 = check_condition(f, ConditionId::Q1).ok();
      const bool q2 = check_condition(f, ConditionId::Q2).ok();
      if (!q1 && !q2) return {false, true};
      bool holds = local_minima_are_global(f);
      // Q2 is handled by the complement dual, which must then be Q1.
      if (q2) {
        const SetFunction g = complement_dual(f);
        holds = holds && check_condition(g, ConditionId::Q1).ok() && local_minima_are_global(g);
      }
      return {true, holds};
    }
    case Suite::theorem2: {
      if (!is_injective(f) || !check_condition(f, ConditionId::Q4).ok()) return {false, true};
      const ArgminSet best = argmin(f);
      if (best.minimizers.size() != 1) return {true, false};
      for (std::uint32_t m = 0; m < f.size(); ++m)
        if (is_interval_local_min(f, Subset(m)) && Subset(m) != best.minimizers.front())
          return {true, false};
      return {true, true};
    }
    case Suite::lemma1a: {
      if (!check_condition(f, ConditionId::Q1).ok()) return {false, true};
      const OrdinalValue best = argmin(f).min_value;
      const Subset full = f.ground().full();
      for (std::uint32_t m = 0; m < f.size(); ++m) {
        const Subset x(m);
        if (!is_lower_interval_min(f, x)) continue;
        if (!(f(interval_argmin(f, Interval(x, full))) == best)) return {true, false};
        if (!(f(lift_to_global(f, x)) == best)) return {true, false};
      }
      return {true, true};
    }
    case Suite::duality: {
      const SetFunction g = complement_dual(f);
      const auto ok = [](const SetFunction& h, ConditionId c) { return check_condition(h, c).ok(); };
      const bool holds = ok(f, ConditionId::Q1) == ok(g, ConditionId::Q2) &&
                         ok(f, ConditionId::Q2) == ok(g, ConditionId::Q1) &&
                         ok(f, ConditionId::Q3) == ok(g, ConditionId::Q3) &&
                         ok(f, ConditionId::Q4) == ok(g, ConditionId::Q4) &&
                         complement_dual(g) == f && order_dual(order_dual(f)) == f;
      return {true, holds};
    }
    case Suite::remark2:
      return {true, pairwise_q3_equivalence(f)};
    case Suite::remark5: {
      if (!check_condition(f, ConditionId::QuasiSubmodular).ok()) return {false, true};
      return {true, argmin_lattice_closure(f)};
    }
    case Suite::qh: {
      const CheckResult a = check_qh(f);
      const CheckResult b = check_condition(f, ConditionId::Qh);
      const bool agree = a.witness() == b.witness();
      if (!check_condition(f, ConditionId::QuasiSubmodular).ok()) return {false, agree};
      return {true, agree && a.ok()};
    }
  }
  return {false, true};
}

}  // namespace detail

inline SuiteReport run_suite(Suite suite, int n) {
  detail::require_enumerable(n);
  SuiteReport report{suite, n, 0, 0, 0, std::nullopt};
  const auto visit = [&](const SetFunction& f) {
    ++report.scanned;
    const auto outcome = detail::run_one(suite, f);
    if (outcome.applies) ++report.hypothesis;
    if (!outcome.holds) {
      if (report.violations++ == 0) report.first_violation = detail::ranks_of(f);
    }
  };
  if (suite == Suite::theorem2)
    for_each_linear_order(n, visit);
  else
    for_each_weak_order(n, visit);
  return report;
}

}  // namespace ordsub
