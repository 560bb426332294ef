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

// Exact minimization over 2^E and over intervals, and certificates that an
// interval-local minimum is global under a class hypothesis.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordsub/conditions.hpp"
#include "ordsub/error.hpp"
#include "ordsub/set_function.hpp"

namespace ordsub {

struct ArgminSet {
  std::vector<Subset> minimizers;  // ascending mask
  OrdinalValue min_value;

  friend bool operator==(const ArgminSet&, const ArgminSet&) = default;
};

inline ArgminSet argmin(const SetFunction& f) {
  ArgminSet out{{Subset(0)}, f(Subset(0))};
  for (std::uint32_t m = 1; m < f.size(); ++m) {
    const OrdinalValue& v = f(Subset(m));
    if (v < out.min_value) {
      out.min_value = v;
      out.minimizers.assign(1, Subset(m));
    } else if (v == out.min_value) {
      out.minimizers.push_back(Subset(m));
    }
  }
  return out;
}

// Smallest-mask minimizer of f over the interval.
inline Subset interval_argmin(const SetFunction& f, const Interval& box) {
  std::optional<Subset> best;
  box.for_each([&](Subset z) {
    if (!best || f(z) < f(*best)) best = z;
  });
  return *best;
}

// f(X) <= f(Z) for every Z ⊆ X.
inline bool is_lower_interval_min(const SetFunction& f, Subset x) {
  f.ground().require_valid(x);
  bool ok = true;
  for_each_subset_of(x, [&](Subset z) { ok = ok && f(x) <= f(z); });
  return ok;
}

// f(X) <= f(Z) for every Z ⊇ X.
inline bool is_upper_interval_min(const SetFunction& f, Subset x) {
  f.ground().require_valid(x);
  bool ok = true;
  Interval(x, f.ground().full()).for_each([&](Subset z) { ok = ok && f(x) <= f(z); });
  return ok;
}

// Minimal over [∅, X] ∪ [X, E].
inline bool is_interval_local_min(const SetFunction& f, Subset x) {
  return is_lower_interval_min(f, x) && is_upper_interval_min(f, x);
}

// Given X minimal over [∅, X], returns the smallest-mask minimizer of f over
// [X, E]. For (Q1)-submodular f that point is a global minimizer: some global
// minimizer lies in [X, E], so anything minimal there is global too.
inline Subset lift_to_global(const SetFunction& f, Subset x, bool verify_q1 = false) {
  if (!is_lower_interval_min(f, x))
    throw Error(Errc::contract, "lift_to_global: subset " + f.ground().format(x) +
                                    " is not minimal over its lower interval");
  if (verify_q1 && !check_condition(f, ConditionId::Q1).ok())
    throw Error(Errc::hypothesis, "lift_to_global: f is not (Q1)-submodular");
  return interval_argmin(f, Interval(x, f.ground().full()));
}

enum class Hypothesis {
  Q1,            // interval-local minima of (Q1)-submodular functions are global
  Q2,            // the complement-dual statement for (Q2)-submodular functions
  Q4Injective,   // (Q4)-submodular and injective
};

constexpr std::string_view hypothesis_name(Hypothesis h) {
  switch (h) {
    case Hypothesis::Q1: return "Q1";
    case Hypothesis::Q2: return "Q2";
    case Hypothesis::Q4Injective: return "Q4+injective";
  }
  return "?";
}

inline std::optional<Hypothesis> parse_hypothesis(std::string_view s) {
  for (auto h : {Hypothesis::Q1, Hypothesis::Q2, Hypothesis::Q4Injective})
    if (hypothesis_name(h) == s) return h;
  return std::nullopt;
}

enum class CertificateStatus {
  global,               // interval-local and a verified hypothesis applies
  not_interval_local,   // some Z in [∅,X] ∪ [X,E] has a smaller value
  no_hypothesis,        // interval-local, but f satisfies none of the hypotheses
  hypothesis_asserted,  // interval-local; hypothesis taken on trust, not verified
};

constexpr std::string_view status_name(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::global: return "global";
    case CertificateStatus::not_interval_local: return "not_interval_local";
    case CertificateStatus::no_hypothesis: return "no_hypothesis";
    case CertificateStatus::hypothesis_asserted: return "hypothesis_asserted";
  }
  return "?";
}

struct MinimalityCertificate {
  Subset point;
  OrdinalValue value;
  std::uint64_t lower_checked = 0;  // 2^|X|
  std::uint64_t upper_checked = 0;  // 2^(n - |X|)
  bool interval_local = false;
  std::optional<Hypothesis> hypothesis;
  bool hypothesis_verified = false;
  bool global = false;
  CertificateStatus status = CertificateStatus::not_interval_local;
  std::string reason;

  friend bool operator==(const MinimalityCertificate&, const MinimalityCertificate&) = default;
};

struct CertifyOptions {
  // When set, the hypothesis is not checked (4^n cost skipped) and a
  // successful local check yields status hypothesis_asserted, never global.
  std::optional<Hypothesis> asserted;
  ScanOptions scan;
};

// Strongest verified hypothesis, tried in the order Q1, Q2, Q4+injective.
inline std::optional<Hypothesis> applicable_hypothesis(const SetFunction& f, ScanOptions scan = {}) {
  if (check_condition(f, ConditionId::Q1, scan).ok()) return Hypothesis::Q1;
  if (check_condition(f, ConditionId::Q2, scan).ok()) return Hypothesis::Q2;
  if (is_injective(f) && check_condition(f, ConditionId::Q4, scan).ok())
    return Hypothesis::Q4Injective;
  return std::nullopt;
}

inline MinimalityCertificate certify_global_min(const SetFunction& f, Subset x,
                                                const CertifyOptions& opts = {}) {
  f.ground().require_valid(x);
  MinimalityCertificate cert;
  cert.point = x;
  cert.value = f(x);
  cert.lower_checked = std::uint64_t{1} << x.size();
  cert.upper_checked = std::uint64_t{1} << (f.n() - x.size());
  cert.interval_local = is_interval_local_min(f, x);
  if (!cert.interval_local) {
    cert.status = CertificateStatus::not_interval_local;
    cert.reason = "a subset in the lower or upper interval has a smaller value";
    return cert;
  }
  if (opts.asserted) {
    cert.hypothesis = opts.asserted;
    cert.status = CertificateStatus::hypothesis_asserted;
    cert.reason = "hypothesis asserted, unverified";
    return cert;
  }
  cert.hypothesis = applicable_hypothesis(f, opts.scan);
  if (!cert.hypothesis) {
    cert.status = CertificateStatus::no_hypothesis;
    cert.reason = "f is neither Q1, Q2, nor Q4 and injective";
    return cert;
  }
  cert.hypothesis_verified = true;
  cert.global = true;
  cert.status = CertificateStatus::global;
  cert.reason = "interval-local minimum under verified hypothesis " +
                std::string(hypothesis_name(*cert.hypothesis));
  return cert;
}

struct DescentStep {
  Subset point;
  OrdinalValue value;

  friend bool operator==(const DescentStep&, const DescentStep&) = default;
};

struct DescentTrace {
  std::vector<DescentStep> steps;  // values strictly decrease
  MinimalityCertificate certificate;

  std::size_t moves() const noexcept { return steps.empty() ? 0 : steps.size() - 1; }
  friend bool operator==(const DescentTrace&, const DescentTrace&) = default;
};

// Moves to the smallest-mask minimizer of [∅,X] ∪ [X,E] until X attains
// that minimum. Values strictly decrease, so at most 2^n - 1 moves happen.
inline DescentTrace interval_descent(const SetFunction& f, Subset start,
                                     const CertifyOptions& opts = {}) {
  f.ground().require_valid(start);
  DescentTrace trace;
  Subset cur = start;
  trace.steps.push_back({cur, f(cur)});
  while (true) {
    const Subset lower = interval_argmin(f, Interval(Subset(0), cur));
    const Subset upper = interval_argmin(f, Interval(cur, f.ground().full()));
    Subset next = lower;
    if (f(upper) < f(lower) || (f(upper) == f(lower) && upper < lower)) next = upper;
    if (f(cur) <= f(next)) break;
    cur = next;
    trace.steps.push_back({cur, f(cur)});
  }
  trace.certificate = certify_global_min(f, cur, opts);
  return trace;
}

// Whether the set of global minimizers is closed under ∪ and ∩.
inline bool argmin_lattice_closure(const SetFunction& f) {
  const ArgminSet d = argmin(f);
  std::vector<bool> member(f.size(), false);
  for (auto s : d.minimizers) member[s.mask] = true;
  for (auto x : d.minimizers) {
    for (auto y : d.minimizers) {
      if (!member[(x | y).mask] || !member[(x & y).mask]) return false;
    }
  }
  return true;
}

struct ConstrainedArgmin {
  ArgminSet argmin;
  std::size_t feasible = 0;
  OrdinalValue threshold;  // mu_k; feasible means f(X) > threshold

  friend bool operator==(const ConstrainedArgmin&, const ConstrainedArgmin&) = default;
};

// Minimizes phi over {X : f(X) > mu_k}, 1 <= k <= p - 1, by enumeration.
inline ConstrainedArgmin constrained_minimize(const SetFunction& phi, const SetFunction& f, int k) {
  if (!(phi.ground() == f.ground()))
    throw Error(Errc::validation, "objective and level function have different ground sets");
  if (!phi.codomain().is_numeric())
    throw Error(Errc::unsupported, "objective needs a numeric codomain");
  const auto mu = distinct_values(f);
  const int p = static_cast<int>(mu.size());
  if (k < 1 || k > p - 1)
    throw Error(Errc::range, "k = " + std::to_string(k) + " outside [1, " + std::to_string(p - 1) + "]");
  ConstrainedArgmin out;
  out.threshold = mu[static_cast<std::size_t>(k - 1)];
  bool have = false;
  for (std::uint32_t m = 0; m < f.size(); ++m) {
    const Subset s(m);
    if (!(f(s) > out.threshold)) continue;
    ++out.feasible;
    if (!have || phi(s) < out.argmin.min_value) {
      out.argmin.min_value = phi(s);
      out.argmin.minimizers.assign(1, s);
      have = true;
    } else if (phi(s) == out.argmin.min_value) {
      out.argmin.minimizers.push_back(s);
    }
  }
  return out;
}

}  // namespace ordsub
