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

// Test corpora: every function up to order isomorphism (weak orders on the
// power set), every injective one (linear orders), structured submodular
// families, and seeded random tables.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ordsub/error.hpp"
#include "ordsub/set_function.hpp"

namespace ordsub {

inline constexpr int kMaxEnumerationGround = 3;

namespace detail {

inline void require_enumerable(int n) {
  if (n < 1 || n > kMaxEnumerationGround)
    throw Error(Errc::cap, "exhaustive enumeration supports 1 <= n <= " +
                               std::to_string(kMaxEnumerationGround) + ", got " + std::to_string(n));
}

}  // namespace detail

// Builds an integer-valued function from a rank vector.
inline SetFunction from_ranks(const std::shared_ptr<const GroundSet>& ground,
                              const std::shared_ptr<const Codomain>& codomain,
                              std::span<const int> ranks) {
  std::vector<OrdinalValue> values;
  values.reserve(ranks.size());
  for (int r : ranks) values.push_back(OrdinalValue::integer(r));
  return SetFunction(ground, codomain, std::move(values));
}

// Surjective rank vectors r: 2^E -> {1..k} in lexicographic order. A prefix
// is extendable iff the ranks it skips below its maximum fit in the
// remaining positions, so the successor is found without backtracking.
class WeakOrderEnumerator {
 public:
  explicit WeakOrderEnumerator(int n)
      : ground_((detail::require_enumerable(n), std::make_shared<const GroundSet>(GroundSet::letters(n)))),
        codomain_(std::make_shared<const Codomain>(Codomain::integer())),
        ranks_(ground_->power_set_size(), 1) {}

  bool next() {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      return true;
    }
    const int len = static_cast<int>(ranks_.size());
    for (int i = len - 1; i >= 0; --i) {
      for (int v = ranks_[static_cast<std::size_t>(i)] + 1; v <= len; ++v) {
        ranks_[static_cast<std::size_t>(i)] = v;
        if (missing_in_prefix(i + 1) <= len - i - 1) {
          complete_from(i + 1);
          return true;
        }
      }
    }
    done_ = true;
    return false;
  }

  const std::vector<int>& ranks() const noexcept { return ranks_; }
  SetFunction function() const { return from_ranks(ground_, codomain_, ranks_); }

 private:
  // Ranks in 1..max(prefix) not used by the first len entries.
  int missing_in_prefix(int len) const {
    std::vector<bool> used(ranks_.size() + 1, false);
    int top = 0;
    for (int i = 0; i < len; ++i) {
      used[static_cast<std::size_t>(ranks_[static_cast<std::size_t>(i)])] = true;
      top = std::max(top, ranks_[static_cast<std::size_t>(i)]);
    }
    int missing = 0;
    for (int r = 1; r <= top; ++r) missing += used[static_cast<std::size_t>(r)] ? 0 : 1;
    return missing;
  }

  // Lexicographically smallest surjective completion: 1s, then the missing
  // ranks in increasing order.
  void complete_from(int start) {
    std::vector<bool> used(ranks_.size() + 1, false);
    int top = 0;
    for (int i = 0; i < start; ++i) {
      used[static_cast<std::size_t>(ranks_[static_cast<std::size_t>(i)])] = true;
      top = std::max(top, ranks_[static_cast<std::size_t>(i)]);
    }
    std::vector<int> missing;
    for (int r = 1; r <= top; ++r)
      if (!used[static_cast<std::size_t>(r)]) missing.push_back(r);
    const int len = static_cast<int>(ranks_.size());
    const int ones = len - start - static_cast<int>(missing.size());
    for (int i = 0; i < ones; ++i) ranks_[static_cast<std::size_t>(start + i)] = 1;
    for (std::size_t j = 0; j < missing.size(); ++j)
      ranks_[static_cast<std::size_t>(start + ones) + j] = missing[j];
  }

  std::shared_ptr<const GroundSet> ground_;
  std::shared_ptr<const Codomain> codomain_;
  std::vector<int> ranks_;
  bool started_ = false;
  bool done_ = false;
};

// Permutations of 1..2^n in lexicographic order.
class LinearOrderEnumerator {
 public:
  explicit LinearOrderEnumerator(int n)
      : ground_((detail::require_enumerable(n), std::make_shared<const GroundSet>(GroundSet::letters(n)))),
        codomain_(std::make_shared<const Codomain>(Codomain::integer())),
        ranks_(ground_->power_set_size()) {
    std::iota(ranks_.begin(), ranks_.end(), 1);
  }

  bool next() {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      return true;
    }
    if (!std::next_permutation(ranks_.begin(), ranks_.end())) done_ = true;
    return !done_;
  }

  const std::vector<int>& ranks() const noexcept { return ranks_; }
  SetFunction function() const { return from_ranks(ground_, codomain_, ranks_); }

 private:
  std::shared_ptr<const GroundSet> ground_;
  std::shared_ptr<const Codomain> codomain_;
  std::vector<int> ranks_;
  bool started_ = false;
  bool done_ = false;
};

template <class Visit>
void for_each_weak_order(int n, Visit&& visit) {
  WeakOrderEnumerator it(n);
  while (it.next()) visit(it.function());
}

template <class Visit>
void for_each_linear_order(int n, Visit&& visit) {
  LinearOrderEnumerator it(n);
  while (it.next()) visit(it.function());
}

inline std::vector<SetFunction> enumerate_weak_orders(int n) {
  std::vector<SetFunction> out;
  for_each_weak_order(n, [&](const SetFunction& f) { out.push_back(f); });
  return out;
}

inline std::vector<SetFunction> enumerate_linear_orders(int n) {
  std::vector<SetFunction> out;
  for_each_linear_order(n, [&](const SetFunction& f) { out.push_back(f); });
  return out;
}

struct Edge {
  int u;
  int v;
  OrdinalValue weight;  // positive integer or rational
};

// Weighted cut function: f(X) = total weight of edges with exactly one end in X.
inline SetFunction cut_function(int n, std::span<const Edge> edges) {
  GroundSet ground = GroundSet::letters(n);
  CodomainKind kind = CodomainKind::integer;
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u >= e.v)
      throw Error(Errc::validation, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                        ") needs 0 <= u < v < n");
    if (!e.weight.is_numeric() || !(e.weight.numerator() > 0))
      throw Error(Errc::validation, "edge weights must be positive numbers");
    if (e.weight.kind() == CodomainKind::rational) kind = CodomainKind::rational;
  }
  const auto as_kind = [&](const OrdinalValue& w) {
    return kind == CodomainKind::rational && w.kind() == CodomainKind::integer
               ? OrdinalValue::rational(w.numerator(), 1)
               : w;
  };
  const OrdinalValue zero =
      kind == CodomainKind::integer ? OrdinalValue::integer(0) : OrdinalValue::rational(0, 1);
  std::vector<OrdinalValue> values(ground.power_set_size(), zero);
  for (std::uint32_t m = 0; m < values.size(); ++m) {
    const Subset s(m);
    for (const auto& e : edges)
      if (s.contains(e.u) != s.contains(e.v)) values[m] = add(values[m], as_kind(e.weight));
  }
  return SetFunction(std::move(ground), Codomain::numeric(kind), std::move(values));
}

// f(X) = sum of weights over X plus g(|X|), g concave on 0..n.
inline SetFunction modular_plus_concave(int n, std::span<const std::int64_t> weights,
                                        std::span<const std::int64_t> g) {
  GroundSet ground = GroundSet::letters(n);
  if (weights.size() != static_cast<std::size_t>(n))
    throw Error(Errc::validation, "need one weight per element");
  if (g.size() != static_cast<std::size_t>(n) + 1)
    throw Error(Errc::validation, "concave part needs n + 1 entries g(0..n)");
  for (std::size_t i = 1; i + 1 < g.size(); ++i) {
    if (g[i + 1] - g[i] > g[i] - g[i - 1])
      throw Error(Errc::validation, "g is not concave at " + std::to_string(i));
  }
  std::vector<OrdinalValue> values;
  values.reserve(ground.power_set_size());
  for (std::uint32_t m = 0; m < ground.power_set_size(); ++m) {
    const Subset s(m);
    OrdinalValue v = OrdinalValue::integer(g[static_cast<std::size_t>(s.size())]);
    for (int i = 0; i < n; ++i)
      if (s.contains(i)) v = add(v, OrdinalValue::integer(weights[static_cast<std::size_t>(i)]));
    values.push_back(v);
  }
  return SetFunction(std::move(ground), Codomain::integer(), std::move(values));
}

// Random table with exactly `distinct_values` distinct values, drawn from a
// pool of that size; every pool value is used at least once.
inline SetFunction random_function(int n, const Codomain& codomain, std::size_t distinct_values,
                                   std::uint64_t seed) {
  GroundSet ground = GroundSet::letters(n);
  const std::size_t size = ground.power_set_size();
  if (distinct_values < 1 || distinct_values > size)
    throw Error(Errc::range, "distinct value count must be in [1, " + std::to_string(size) + "]");
  std::mt19937_64 rng(seed);

  std::vector<OrdinalValue> pool;
  switch (codomain.kind()) {
    case CodomainKind::integer: {
      const auto span = static_cast<std::int64_t>(4 * size);
      std::vector<std::int64_t> candidates(static_cast<std::size_t>(2 * span + 1));
      std::iota(candidates.begin(), candidates.end(), -span);
      std::shuffle(candidates.begin(), candidates.end(), rng);
      for (std::size_t i = 0; i < distinct_values; ++i) pool.push_back(OrdinalValue::integer(candidates[i]));
      break;
    }
    case CodomainKind::rational: {
      std::uniform_int_distribution<std::int64_t> num(-static_cast<std::int64_t>(8 * size),
                                                      static_cast<std::int64_t>(8 * size));
      std::uniform_int_distribution<std::int64_t> den(1, 12);
      while (pool.size() < distinct_values) {
        const OrdinalValue v = OrdinalValue::rational(num(rng), den(rng));
        if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
      }
      break;
    }
    case CodomainKind::labels: {
      const std::size_t labels = codomain.label_order().size();
      if (labels < distinct_values)
        throw Error(Errc::range, "label codomain has only " + std::to_string(labels) + " labels");
      std::vector<std::size_t> idx(labels);
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      for (std::size_t i = 0; i < distinct_values; ++i) pool.push_back(OrdinalValue::label(idx[i]));
      break;
    }
  }

  std::vector<std::size_t> positions(size);
  std::iota(positions.begin(), positions.end(), 0);
  std::shuffle(positions.begin(), positions.end(), rng);
  std::vector<OrdinalValue> values(size);
  std::uniform_int_distribution<std::size_t> pick(0, distinct_values - 1);
  for (std::size_t i = 0; i < size; ++i)
    values[positions[i]] = i < distinct_values ? pool[i] : pool[pick(rng)];
  return SetFunction(std::move(ground), codomain, std::move(values));
}

}  // namespace ordsub
