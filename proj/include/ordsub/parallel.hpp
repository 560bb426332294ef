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
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace ordsub {

struct ScanOptions {
  unsigned threads = 1;
};

// Smallest index i in [0, count) with hit(i), or nullopt. With several
// threads the range is split into contiguous chunks; each worker stops at
// its first hit or once a lower index has been found elsewhere, so the
// answer is the same for every thread count.
template <class Hit>
std::optional<std::size_t> find_first(std::size_t count, Hit&& hit, unsigned threads = 1) {
  constexpr std::size_t kMinChunk = 256;
  const std::size_t workers =
      std::min<std::size_t>(threads == 0 ? 1 : threads, std::max<std::size_t>(1, count / kMinChunk));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      if (hit(i)) return i;
    return std::nullopt;
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::atomic<std::size_t> best{kNone};
  const std::size_t chunk = (count + workers - 1) / workers;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(count, begin + chunk);
      pool.emplace_back([&, begin, end] {
        for (std::size_t i = begin; i < end; ++i) {
          if (best.load(std::memory_order_relaxed) < begin) return;
          if (hit(i)) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      });
    }
  }
  const std::size_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

}  // namespace ordsub
