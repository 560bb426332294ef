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

#include "ordsub/set_function.hpp"

namespace ordsub::testing {

// Named n = 2 fixtures; index = mask, a = bit 0, b = bit 1.
inline SetFunction f_const() { return make_integer_function({0, 0, 0, 0}); }
inline SetFunction f_r3() { return make_integer_function({1, 0, 2, 3}); }      // injective, Q4 \ Q3
inline SetFunction f_cut() { return make_integer_function({0, 1, 1, 0}); }     // single-edge cut
inline SetFunction f_card() { return make_integer_function({0, 1, 1, 2}); }    // |X|
inline SetFunction f_q1nq2() { return make_integer_function({1, 0, 2, 2}); }   // Q1 \ Q2

inline constexpr Subset kEmpty{0};
inline constexpr Subset kA{1};
inline constexpr Subset kB{2};
inline constexpr Subset kAB{3};

}  // namespace ordsub::testing
