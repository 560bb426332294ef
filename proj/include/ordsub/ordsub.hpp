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

#include "ordsub/conditions.hpp"
#include "ordsub/error.hpp"
#include "ordsub/generate.hpp"
#include "ordsub/hierarchy.hpp"
#include "ordsub/minimize.hpp"
#include "ordsub/ordinal_value.hpp"
#include "ordsub/parallel.hpp"
#include "ordsub/search.hpp"
#include "ordsub/set_function.hpp"
#include "ordsub/subset.hpp"
#include "ordsub/verify.hpp"
