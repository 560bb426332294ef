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

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordsub {

enum class Errc {
  index,        // subset mask outside the power set
  validation,   // malformed ground set, codomain, value table or transform
  codomain,     // values from different codomains compared or combined
  interval,     // lo is not a subset of hi
  contract,     // operation precondition violated by the caller
  hypothesis,   // a class hypothesis requested for verification fails
  range,        // numeric argument out of its admissible range
  chain,        // level chain violates nesting or does not induce a (Qh) function
  cap,          // enumeration size cap exceeded
  parse,        // malformed input file or command-line syntax
  overflow,     // exact arithmetic result does not fit the value representation
  unsupported,  // operation undefined for this codomain kind
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::index: return "index";
    case Errc::validation: return "validation";
    case Errc::codomain: return "codomain";
    case Errc::interval: return "interval";
    case Errc::contract: return "contract";
    case Errc::hypothesis: return "hypothesis";
    case Errc::range: return "range";
    case Errc::chain: return "chain";
    case Errc::cap: return "cap";
    case Errc::parse: return "parse";
    case Errc::overflow: return "overflow";
    case Errc::unsupported: return "unsupported";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + " error: " + what),
        code_(code),
        message_(what) {}

  Errc code() const noexcept { return code_; }
  // what() without the "<kind> error: " prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace ordsub
