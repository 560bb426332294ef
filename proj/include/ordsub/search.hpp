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

// Boolean predicates over class flags and first-match search over the
// weak-order stream.

#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordsub/conditions.hpp"
#include "ordsub/error.hpp"
#include "ordsub/generate.hpp"
#include "ordsub/parallel.hpp"

namespace ordsub {

// Grammar:  expr := term ('|' term)*   term := factor ('&' factor)*
//           factor := '!' factor | '(' expr ')' | condition name
// '∧', '∨', '¬' are accepted as synonyms.
class Predicate {
 public:
  static Predicate parse(std::string_view text) {
    Parser p{text, 0};
    Predicate out;
    out.root_ = p.expr();
    p.skip_space();
    if (p.pos != text.size())
      throw Error(Errc::parse, "unexpected '" + std::string(text.substr(p.pos)) + "' in predicate");
    out.text_ = std::string(text);
    return out;
  }

  bool operator()(const ClassReport& r) const { return eval(*root_, r); }
  const std::string& text() const noexcept { return text_; }

 private:
  struct Node {
    enum class Op { leaf, negate, conj, disj } op = Op::leaf;
    ConditionId leaf = ConditionId::Q1;
    std::vector<std::shared_ptr<const Node>> children;
  };
  using NodePtr = std::shared_ptr<const Node>;

  static bool eval(const Node& node, const ClassReport& r) {
    switch (node.op) {
      case Node::Op::leaf: return r.holds(node.leaf);
      case Node::Op::negate: return !eval(*node.children[0], r);
      case Node::Op::conj:
        for (const auto& c : node.children)
          if (!eval(*c, r)) return false;
        return true;
      case Node::Op::disj:
        for (const auto& c : node.children)
          if (eval(*c, r)) return true;
        return false;
    }
    return false;
  }

  struct Parser {
    std::string_view text;
    std::size_t pos;

    void skip_space() {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool accept(std::initializer_list<std::string_view> tokens) {
      skip_space();
      for (auto t : tokens) {
        if (text.substr(pos, t.size()) == t) {
          pos += t.size();
          return true;
        }
      }
      return false;
    }

    NodePtr expr() {
      auto node = std::make_shared<Node>();
      node->op = Node::Op::disj;
      node->children.push_back(term());
      while (accept({"||", "|", "∨"})) node->children.push_back(term());
      if (node->children.size() == 1) return node->children.front();
      return node;
    }

    NodePtr term() {
      auto node = std::make_shared<Node>();
      node->op = Node::Op::conj;
      node->children.push_back(factor());
      while (accept({"&&", "&", "∧"})) node->children.push_back(factor());
      if (node->children.size() == 1) return node->children.front();
      return node;
    }

    NodePtr factor() {
      if (accept({"!", "¬", "~"})) {
        auto node = std::make_shared<Node>();
        node->op = Node::Op::negate;
        node->children.push_back(factor());
        return node;
      }
      if (accept({"("})) {
        NodePtr inner = expr();
        if (!accept({")"})) throw Error(Errc::parse, "missing ')' in predicate");
        return inner;
      }
      skip_space();
      const std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) != 0))
        ++pos;
      const std::string_view name = text.substr(start, pos - start);
      const auto cond = parse_condition(name);
      if (!cond)
        throw Error(Errc::parse, "unknown condition '" + std::string(name) + "' in predicate");
      auto node = std::make_shared<Node>();
      node->leaf = *cond;
      return node;
    }
  };

  NodePtr root_;
  std::string text_;
};

struct SearchHit {
  std::size_t index;  // position in the weak-order stream
  SetFunction function;
  ClassReport report;
};

// First function of the weak-order stream for n whose classification
// satisfies the predicate. With several threads, batches are classified in
// parallel and the least index wins, so the hit does not depend on threads.
inline std::optional<SearchHit> search_witness(int n, const Predicate& predicate,
                                               ScanOptions opts = {}) {
  WeakOrderEnumerator it(n);
  constexpr std::size_t kBatch = 4096;
  std::size_t base = 0;
  std::vector<SetFunction> batch;
  batch.reserve(kBatch);
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < kBatch && (more = it.next())) batch.push_back(it.function());
    const auto hit = find_first(
        batch.size(), [&](std::size_t i) { return predicate(classify(batch[i])); }, opts.threads);
    if (hit) return SearchHit{base + *hit, batch[*hit], classify(batch[*hit])};
    base += batch.size();
  }
  return std::nullopt;
}

}  // namespace ordsub
