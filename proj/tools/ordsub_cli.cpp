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

// ordsub: classify, minimize and certify ordinal set functions.
//
// Exit codes: 0 success / property holds, 1 property fails or witness found,
// 2 usage or input error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordsub/json_io.hpp"
#include "ordsub/ordsub.hpp"

namespace {

using namespace ordsub;

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  bool witness = false;
  unsigned threads = 1;
};

std::string braces(const GroundSet& g, Subset s) { return "{" + g.format(s) + "}"; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

Subset parse_subset_arg(const SetFunction& f, const std::string& text, const std::string& flag) {
  try {
    return f.ground().parse(text);
  } catch (const Error& e) {
    throw Error(Errc::parse, flag + ": " + e.message());
  }
}

void write_function(const SetFunction& f, bool sparse, const std::string& output) {
  const std::string text = to_json(f, sparse ? ValueLayout::sparse : ValueLayout::dense).dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw Error(Errc::parse, "cannot write " + output);
  out << text;
}

std::string witness_line(const ConditionWitness& w, const SetFunction& f) {
  const auto& c = f.codomain();
  std::ostringstream ss;
  ss << "X=" << braces(f.ground(), w.x) << " Y=" << braces(f.ground(), w.y)
     << " f(X)=" << to_string(w.vx, &c) << " f(Y)=" << to_string(w.vy, &c)
     << " f(X|Y)=" << to_string(w.vunion, &c) << " f(X&Y)=" << to_string(w.vinter, &c);
  return ss.str();
}

int cmd_classify(const Globals& g, const std::string& path) {
  const SetFunction f = read_set_function(path);
  const ClassReport r = classify(f, {g.threads});
  if (g.json) {
    print_json(to_json(r, f, g.witness));
    return kOk;
  }
  for (auto c : kAllConditions) {
    const auto flag = r.flag(c);
    std::cout << std::left << std::setw(20) << condition_name(c)
              << (flag ? (*flag ? "true" : "false") : "n/a");
    if (g.witness) {
      auto it = r.witnesses().find(c);
      if (it != r.witnesses().end()) std::cout << "   witness " << witness_line(it->second, f);
    }
    std::cout << "\n";
  }
  return kOk;
}

void print_certificate(const MinimalityCertificate& c, const SetFunction& f) {
  std::cout << "point          " << braces(f.ground(), c.point) << "\n"
            << "value          " << to_string(c.value, &f.codomain()) << "\n"
            << "lower_checked  " << c.lower_checked << "\n"
            << "upper_checked  " << c.upper_checked << "\n"
            << "interval_local " << (c.interval_local ? "true" : "false") << "\n"
            << "hypothesis     " << (c.hypothesis ? std::string(hypothesis_name(*c.hypothesis)) : "none")
            << (c.hypothesis && !c.hypothesis_verified ? " (asserted)" : "") << "\n"
            << "global         " << (c.global ? "true" : "false") << "\n"
            << "status         " << status_name(c.status) << ": " << c.reason << "\n";
}

int cmd_minimize(const Globals& g, const std::string& path, const std::string& mode,
                 const std::string& start) {
  const SetFunction f = read_set_function(path);
  if (mode == "brute") {
    const ArgminSet a = argmin(f);
    if (g.json) {
      print_json(to_json(a, f));
    } else {
      std::cout << "min value   " << to_string(a.min_value, &f.codomain()) << "\nminimizers ";
      for (auto s : a.minimizers) std::cout << " " << braces(f.ground(), s);
      std::cout << "\n";
    }
    return kOk;
  }
  const Subset s = parse_subset_arg(f, start, "--start");
  const DescentTrace t = interval_descent(f, s, CertifyOptions{std::nullopt, {g.threads}});
  if (g.json) {
    print_json(to_json(t, f));
    return kOk;
  }
  for (std::size_t i = 0; i < t.steps.size(); ++i)
    std::cout << "step " << i << "  " << braces(f.ground(), t.steps[i].point) << "  "
              << to_string(t.steps[i].value, &f.codomain()) << "\n";
  print_certificate(t.certificate, f);
  return kOk;
}

int cmd_certify(const Globals& g, const std::string& path, const std::string& point,
                const std::string& assume) {
  const SetFunction f = read_set_function(path);
  const Subset x = parse_subset_arg(f, point, "--point");
  CertifyOptions opts;
  opts.scan.threads = g.threads;
  if (!assume.empty()) {
    opts.asserted = parse_hypothesis(assume);
    if (!opts.asserted) throw Error(Errc::parse, "--assume: unknown hypothesis '" + assume + "'");
  }
  const MinimalityCertificate c = certify_global_min(f, x, opts);
  if (g.json)
    print_json(to_json(c, f));
  else
    print_certificate(c, f);
  return c.global ? kOk : kFails;
}

int cmd_hierarchy(const Globals& g, const std::string& path) {
  const json doc = parse_json_text(read_text_file(path), path);
  std::optional<SetFunction> built;
  if (doc.is_object() && doc.contains("families")) {
    const ChainFile cf = chain_from_json(doc);
    built = qh_from_chain(cf.ground, cf.chain);
  } else {
    built = set_function_from_json(doc);
  }
  const SetFunction& f = *built;
  const LevelValues lv = levels(f);
  const LevelChain chain = family_chain(f);
  const CheckResult qh = check_qh(f);
  if (g.json) {
    json j = {{"levels", to_json(lv, f.codomain())}, {"chain", to_json(chain, f.ground())}, {"Qh", qh.ok()}};
    j["witness"] = qh.witness() ? to_json(*qh.witness(), f) : json(nullptr);
    if (doc.contains("families")) j["function"] = to_json(f);
    print_json(j);
  } else {
    std::cout << "p = " << lv.p() << "\nmu =";
    for (const auto& v : lv.mu) std::cout << " " << to_string(v, &f.codomain());
    std::cout << "\n";
    for (std::size_t i = 0; i < chain.families.size(); ++i) {
      std::cout << "F_" << i << " =";
      for (auto s : chain.families[i]) std::cout << " " << braces(f.ground(), s);
      std::cout << "\n";
    }
    std::cout << "Qh " << (qh.ok() ? "holds" : "fails");
    if (qh.witness()) std::cout << "   witness " << witness_line(*qh.witness(), f);
    std::cout << "\n";
  }
  return qh.ok() ? kOk : kFails;
}

int cmd_constrained(const Globals& g, const std::string& phi_path, const std::string& f_path, int k) {
  const SetFunction phi = read_set_function(phi_path);
  const SetFunction f = read_set_function(f_path);
  const ConstrainedArgmin r = constrained_minimize(phi, f, k);
  if (g.json) {
    print_json(to_json(r, phi, f));
  } else {
    std::cout << "feasible    " << r.feasible << " subsets with f > " << to_string(r.threshold, &f.codomain())
              << "\nmin value   " << to_string(r.argmin.min_value, &phi.codomain()) << "\nminimizers ";
    for (auto s : r.argmin.minimizers) std::cout << " " << braces(phi.ground(), s);
    std::cout << "\n";
  }
  return kOk;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& suites, int n) {
  std::vector<Suite> chosen;
  for (const auto& name : suites) {
    if (name == "all") {
      chosen.assign(kAllSuites.begin(), kAllSuites.end());
      continue;
    }
    const auto s = parse_suite(name);
    if (!s) throw Error(Errc::parse, "--suite: unknown suite '" + name + "'");
    chosen.push_back(*s);
  }
  bool all_pass = true;
  json out = json::array();
  for (auto s : chosen) {
    const SuiteReport r = run_suite(s, n);
    all_pass = all_pass && r.passed();
    if (g.json) {
      out.push_back(to_json(r));
    } else {
      std::cout << std::left << std::setw(9) << suite_name(s) << " n=" << n << "  scanned " << r.scanned
                << "  hypothesis " << r.hypothesis << "  violations " << r.violations << "  ("
                << suite_claim(s) << ")\n";
    }
  }
  if (g.json) print_json(chosen.size() == 1 ? out[0] : out);
  return all_pass ? kOk : kFails;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::parse, flag + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

OrdinalValue parse_number(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      const auto v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return OrdinalValue::integer(v);
    }
    const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    const auto a = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    const auto b = std::stoll(den, &used);
    if (used != den.size() || b == 0) throw std::invalid_argument(text);
    return OrdinalValue::rational(a, b);
  } catch (const std::exception&) {
    throw Error(Errc::parse, flag + ": '" + text + "' is not a number");
  }
}

// "0-1:1,1-2:3/2"
std::vector<Edge> parse_edges(const std::vector<std::string>& items) {
  std::vector<Edge> edges;
  for (const auto& group : items) {
    std::stringstream ss(group);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto dash = item.find('-');
      const auto colon = item.find(':');
      if (dash == std::string::npos || colon == std::string::npos || colon < dash)
        throw Error(Errc::parse, "--edges: expected u-v:weight, got '" + item + "'");
      const auto u = parse_number(item.substr(0, dash), "--edges");
      const auto v = parse_number(item.substr(dash + 1, colon - dash - 1), "--edges");
      if (u.kind() != CodomainKind::integer || v.kind() != CodomainKind::integer)
        throw Error(Errc::parse, "--edges: endpoints must be integers in '" + item + "'");
      edges.push_back({static_cast<int>(u.numerator()), static_cast<int>(v.numerator()),
                       parse_number(item.substr(colon + 1), "--edges")});
    }
  }
  return edges;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinal submodularity toolkit for set functions on small Boolean lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_flag("--witness", g.witness, "Include violation witnesses");
  app.add_option("--threads", g.threads, "Worker threads for pair scans")->check(CLI::Range(1U, 256U));

  std::string input, phi_path, f_path, mode = "brute", start, point, assume, predicate, output;
  std::string kind = "integer", g_values, weights_text, labels_text;
  std::vector<std::string> suites, edges;
  int n = 2, k = 1;
  std::int64_t value = 0;
  std::size_t distinct = 1;
  std::uint64_t seed = 0;
  bool sparse = false;

  auto* classify_cmd = app.add_subcommand("classify", "Report membership in every ordinal class");
  classify_cmd->add_option("file", input, "Set-function JSON file")->required();

  auto* minimize_cmd = app.add_subcommand("minimize", "Brute-force argmin or interval descent");
  minimize_cmd->add_option("file", input)->required();
  minimize_cmd->add_option("--mode", mode)->check(CLI::IsMember({"brute", "descent"}));
  minimize_cmd->add_option("--start", start, "Start subset, comma-joined names (\"\" = empty set)");

  auto* certify_cmd = app.add_subcommand("certify", "Certify a point as a global minimizer");
  certify_cmd->add_option("file", input)->required();
  certify_cmd->add_option("--point", point, "Subset, comma-joined names")->required();
  certify_cmd->add_option("--assume", assume, "Trust this hypothesis (Q1, Q2, Q4+injective) without checking");

  auto* hierarchy_cmd = app.add_subcommand("hierarchy", "Level values, level chain and the Qh verdict");
  hierarchy_cmd->add_option("file", input, "Set-function or chain JSON file")->required();

  auto* constrained_cmd = app.add_subcommand("constrained", "Minimize phi subject to f > mu_k");
  constrained_cmd->add_option("phi", phi_path)->required();
  constrained_cmd->add_option("f", f_path)->required();
  constrained_cmd->add_option("--k", k)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify_cmd->add_option("--suite", suites, "lemma1 theorem1 theorem2 lemma1a duality remark2 remark5 qh all")
      ->required();
  verify_cmd->add_option("--n", n)->required();

  auto* generate_cmd = app.add_subcommand("generate", "Write a generated set function");
  generate_cmd->require_subcommand(1);
  generate_cmd->add_flag("--sparse", sparse, "Write the sparse subset-keyed form");
  generate_cmd->add_option("-o,--output", output, "Output path (default stdout)");
  auto* gen_const = generate_cmd->add_subcommand("const", "Constant function");
  gen_const->add_option("--n", n)->required();
  gen_const->add_option("--value", value);
  auto* gen_cut = generate_cmd->add_subcommand("cut", "Weighted graph cut function");
  gen_cut->add_option("--n", n)->required();
  gen_cut->add_option("--edges", edges, "Edges u-v:w, comma separated");
  auto* gen_mc = generate_cmd->add_subcommand("modular-concave", "w(X) + g(|X|) with g concave");
  gen_mc->add_option("--n", n)->required();
  gen_mc->add_option("--weights", weights_text, "n comma-separated integers")->required();
  gen_mc->add_option("--g", g_values, "n+1 comma-separated integers")->required();
  auto* gen_random = generate_cmd->add_subcommand("random", "Seeded random table");
  gen_random->add_option("--n", n)->required();
  gen_random->add_option("--distinct", distinct)->required();
  gen_random->add_option("--seed", seed);
  gen_random->add_option("--kind", kind)->check(CLI::IsMember({"integer", "rational", "labels"}));
  gen_random->add_option("--labels", labels_text, "Comma-separated label order for --kind labels");

  auto* search_cmd = app.add_subcommand("search", "First weak order whose classes satisfy a predicate");
  search_cmd->add_option("--n", n)->required();
  search_cmd->add_option("--predicate", predicate, "e.g. \"Q4&!Q3\"")->required();
  search_cmd->add_flag("--sparse", sparse);
  search_cmd->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(g, input);
    if (*minimize_cmd) return cmd_minimize(g, input, mode, start);
    if (*certify_cmd) return cmd_certify(g, input, point, assume);
    if (*hierarchy_cmd) return cmd_hierarchy(g, input);
    if (*constrained_cmd) return cmd_constrained(g, phi_path, f_path, k);
    if (*verify_cmd) return cmd_verify(g, suites, n);
    if (*generate_cmd) {
      std::optional<SetFunction> f;
      if (*gen_const) {
        const GroundSet ground = GroundSet::letters(n);
        const std::vector<std::int64_t> values(ground.power_set_size(), value);
        f = make_integer_function(ground, values);
      } else if (*gen_cut) {
        const auto parsed = parse_edges(edges);
        f = cut_function(n, parsed);
      } else if (*gen_mc) {
        const auto w = parse_int_list(weights_text, "--weights");
        const auto gv = parse_int_list(g_values, "--g");
        f = modular_plus_concave(n, w, gv);
      } else {
        Codomain codomain = Codomain::integer();
        if (kind == "rational") codomain = Codomain::rational();
        if (kind == "labels") {
          std::vector<std::string> labels;
          std::stringstream ss(labels_text);
          std::string item;
          while (std::getline(ss, item, ',')) labels.push_back(item);
          codomain = Codomain::labels(std::move(labels));
        }
        f = random_function(n, codomain, distinct, seed);
      }
      write_function(*f, sparse, output);
      return kOk;
    }
    if (*search_cmd) {
      const auto hit = search_witness(n, Predicate::parse(predicate), {g.threads});
      if (!hit) {
        std::cerr << "no function at n=" << n << " satisfies " << predicate << "\n";
        return kFails;
      }
      write_function(hit->function, sparse, output);
      std::cerr << "stream index " << hit->index << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "ordsub: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
