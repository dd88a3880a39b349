// Copyright 2026 The monopos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "monopos/checker.hpp"
#include "monopos/errors.hpp"
#include "monopos/families.hpp"
#include "monopos/graph_io.hpp"
#include "monopos/induced_paths.hpp"
#include "monopos/invariants.hpp"
#include "monopos/lex_formula.hpp"
#include "monopos/position_sets.hpp"
#include "monopos/products.hpp"
#include "monopos/serialize.hpp"

namespace monopos::cli {
namespace {

using nlohmann::json;

struct Session {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
  bool json = false;
  std::uint64_t budget = SearchBudget::kUnlimited;
  bool stdin_used = false;

  SearchBudget make_budget() const { return SearchBudget(budget); }
};

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

Graph parse_text(const std::string& text, const std::string& source) {
  const std::string body = trim(text);
  if (body.empty()) throw DomainError("no graph in " + source);
  if (detect_format(body) == GraphFormat::edge_list)
    return parse_graph(body, GraphFormat::edge_list);
  std::istringstream lines(body);
  auto graphs = read_graph6_stream(lines);
  if (graphs.size() != 1)
    throw DomainError(source + " holds " + std::to_string(graphs.size()) +
                      " graphs; expected one");
  return std::move(graphs.front());
}

// "-" (stdin), an existing file, "g6:STRING", or a family descriptor.
Graph load_graph(Session& s, const std::string& arg) {
  if (arg == "-") {
    if (s.stdin_used) throw DomainError("stdin can feed only one graph");
    s.stdin_used = true;
    std::stringstream buf;
    buf << s.in.rdbuf();
    return parse_text(buf.str(), "stdin");
  }
  if (arg.rfind("g6:", 0) == 0) return from_graph6(arg.substr(3));
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream file(arg);
    std::stringstream buf;
    buf << file.rdbuf();
    return parse_text(buf.str(), arg);
  }
  return generate_family(parse_family(arg));
}

std::vector<Vertex> parse_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; }))
      throw DomainError("bad vertex '" + item + "'");
    out.push_back(std::stoul(item));
  }
  return out;
}

VertexSet parse_set(const Graph& g, const std::string& text) {
  VertexSet s(g.order());
  for (Vertex v : parse_list(text)) {
    if (v >= g.order())
      throw DomainError("vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

// "g,h;g,h;..."
VertexSet parse_pairs(const ProductGraph& p, const std::string& text) {
  std::vector<ProductVertex> members;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (trim(item).empty()) continue;
    const auto coords = parse_list(item);
    if (coords.size() != 2)
      throw DomainError("product vertex '" + item + "' needs two coordinates");
    members.push_back({coords[0], coords[1]});
  }
  return p.make_set(members);
}

std::string format_set(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

std::string format_pairs(const ProductGraph& p, const VertexSet& s) {
  std::string out = "{";
  for (auto [g, h] : p.pairs(s))
    out += (out.size() > 1 ? " " : "") + std::string("(") +
           std::to_string(g) + "," + std::to_string(h) + ")";
  return out + "}";
}

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(16) << key << value << '\n';
}

void emit(Session& s, const json& j) { s.out << j.dump() << '\n'; }

void print_solve(Session& s, const SolveResult& r) {
  if (s.json) return emit(s, r);
  row(s.out, "value", std::to_string(r.value));
  row(s.out, "witness", format_set(r.witness));
  row(s.out, "nodes", std::to_string(r.nodes_explored));
}

ProductKind parse_kind(const std::string& kind) {
  if (kind == "cartesian") return ProductKind::cartesian;
  if (kind == "lexicographic") return ProductKind::lexicographic;
  throw DomainError("unknown product kind " + kind);
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

std::optional<std::uint64_t> env_budget() {
  const char* raw = std::getenv("MONOPOS_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    throw DomainError(std::string("MONOPOS_BUDGET is not a number: ") + raw);
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err, std::istream& in) {
  Session s{out, err, in};
  CLI::App app{"Exact monophonic position computations on graphs and products",
               "monopos"};
  app.fallthrough();
  app.require_subcommand(1);
  std::optional<std::uint64_t> budget_flag;
  app.add_flag("--json", s.json, "Machine-readable JSON output");
  app.add_option("--budget", budget_flag, "Cap on search nodes per query");

  std::function<int()> run;
  std::string g_arg, h_arg;

  auto graph_cmd = [&](const std::string& name, const std::string& about,
                       std::function<SolveResult(const Graph&, SearchBudget&)>
                           solve) {
    auto* cmd = app.add_subcommand(name, about);
    cmd->add_option("graph", g_arg, "Family, g6:STRING, file or -")
        ->required();
    cmd->callback([&, solve] {
      run = [&, solve] {
        const Graph g = load_graph(s, g_arg);
        auto budget = s.make_budget();
        print_solve(s, solve(g, budget));
        return kExitOk;
      };
    });
  };

  graph_cmd("mp", "Monophonic position number",
            [](const Graph& g, SearchBudget& b) { return mp_number(g, b); });
  graph_cmd("gp", "General position number",
            [](const Graph& g, SearchBudget& b) { return gp_number(g, b); });
  graph_cmd("mp-lower", "Smallest maximal mp-set",
            [](const Graph& g, SearchBudget& b) { return mp_lower(g, b); });
  graph_cmd("mp-i", "Largest independent mp-set",
            [](const Graph& g, SearchBudget& b) {
              return mp_independent(g, b);
            });

  auto* inv_cmd = app.add_subcommand("invariants", "Basic graph invariants");
  inv_cmd->add_option("graph", g_arg)->required();
  inv_cmd->callback([&] {
    run = [&] {
      const Graph g = load_graph(s, g_arg);
      const auto inv = invariants(g);
      if (s.json) {
        json j = inv;
        j["order"] = g.order();
        j["size"] = g.size();
        j["graph6"] = to_graph6(g);
        emit(s, j);
        return kExitOk;
      }
      row(out, "order", std::to_string(g.order()));
      row(out, "size", std::to_string(g.size()));
      row(out, "omega", std::to_string(inv.omega));
      row(out, "alpha", std::to_string(inv.alpha));
      row(out, "max_degree", std::to_string(inv.max_degree));
      row(out, "delta1", std::to_string(inv.delta1));
      row(out, "sigma", inv.sigma ? "1" : "0");
      row(out, "simplicials", format_set(inv.simplicials));
      row(out, "triangle_free", inv.triangle_free ? "true" : "false");
      row(out, "connected", inv.connected ? "true" : "false");
      return kExitOk;
    };
  });

  Vertex iu = 0, iv = 0;
  auto* interval_cmd =
      app.add_subcommand("interval", "Monophonic interval J[u,v]");
  interval_cmd->add_option("graph", g_arg)->required();
  interval_cmd->add_option("u", iu)->required();
  interval_cmd->add_option("v", iv)->required();
  interval_cmd->callback([&] {
    run = [&] {
      const Graph g = load_graph(s, g_arg);
      auto budget = s.make_budget();
      const VertexSet j = monophonic_interval(g, iu, iv, budget);
      if (s.json)
        emit(s, {{"u", iu}, {"v", iv}, {"interval", j}});
      else
        row(out, "interval", format_set(j));
      return kExitOk;
    };
  });

  std::string set_arg;
  auto* bad_cmd = app.add_subcommand(
      "bad-path", "Induced path through three members of a set, if any");
  bad_cmd->add_option("graph", g_arg)->required();
  bad_cmd->add_option("--set", set_arg, "Comma-separated vertices")
      ->required();
  bad_cmd->callback([&] {
    run = [&] {
      const Graph g = load_graph(s, g_arg);
      const VertexSet set = parse_set(g, set_arg);
      auto budget = s.make_budget();
      const auto check = check_mp_set(g, set, budget);
      if (s.json) {
        json j{{"set", set}, {"in_position", check.in_position}};
        j["bad_path"] = check.bad_path ? json(*check.bad_path) : json();
        emit(s, j);
      } else {
        row(out, "in_position", check.in_position ? "true" : "false");
        if (check.bad_path) {
          std::string path;
          for (Vertex v : *check.bad_path)
            path += (path.empty() ? "" : " ") + std::to_string(v);
          row(out, "bad_path", path);
        }
      }
      return kExitOk;
    };
  });

  std::string kind_arg = "cartesian";
  std::string format_arg = "graph6";
  auto* product_cmd = app.add_subcommand("product", "Build a product graph");
  product_cmd->add_option("--kind", kind_arg, "cartesian or lexicographic")
      ->check(CLI::IsMember({"cartesian", "lexicographic"}));
  product_cmd->add_option("--format", format_arg, "graph6 or edge-list")
      ->check(CLI::IsMember({"graph6", "edge-list"}));
  product_cmd->add_option("G", g_arg, "First factor")->required();
  product_cmd->add_option("H", h_arg, "Second factor")->required();
  product_cmd->callback([&] {
    run = [&] {
      const Graph g = load_graph(s, g_arg);
      const Graph h = load_graph(s, h_arg);
      const ProductGraph p(parse_kind(kind_arg), g, h);
      if (s.json) {
        emit(s, {{"kind", product_kind_name(p.kind())},
                 {"order", p.graph().order()},
                 {"size", p.graph().size()},
                 {"graph6", to_graph6(p.graph())}});
      } else if (format_arg == "edge-list") {
        out << serialize_graph(p.graph(), GraphFormat::edge_list);
      } else {
        out << to_graph6(p.graph()) << '\n';
      }
      return kExitOk;
    };
  });

  std::string pairs_arg;
  auto* classify_cmd = app.add_subcommand(
      "classify", "Layered/varied/cliquey type of an mp-set of G x H");
  classify_cmd->add_option("G", g_arg, "First factor")->required();
  classify_cmd->add_option("H", h_arg, "Second factor")->required();
  auto* pairs_opt =
      classify_cmd->add_option("--pairs", pairs_arg, "g,h;g,h;... members");
  auto* cset_opt =
      classify_cmd->add_option("--set", set_arg, "Flat indices g*|H|+h");
  pairs_opt->excludes(cset_opt);
  classify_cmd->callback([&] {
    run = [&] {
      const Graph g = load_graph(s, g_arg);
      const Graph h = load_graph(s, h_arg);
      const auto p = cartesian_product(g, h);
      if (pairs_arg.empty() && set_arg.empty())
        throw DomainError("classify needs --pairs or --set");
      const VertexSet set = pairs_arg.empty() ? parse_set(p.graph(), set_arg)
                                              : parse_pairs(p, pairs_arg);
      const auto c = classify_mp_set(p, set);
      if (s.json) {
        json j = mp_class_json(c);
        j["set"] = product_set_json(p, set);
        emit(s, j);
      } else {
        row(out, "set", format_pairs(p, set));
        row(out, "tag", mp_tag_name(c.tag));
        if (c.orientation)
          row(out, "orientation", *c.orientation == Factor::G ? "G" : "H");
        row(out, "predicates", std::to_string(c.predicates));
      }
      return kExitOk;
    };
  });

  auto* lex_cmd =
      app.add_subcommand("lex-mp", "mp(G o H) from the profile formula");
  lex_cmd->add_option("G", g_arg, "First factor")->required();
  lex_cmd->add_option("H", h_arg, "Second factor")->required();
  lex_cmd->callback([&] {
    run = [&] {
      const Graph g = load_graph(s, g_arg);
      const Graph h = load_graph(s, h_arg);
      auto budget = s.make_budget();
      const auto r = lex_mp(g, h, budget);
      const auto p = lexicographic_product(g, h);
      if (s.json) {
        emit(s, lex_result_json(p, r));
        return kExitOk;
      }
      row(out, "value", std::to_string(r.value));
      row(out, "profile", "n_M=" + std::to_string(r.best_profile.n_m) +
                              " r_M=" + std::to_string(r.best_profile.r_m));
      row(out, "shortcut", lex_shortcut_name(r.shortcut_used));
      row(out, "witness", format_pairs(p, r.witness));
      return kExitOk;
    };
  });

  std::string checks_arg, corpus_arg, pair_corpus_arg;
  std::size_t max_order = 6, pair_max_order = 4, lex_h_max_order = 3;
  bool check_dedup = true;
  auto* check_cmd =
      app.add_subcommand("check", "Run the theorem checks on graph corpora");
  check_cmd->add_option("--checks", checks_arg, "C1,C5,... (default all)");
  check_cmd->add_option("--max-order", max_order,
                        "Single-graph corpus order bound");
  check_cmd->add_option("--pair-max-order", pair_max_order,
                        "Cartesian factor and lexicographic G order bound");
  check_cmd->add_option("--lex-h-max-order", lex_h_max_order,
                        "Lexicographic H order bound");
  check_cmd->add_option("--corpus", corpus_arg, "graph6 file of single graphs");
  check_cmd->add_option("--pair-corpus", pair_corpus_arg,
                        "graph6 file of factor graphs");
  check_cmd->add_flag("--dedup,!--no-dedup", check_dedup,
                      "One graph per isomorphism class (default on)");
  check_cmd->callback([&] {
    run = [&] {
      auto corpus = [&](const std::string& file, std::size_t lo,
                        std::size_t hi) {
        CorpusSpec spec;
        spec.min_order = lo;
        spec.max_order = hi;
        spec.dedup = check_dedup;
        if (!file.empty()) {
          spec.source = CorpusSource::graph6_file;
          spec.path = file;
        }
        return load_corpus(spec);
      };
      CheckPlan plan;
      plan.instance_budget = s.budget;
      plan.singles = corpus(corpus_arg, 1, max_order);
      plan.cartesian_factors = corpus(pair_corpus_arg, 1, pair_max_order);
      plan.lex_left = corpus(pair_corpus_arg, 2, pair_max_order);
      plan.lex_right = corpus(pair_corpus_arg, 2, lex_h_max_order);
      const auto reports = run_checks(plan, split_ids(checks_arg));
      const bool ok = std::all_of(reports.begin(), reports.end(),
                                  [](const auto& r) { return r.passed(); });
      if (s.json) {
        emit(s, {{"passed", ok}, {"reports", reports}});
      } else {
        for (const auto& r : reports) {
          out << std::left << std::setw(5) << r.check_id << std::setw(27)
              << r.title << "tested=" << r.tested
              << " n/a=" << r.not_applicable << " skipped=" << r.skipped;
          if (r.check_id == "C17") out << " found=" << r.found;
          out << " failures=" << r.failures.size() << "  "
              << (r.passed() ? "PASS" : "FAIL") << '\n';
          for (const auto& f : r.failures) {
            out << "    graphs";
            for (const auto& g6 : f.graphs) out << ' ' << g6;
            out << " witness " << f.witness << " expected " << f.expected
                << " actual " << f.actual << '\n';
          }
        }
      }
      return ok ? kExitOk : kExitCheckFailed;
    };
  });

  std::size_t gen_min = 1, gen_max = 4;
  bool gen_dedup = false;
  auto* gen_cmd =
      app.add_subcommand("generate", "Connected graphs as graph6 lines");
  gen_cmd->add_option("--max-order", gen_max)->check(CLI::Range(1, 7));
  gen_cmd->add_option("--min-order", gen_min)->check(CLI::Range(1, 7));
  gen_cmd->add_flag("--dedup,!--no-dedup", gen_dedup,
                    "One graph per isomorphism class");
  gen_cmd->callback([&] {
    run = [&] {
      CorpusSpec spec;
      spec.min_order = gen_min;
      spec.max_order = gen_max;
      spec.dedup = gen_dedup;
      const auto graphs = load_corpus(spec);
      if (s.json) {
        json list = json::array();
        for (const auto& g : graphs) list.push_back(to_graph6(g));
        emit(s, {{"count", graphs.size()}, {"graphs", list}});
      } else {
        for (const auto& g : graphs) out << to_graph6(g) << '\n';
      }
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (budget_flag) {
      s.budget = *budget_flag;
    } else if (auto env = env_budget()) {
      s.budget = *env;
    }
    return run();
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace monopos::cli
