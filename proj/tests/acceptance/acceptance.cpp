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

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "monopos/checker.hpp"
#include "monopos/families.hpp"
#include "monopos/graph_io.hpp"
#include "monopos/induced_paths.hpp"
#include "monopos/lex_formula.hpp"
#include "monopos/position_sets.hpp"
#include "monopos/products.hpp"
#include "oracles.hpp"

using namespace monopos;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) note << what;
    ok = false;
  }
};

std::size_t mp_of(const Graph& g) { return mp_number(g).value; }

std::string num(std::size_t v) { return std::to_string(v); }

Outcome grids() {
  Outcome o;
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto v = mp_of(cartesian_product(path_graph(m), path_graph(n)).graph());
      o.expect(v == 2, "P" + num(m) + "xP" + num(n) + " gave " + num(v));
    }
  const auto cyl = mp_of(cartesian_product(path_graph(3), cycle_graph(4)).graph());
  o.expect(cyl == 2, "P3xC4 gave " + num(cyl));
  const auto torus =
      mp_of(cartesian_product(cycle_graph(4), cycle_graph(4)).graph());
  o.expect(torus == 2, "C4xC4 gave " + num(torus));
  o.note << (o.ok ? "9 grids, cylinder and torus all 2" : "");
  return o;
}

Outcome complete_factor() {
  Outcome o;
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto v = mp_of(cartesian_product(complete_graph(n), path_graph(4)).graph());
    o.expect(v == n, "K" + num(n) + "xP4 gave " + num(v));
  }
  const auto a = mp_of(cartesian_product(complete_graph(3), cycle_graph(4)).graph());
  o.expect(a == 3, "K3xC4 gave " + num(a));
  const auto b =
      mp_of(cartesian_product(complete_graph(3), complete_graph(4)).graph());
  o.expect(b == 4, "K3xK4 gave " + num(b));
  o.note << (o.ok ? "K2xP4=2 K3xP4=3 K3xC4=3 K3xK4=4" : "");
  return o;
}

Outcome star_product() {
  Outcome o;
  const auto p = cartesian_product(star_graph(4), star_graph(2));
  const auto r = mp_number(p.graph());
  const auto v = r.value;
  o.expect(v == 4, "mp gave " + num(v));
  const auto w = classify_mp_set(p, r.witness);
  o.expect(w.tag == MpTag::layered && w.orientation == Factor::H,
           "solver witness classified " + mp_tag_name(w.tag));
  const VertexSet t = p.make_set({{1, 1}, {2, 1}, {3, 1}, {4, 1}});
  o.expect(is_mp_set(p.graph(), t), "leaf layer set is not an mp-set");
  const auto c = classify_mp_set(p, t);
  o.expect(c.tag == MpTag::layered && project(p, t, Factor::H).size() == 1,
           "leaf layer set classified " + mp_tag_name(c.tag));
  o.note << (o.ok ? "mp=4, solver witness and {(1..4,1)} layered" : "");
  return o;
}

Outcome gear_gap() {
  Outcome o;
  const Graph g = gear_graph(4);
  const auto mp = mp_of(g), gp = gp_number(g).value;
  o.expect(mp == 2 && gp == 4, "mp=" + num(mp) + " gp=" + num(gp));
  o.note << (o.ok ? "mp=2 gp=4" : "");
  return o;
}

Outcome lower_mp() {
  Outcome o;
  const auto fs = load_corpus({CorpusSource::generator, "", 2, 3, true, true});
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i; j < fs.size(); ++j) {
      const auto v = mp_lower(cartesian_product(fs[i], fs[j]).graph()).value;
      ++pairs;
      o.expect(v == 2, to_graph6(fs[i]) + " x " + to_graph6(fs[j]) +
                           " gave " + num(v));
    }
  if (o.ok) o.note << pairs << " pairs, all 2";
  return o;
}

Outcome lex_equivalence() {
  Outcome o;
  const auto left = load_corpus({CorpusSource::generator, "", 2, 4, true, true});
  const auto right = load_corpus({CorpusSource::generator, "", 2, 3, true, true});
  std::size_t pairs = 0, mismatches = 0, skipped = 0;
  for (const auto& g : left)
    for (const auto& h : right) {
      ++pairs;
      try {
        const auto formula = lex_mp(g, h).value;
        const auto direct = mp_of(lexicographic_product(g, h).graph());
        if (formula != direct) {
          ++mismatches;
          o.expect(false, to_graph6(g) + " o " + to_graph6(h) + ": " +
                              num(formula) + " vs " + num(direct));
        }
      } catch (const BudgetExceeded&) {
        ++skipped;
      }
    }
  o.expect(skipped == 0, "budget skips");
  if (o.ok)
    o.note << pairs << " ordered pairs, " << mismatches << " mismatches, "
           << skipped << " skips";
  return o;
}

Outcome lex_counterexample() {
  Outcome o;
  const Graph h = path_graph(3);
  const auto p = lexicographic_product(path_graph(2), h);
  const VertexSet s = p.make_set({{0, 0}, {0, 1}, {1, 1}, {1, 2}});
  o.expect(s.size() == 4 && is_mp_set(p.graph(), s), "set is not an mp-set");
  const auto value = lex_mp(path_graph(2), h).value;
  o.expect(value == 4, "lex_mp gave " + num(value));
  o.expect(!is_mp_set(h, project(p, s, Factor::H)),
           "H-projection is an mp-set");
  o.note << (o.ok ? "mp-set of size 4 = lex_mp, projection {0,1,2} not mp"
                  : "");
  return o;
}

Outcome checker_sweep() {
  Outcome o;
  const auto reports = run_checks(default_check_plan(), {});
  std::size_t tested = 0;
  for (const auto& r : reports) {
    tested += r.tested;
    if (r.check_id == "C17")
      o.expect(r.found > 0, "C17 found nothing");
    else
      o.expect(r.failures.empty() && r.skipped == 0,
               r.check_id + " failures=" + num(r.failures.size()) +
                   " skipped=" + num(r.skipped));
  }
  if (o.ok) o.note << reports.size() << " checks, " << tested << " instances";
  return o;
}

Outcome internal_oracle() {
  Outcome o;
  std::size_t graphs = 0, sets = 0;
  for (std::size_t n = 1; n <= kMaxGeneratedOrder; ++n)
    for (const Graph& g : generate_connected_graphs(n, true)) {
      ++graphs;
      const oracle::Adj adj(g);
      const auto e = oracle::exhaustive(adj);
      const auto v = mp_of(g);
      o.expect(v == static_cast<std::size_t>(e.mp),
               to_graph6(g) + " mp " + num(v) + " vs " + num(e.mp));

      std::vector<VertexSet> j(n * n);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
          if (a != b) j[a * n + b] = monophonic_interval(g, a, b);
      for (oracle::Mask m = 1; m < (oracle::Mask{1} << n); ++m) {
        ++sets;
        const VertexSet s = oracle::set_of(n, m);
        bool reduced = true;
        for (Vertex a : s)
          for (Vertex b : s)
            if (a != b) {
              VertexSet inner = j[a * n + b] & s;
              inner.erase(a);
              inner.erase(b);
              reduced &= inner.empty();
            }
        if (find_bad_path(g, s).has_value() == reduced)
          o.expect(false, to_graph6(g) + " disagrees on set " +
                              std::to_string(m));
      }
    }
  if (o.ok) o.note << graphs << " graphs, " << sets << " subsets";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria =
      {{"grid/cylinder/torus", grids},
       {"complete factor", complete_factor},
       {"star product", star_product},
       {"gear gap", gear_gap},
       {"lower mp", lower_mp},
       {"lex oracle equivalence", lex_equivalence},
       {"lex projection counterexample", lex_counterexample},
       {"checker sweep", checker_sweep},
       {"internal oracle", internal_oracle}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("%s  criterion %zu  %-30s %s (%.1fs)\n",
                o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.note.str().c_str(), secs);
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
