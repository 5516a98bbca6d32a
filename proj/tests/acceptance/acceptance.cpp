// Acceptance runner: one PASS/FAIL line per criterion.
// Usage: spinmod_acceptance [--only K] [--cli PATH]

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "spinmod/canonical.hpp"
#include "spinmod/error.hpp"
#include "spinmod/moduli.hpp"
#include "spinmod/refine.hpp"
#include "spinmod/spin.hpp"
#include "spinmod/tropical.hpp"
#include "spinmod/verify.hpp"

using namespace spinmod;

namespace {

// g <= 3, n <= 2, 2g - 2 + n > 0
const std::vector<std::pair<int, int>> kCases = {{1, 1}, {1, 2}, {2, 0}, {2, 1},
                                                 {2, 2}, {3, 0}, {3, 1}, {3, 2}};

constexpr int kChains = 1000;
constexpr int kFamilies = 100;
constexpr double kRuntimeLimit = 600.0;  // seconds

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::uint64_t pow2(int k) { return std::uint64_t{1} << k; }

std::string gn(int g, int n) { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }

// b1 of the spanning subgraph (V, P), by union-find.
int betti(const Graph& g, std::uint64_t p) {
  std::vector<int> parent(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  int edges = 0;
  int merges = 0;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!((p >> e) & 1U)) continue;
    ++edges;
    auto [u, v] = g.ends(e);
    if (find(u) != find(v)) {
      parent[find(u)] = find(v);
      ++merges;
    }
  }
  return edges - merges;
}

Outcome criterion1() {
  std::size_t graphs = 0;
  for (auto [g, n] : kCases) {
    for (const auto& cls : enumerate_stable_graphs(g, n)) {
      ++graphs;
      const Graph& gr = cls.graph;
      const int b = first_betti(gr);
      const int w = gr.total_weight();
      std::uint64_t total = 0;
      for (auto p : oracle::kernel(gr)) {
        const int bp = betti(gr, p);
        total += pow2(b - bp) * pow2(bp + 2 * w);
      }
      if (total != pow2(2 * g)) {
        return {false, cls.key + ": sum " + std::to_string(total) + " != " + std::to_string(pow2(2 * g))};
      }
      if (stratum_counts(gr).grand_total != total) {
        return {false, cls.key + ": library total disagrees with direct sum"};
      }
    }
  }
  return {true, std::to_string(graphs) + " graphs, every sum equals 2^{2g}"};
}

Outcome criterion2() {
  std::size_t graphs = 0;
  std::size_t tight = 0;
  for (auto [g, n] : kCases) {
    for (const auto& cls : enumerate_stable_graphs(g, n)) {
      ++graphs;
      const Graph& gr = cls.graph;
      const bool weightless = gr.total_weight() == 0;
      std::uint64_t closed = 0;
      bool every_nonzero_has_one = true;
      const auto all = oracle::spins(gr);
      for (auto p : oracle::kernel(gr)) {
        const auto comps = oracle::components(gr, p);
        int c_plus = 0;
        for (int x : comps.genus) c_plus += x > 0;
        closed += pow2(c_plus);
        if (p != 0 && c_plus != 1) every_nonzero_has_one = false;
        std::uint64_t even = 0;
        std::uint64_t odd = 0;
        for (const auto& s : all) {
          if (s.p == p) (s.parity() ? odd : even) += 1;
        }
        const bool exception = p == 0 && weightless;
        const bool split_ok = exception ? (even == 1 && odd == 0)
                                        : (even == pow2(c_plus - 1) && odd == pow2(c_plus - 1));
        if (!split_ok) return {false, cls.key + ": parity split wrong over P=" + std::to_string(p)};
      }
      const std::uint64_t count = all.size();
      const std::uint64_t bound = pow2(first_betti(gr) + 1) - 1;
      if (count != closed) return {false, cls.key + ": |SP_G| != sum 2^{c+}"};
      if (count < bound) return {false, cls.key + ": below 2^{b1+1}-1"};
      if ((count == bound) != (weightless && every_nonzero_has_one)) {
        return {false, cls.key + ": equality characterization fails"};
      }
      tight += count == bound;
      const auto lib = spin_count_check(gr);
      if (lib.enumerated != count) return {false, cls.key + ": library count disagrees"};
    }
  }
  return {true, std::to_string(graphs) + " graphs, " + std::to_string(tight) + " attain the bound"};
}

Outcome criterion3() {
  const auto s11 = oracle::stable_graphs(1, 1);
  const auto s20 = oracle::stable_graphs(2, 0);
  const auto sp11 = oracle::spin_classes(s11);
  std::vector<Graph> top20;
  for (const auto& gr : s20) {
    if (gr.num_edges() == 3) top20.push_back(gr);
  }
  const auto cells = oracle::spin_classes(top20);
  int odd = 0;
  for (const auto& [i, s] : cells) odd += s.parity();
  const int even = static_cast<int>(cells.size()) - odd;

  std::ostringstream d;
  d << "|S11|=" << s11.size() << " |S20|=" << s20.size() << " |SP11|=" << sp11.size()
    << " max cells (2,0)=" << cells.size() << " (" << even << " even/" << odd << " odd)";
  bool ok = s11.size() == 2 && s20.size() == 7 && sp11.size() == 5 && cells.size() == 9 && even == 6 &&
            odd == 3;

  // the frozen constants must also come out of the library
  const Poset p20 = build_spin_poset(2, 0);
  int lib_top = 0;
  int lib_odd = 0;
  for (const auto& c : p20.nodes) {
    if (c.rank != 3) continue;
    ++lib_top;
    lib_odd += c.parity;
  }
  const bool lib_ok = enumerate_stable_graphs(1, 1).size() == 2 && enumerate_stable_graphs(2, 0).size() == 7 &&
                      build_spin_poset(1, 1).nodes.size() == 5 && lib_top == 9 && lib_odd == 3;
  if (!lib_ok) d << "; library disagrees";
  return {ok && lib_ok, d.str()};
}

Outcome criterion4() {
  std::ostringstream d;
  bool ok = true;
  for (auto [g, n] : kCases) {
    const auto cx = build_cone_complex(g, n);
    int top = 0;
    for (const auto& c : cx.cells) top = std::max(top, c.dim);
    const int want = g > 0 ? 2 : 1;
    if (!cx.ok() || !cx.pure || top != 3 * g - 3 + n || cx.components != want) {
      ok = false;
      d << gn(g, n) << " dim " << top << " components " << cx.components;
      if (!cx.failures.empty()) d << " " << cx.failures.front();
      d << "; ";
    }
  }
  if (ok) d << kCases.size() << " complexes pure, 2 components, faces match the order";
  return {ok, d.str()};
}

Outcome criterion5() {
  auto lengths = [](std::initializer_list<std::int64_t> xs) {
    std::vector<ExtRational> out;
    for (auto x : xs) out.emplace_back(x);
    return out;
  };
  const Graph loop = Graph::from_edges({0}, {{0, 0}}, {0});
  const Graph theta = Graph::from_edges({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {});
  const std::vector<std::pair<TropicalCurve, std::size_t>> cases = {
      {{loop, lengths({1})}, 3}, {{theta, lengths({1, 2, 3})}, 7}, {{theta, lengths({1, 1, 1})}, 3}};
  std::ostringstream d;
  bool ok = true;
  for (const auto& [curve, want] : cases) {
    const auto fiber = pi_trop_fiber(curve);
    bool round_trip = true;
    for (const auto& psi : fiber) round_trip = round_trip && pi_trop(psi) == curve;
    ok = ok && fiber.size() == want && round_trip;
    d << fiber.size() << (round_trip ? "" : "(round trip broken)") << " ";
  }
  return {ok, "fiber sizes " + d.str() + "(want 3 7 3)"};
}

// Runs the functoriality suite and returns the named check.
CheckResult functoriality_check(int g, int n, const std::string& name) {
  VerifyOptions opt;
  opt.g = g;
  opt.n = n;
  opt.suite = Suite::functoriality;
  opt.chains = kChains;
  opt.families = kFamilies;
  RunReport r;
  verify_functoriality(opt, r);
  for (auto& c : r.checks) {
    if (c.name == name) return c;
  }
  throw std::logic_error("no check named " + name);
}

Outcome from_checks(const std::string& name, const std::string& unit) {
  std::size_t cases = 0;
  for (auto [g, n] : kCases) {
    const auto c = functoriality_check(g, n, name);
    cases += c.cases;
    if (!c.passed) {
      return {false, gn(g, n) + " " + (c.witnesses.empty() ? "" : c.witnesses.front())};
    }
  }
  return {true, std::to_string(cases) + " " + unit};
}

Outcome criterion6() {
  return from_checks("composition of pushforwards, parity preserved", "chains");
}

Outcome criterion7() {
  std::size_t classes = 0;
  std::size_t bad = 0;
  std::size_t half_edge_bad = 0;
  std::string witness;
  for (auto [g, n] : kCases) {
    for (const auto& node : build_spin_poset(g, n).nodes) {
      ++classes;
      const auto rep = aut_sequence(node.graph, node.spin);
      if (!rep.half_edge.multiplicative()) ++half_edge_bad;
      if (rep.edge.multiplicative()) continue;
      if (bad++ == 0) {
        witness = node.key + " |Aut(G,P,s)|=" + std::to_string(rep.edge.spin) +
                  " |Aut(Pbar)|=" + std::to_string(rep.edge.pbar) +
                  " |image|=" + std::to_string(rep.edge.image);
      }
    }
  }
  std::cout << "criterion 7 (info): half-edge level orders multiply on " << classes - half_edge_bad
            << "/" << classes << " classes\n";
  if (bad == 0) return {true, std::to_string(classes) + " classes"};
  return {false, std::to_string(bad) + "/" + std::to_string(classes) + " classes fail; first " + witness};
}

Outcome criterion8() {
  std::size_t cases = 0;
  for (auto [g, n] : kCases) {
    VerifyOptions opt;
    opt.g = g;
    opt.n = n;
    RunReport r;
    verify_refine(opt, r);
    for (const auto& c : r.checks) {
      cases += c.cases;
      if (!c.passed) return {false, gn(g, n) + " " + c.witnesses.front()};
    }
  }
  return {true, std::to_string(cases) + " (graph, sign) pairs refined"};
}

Outcome criterion9() {
  return from_checks("tropicalization diagram and generic fiber order", "families");
}

Outcome criterion10(const std::string& cli) {
  if (cli.empty()) return {false, "no --cli path given"};
  const std::string cmd = "\"" + cli + "\" verify --g 3 --n 0 --suite all > /dev/null 2>&1";
  const auto t0 = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  char buf[96];
  std::snprintf(buf, sizeof buf, "exit %d in %.2f s (limit %.0f s)", code, secs, kRuntimeLimit);
  return {code == 0 && secs < kRuntimeLimit, buf};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinmod acceptance criteria"};
  int only = 0;
  std::string cli;
  app.add_option("--only", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  app.add_option("--cli", cli, "path to the spinmod executable");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5, criterion6,
      criterion7, criterion8, criterion9, [&] { return criterion10(cli); }};

  int failed = 0;
  for (int k = 1; k <= 10; ++k) {
    if (only != 0 && only != k) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s  %s  [%.2fs]\n", k, o.passed ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.passed;
  }
  return failed == 0 ? 0 : 1;
}
