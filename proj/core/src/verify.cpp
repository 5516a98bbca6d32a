#include "spinmod/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <unordered_map>

#include "spinmod/canonical.hpp"
#include "spinmod/cycles.hpp"
#include "spinmod/error.hpp"
#include "spinmod/morphisms.hpp"
#include "spinmod/refine.hpp"
#include "spinmod/spin.hpp"
#include "spinmod/tropical.hpp"

namespace spinmod {

using nlohmann::json;

void CheckResult::fail(std::string witness) {
  passed = false;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

bool RunReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

json RunReport::to_json() const {
  json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["counts"] = counts;
  j["checks"] = json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"cases", c.cases},
                           {"witnesses", c.witnesses},
                           {"seconds", c.seconds}});
  }
  j["seconds"] = seconds;
  j["passed"] = passed();
  return j;
}

Suite parse_suite(const std::string& s) {
  if (s == "counts") return Suite::counts;
  if (s == "posets") return Suite::posets;
  if (s == "functoriality") return Suite::functoriality;
  if (s == "refine") return Suite::refine;
  if (s == "all") return Suite::all;
  throw InputError("unknown suite '" + s + "'");
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::counts: return "counts";
    case Suite::posets: return "posets";
    case Suite::functoriality: return "functoriality";
    case Suite::refine: return "refine";
    case Suite::all: return "all";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs body, turning VerificationFailure into a witness.
void check(RunReport& r, const std::string& name,
           const std::function<void(CheckResult&)>& body) {
  CheckResult c;
  c.name = name;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const VerificationFailure& e) {
    c.fail(e.what());
  }
  c.seconds = since(t0);
  r.checks.push_back(std::move(c));
}

// Per-case guard inside a check.
template <class F>
void guarded(CheckResult& c, const std::string& what, F&& f) {
  ++c.cases;
  try {
    f();
  } catch (const VerificationFailure& e) {
    c.fail(what + ": " + e.what());
  }
}

std::uint64_t pow2(int k) { return std::uint64_t{1} << k; }

}  // namespace

void verify_counts(const VerifyOptions& opt, RunReport& r) {
  const auto graphs = enumerate_stable_graphs(opt.g, opt.n, opt.budget);
  r.counts["stable_graphs"] = graphs.size();
  const int g = opt.g;

  check(r, "stratum counts sum to 2^{2g}", [&](CheckResult& c) {
    for (const auto& cls : graphs) {
      guarded(c, cls.key, [&] { stratum_counts(cls.graph); });
    }
  });

  check(r, "spin counts, lower bound and parity split", [&](CheckResult& c) {
    for (const auto& cls : graphs) {
      guarded(c, cls.key, [&] { spin_count_check(cls.graph); });
    }
  });

  check(r, "theta divisors: 2d = k on P-bar, deg D = g - 1", [&](CheckResult& c) {
    for (const auto& cls : graphs) {
      const Graph& gr = cls.graph;
      for (const auto& p : enumerate_cyclic(gr, opt.budget.cycle_cap)) {
        ++c.cases;
        const auto t = theta_divisors(gr, p);
        const auto k = canonical_divisor(remove_edges(gr, p.complement(), true));
        for (int v = 0; v < gr.num_vertices(); ++v) {
          if (2 * t.graph_divisor.values[v] != k.values[v]) {
            c.fail(cls.key + " P=" + p.to_hex() + ": 2d != k at vertex " +
                   std::to_string(v));
          }
        }
        if (t.degree() != g - 1) {
          c.fail(cls.key + " P=" + p.to_hex() + ": deg D^P = " +
                 std::to_string(t.degree()));
        }
      }
    }
  });

  check(r, "canonical divisor degree 2g - 2", [&](CheckResult& c) {
    for (const auto& cls : graphs) {
      ++c.cases;
      if (canonical_divisor(cls.graph).degree() != 2 * g - 2) c.fail(cls.key);
    }
  });

  check(r, "G-collections match odd theta count", [&](CheckResult& c) {
    for (const auto& cls : graphs) {
      const Graph& gr = cls.graph;
      if (!classify(gr).basic || gr.num_vertices() < 2) continue;
      ++c.cases;
      const auto gc = g_collections(gr);
      const std::uint64_t want = pow2(first_betti(gr) + 2 * gr.total_weight() - 1);
      if (gc.count != want) {
        c.fail(cls.key + ": " + std::to_string(gc.count) + " collections, want " +
               std::to_string(want));
      }
    }
  });

  check(r, "3-regular graphs have 3g - 3 + n edges", [&](CheckResult& c) {
    for (const auto& cls : graphs) {
      if (!classify(cls.graph).three_regular) continue;
      ++c.cases;
      if (cls.graph.num_edges() != 3 * g - 3 + opt.n) c.fail(cls.key);
    }
  });

  check(r, "components of G - F open are stable; blow-ups keep genus",
        [&](CheckResult& c) {
          for (const auto& cls : graphs) {
            const Graph& gr = cls.graph;
            const std::uint64_t subsets = pow2(gr.num_edges());
            for (std::uint64_t m = 0; m < subsets; ++m) {
              ++c.cases;
              const EdgeSet f(gr.num_edges(), m);
              for (const auto& comp : connected_components(remove_edges(gr, f, true))) {
                if (!is_stable(comp.graph)) {
                  c.fail(cls.key + " F=" + f.to_hex() + ": unstable component");
                }
              }
              if (genus(blow_up(gr, f)) != g) c.fail(cls.key + " R=" + f.to_hex());
            }
          }
        });
}

void verify_posets(const VerifyOptions& opt, RunReport& r) {
  const int g = opt.g;
  const int n = opt.n;
  const Poset graphs = build_graph_poset(g, n, opt.budget);
  const Poset cyclic = build_cyclic_poset(g, n, opt.budget);
  const Poset spin = build_spin_poset(g, n, opt.budget);
  r.counts["graph_classes"] = graphs.nodes.size();
  r.counts["cyclic_classes"] = cyclic.nodes.size();
  r.counts["spin_classes"] = spin.nodes.size();

  auto stats_check = [&](const Poset& p) {
    check(r, std::string(to_string(p.kind)) + " poset: components, grading, purity",
          [&](CheckResult& c) {
            c.cases = p.nodes.size();
            const auto st = poset_stats(p);
            for (const auto& f : st.failures) c.fail(f);
            r.counts[std::string(to_string(p.kind)) + "_components"] = st.components;
          });
  };
  stats_check(graphs);
  stats_check(cyclic);
  stats_check(spin);

  check(r, "forgetful maps [SP+] -> [C] -> S", [&](CheckResult& c) {
    c.cases = spin.nodes.size() + cyclic.nodes.size();
    for (const auto& f : forgetful_failures(spin, cyclic, graphs)) c.fail(f);
  });

  if (3 * g - 3 + n <= opt.direct_max_edges) {
    check(r, "direct generator agrees with downward closure", [&](CheckResult& c) {
      std::set<std::string> a;
      std::set<std::string> b;
      for (const auto& x : graphs.nodes) a.insert(x.key);
      for (const auto& x : enumerate_stable_graphs_direct(g, n)) b.insert(x.key);
      c.cases = a.size();
      if (a != b) {
        c.fail("closure found " + std::to_string(a.size()) + " classes, direct " +
               std::to_string(b.size()));
      }
    });
  }

  check(r, "cone complex: purity, components, faces vs order", [&](CheckResult& c) {
    const ConeComplex cx = build_cone_complex(g, n, opt.budget);
    c.cases = cx.cells.size() + cx.face_pairs_checked;
    for (const auto& f : cx.failures) c.fail(f);
    std::size_t top = 0;
    for (const auto& cell : cx.cells) top += cell.dim == 3 * g - 3 + n;
    r.counts["maximal_cells"] = top;
  });

  check(r, "pi_trop fibers: round trip and orbit counts", [&](CheckResult& c) {
    std::vector<int> classes_over(graphs.nodes.size(), 0);
    std::unordered_map<std::string, int> gindex;
    for (std::size_t i = 0; i < graphs.nodes.size(); ++i) gindex[graphs.nodes[i].key] = i;
    for (const auto& node : spin.nodes) ++classes_over[gindex.at(canonical_key(node.graph))];
    for (std::size_t i = 0; i < graphs.nodes.size(); ++i) {
      const Graph& gr = graphs.nodes[i].graph;
      const std::size_t sp = enumerate_spin(gr, opt.budget.cycle_cap).size();
      // Constant lengths: the full group acts.
      TropicalCurve flat{gr, std::vector<ExtRational>(gr.num_edges(), ExtRational(1))};
      // Distinct lengths: only automorphisms fixing every edge act.
      TropicalCurve generic{gr, {}};
      for (int e = 0; e < gr.num_edges(); ++e) generic.lengths.emplace_back(e + 1);
      for (const auto* curve : {&flat, &generic}) {
        ++c.cases;
        const auto fiber = pi_trop_fiber(*curve);
        for (const auto& psi : fiber) {
          if (!(pi_trop(psi) == *curve)) c.fail(graphs.nodes[i].key + ": round trip");
        }
        if (fiber.size() > sp) c.fail(graphs.nodes[i].key + ": fiber exceeds |SP_G|");
        if (curve == &flat && fiber.size() != static_cast<std::size_t>(classes_over[i])) {
          c.fail(graphs.nodes[i].key + ": constant-length fiber " +
                 std::to_string(fiber.size()) + " != spin classes " +
                 std::to_string(classes_over[i]));
        }
      }
    }
  });
}

void verify_functoriality(const VerifyOptions& opt, RunReport& r) {
  const auto graphs = enumerate_stable_graphs(opt.g, opt.n, opt.budget);
  r.inputs["seed"] = opt.seed;
  if (graphs.empty()) return;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick_graph(0, graphs.size() - 1);

  auto random_subset = [&](int size) {
    std::uniform_int_distribution<int> coin(0, 2);
    EdgeSet f(size);
    for (int e = 0; e < size; ++e) {
      if (coin(rng) == 0) f.insert(e);
    }
    return f;
  };

  check(r, "composition of pushforwards, parity preserved", [&](CheckResult& c) {
    for (int t = 0; t < opt.chains; ++t) {
      const Graph& gr = graphs[pick_graph(rng)].graph;
      const Contraction first = contract(gr, random_subset(gr.num_edges()));
      const Contraction second =
          contract(first.target, random_subset(first.target.num_edges()));
      const Contraction both = compose(first, second);
      const auto spins = enumerate_spin(gr, opt.budget.cycle_cap).all();
      std::uniform_int_distribution<std::size_t> pick(0, spins.size() - 1);
      const SpinStructure& s = spins[pick(rng)];
      guarded(c, canonical_key(gr) + " F=" + first.contracted.to_hex(), [&] {
        if (!(both.target == contract(gr, both.contracted).target)) {
          throw VerificationFailure("composite target differs from direct contraction");
        }
        if (push_cycle(both, s.cycle()) != push_cycle(second, push_cycle(first, s.cycle()))) {
          throw VerificationFailure("cycle pushforward does not compose, P=" + s.cycle().to_hex());
        }
        const SpinStructure a = push_spin(both, s);
        const SpinStructure b = push_spin(second, push_spin(first, s));
        if (!(a == b)) throw VerificationFailure("spin pushforward does not compose");
        if (a.parity() != s.parity()) throw VerificationFailure("parity changed");
      });
    }
  });

  check(r, "boundary commutes with contraction", [&](CheckResult& c) {
    for (const auto& cls : graphs) {
      const Graph& gr = cls.graph;
      for (int t = 0; t < 4; ++t) {
        const Contraction k = contract(gr, random_subset(gr.num_edges()));
        for (int e = 0; e < gr.num_edges(); ++e) {
          ++c.cases;
          const EdgeSet one = EdgeSet::of(gr.num_edges(), {e});
          if (push_vertices(k, boundary(gr, one)) != boundary(k.target, push_edges(k, one))) {
            c.fail(cls.key + " F=" + k.contracted.to_hex() + " e=" + std::to_string(e));
          }
        }
      }
    }
  });

  check(r, "pushforwards onto C and SP of the target", [&](CheckResult& c) {
    for (const auto& cls : graphs) {
      const Graph& gr = cls.graph;
      const Contraction k = contract(gr, random_subset(gr.num_edges()));
      ++c.cases;
      std::set<EdgeSet> cycles;
      std::set<SpinStructure> spins;
      for (const auto& s : enumerate_spin(gr, opt.budget.cycle_cap).all()) {
        cycles.insert(push_cycle(k, s.cycle()));
        spins.insert(push_spin(k, s));
      }
      const auto want_cycles = enumerate_cyclic(k.target, opt.budget.cycle_cap);
      const auto want_spins = enumerate_spin(k.target, opt.budget.cycle_cap).all();
      if (cycles != std::set<EdgeSet>(want_cycles.begin(), want_cycles.end())) {
        c.fail(cls.key + " F=" + k.contracted.to_hex() + ": C not covered");
      }
      if (spins != std::set<SpinStructure>(want_spins.begin(), want_spins.end())) {
        c.fail(cls.key + " F=" + k.contracted.to_hex() + ": SP not covered");
      }
    }
  });

  check(r, "automorphism sequence (half-edge level)", [&](CheckResult& c) {
    for (const auto& cls : graphs) {
      std::set<std::string> done;
      for (const auto& s : enumerate_spin(cls.graph, opt.budget.cycle_cap).all()) {
        const std::string key = canonical_key(cls.graph, s);
        if (!done.insert(key).second) continue;
        ++c.cases;
        const auto rep = aut_sequence(cls.graph, s);
        if (!rep.half_edge.multiplicative() || !rep.kernel_matches) {
          c.fail(key + ": |Aut(G,P,s)|=" + std::to_string(rep.half_edge.spin) +
                 " |Aut(Pbar)|=" + std::to_string(rep.half_edge.pbar) +
                 " |image|=" + std::to_string(rep.half_edge.image));
        }
      }
    }
  });

  check(r, "tropicalization diagram and generic fiber order", [&](CheckResult& c) {
    const Poset spin = build_spin_poset(opt.g, opt.n, opt.budget);
    const PosetOrder order(spin);
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < spin.nodes.size(); ++i) index[spin.nodes[i].key] = i;
    std::uniform_int_distribution<std::size_t> pick(0, spin.nodes.size() - 1);
    for (int t = 0; t < opt.families; ++t) {
      const auto& node = spin.nodes[pick(rng)];
      const FamilyDescriptor fam = random_family({node.graph, node.spin}, rng);
      guarded(c, node.key, [&] {
        if (!diagram_check(fam)) throw VerificationFailure("diagram does not commute");
        const auto fiber = family_generic_fiber(fam);
        const int lower = index.at(canonical_key(fiber.fiber));
        if (!order.geq(index.at(node.key), lower)) {
          throw VerificationFailure("generic fiber not below the special class");
        }
      });
    }
  });
}

void verify_refine(const VerifyOptions& opt, RunReport& r) {
  const auto graphs = enumerate_stable_graphs(opt.g, opt.n, opt.budget);
  check(r, "non-basic Eulerian graphs refine", [&](CheckResult& c) {
    for (const auto& cls : graphs) {
      const Graph& gr = cls.graph;
      const auto k = classify(gr);
      if (!k.eulerian || k.basic || gr.num_edges() == 0 || genus(gr) < 2) continue;
      for (int sign : {0, 1}) {
        guarded(c, cls.key + " s=" + std::to_string(sign), [&] {
          const Refinement ref = refine_nonbasic(gr, sign);
          const auto failures = refinement_failures(gr, sign, ref);
          if (!failures.empty()) throw VerificationFailure(failures.front());
        });
      }
    }
  });
}

RunReport run_verify(const VerifyOptions& opt) {
  RunReport r;
  r.command = "verify";
  r.inputs = {{"g", opt.g}, {"n", opt.n}, {"suite", to_string(opt.suite)},
              {"chains", opt.chains}, {"families", opt.families},
              {"max_edges", opt.budget.max_edges}};
  if (opt.g < 0 || opt.n < 0 || 2 * opt.g - 2 + opt.n <= 0) {
    throw DomainError("need 2g - 2 + n > 0");
  }
  opt.budget.check(opt.g, opt.n);
  const auto t0 = Clock::now();
  const bool all = opt.suite == Suite::all;
  if (all || opt.suite == Suite::counts) verify_counts(opt, r);
  if (all || opt.suite == Suite::posets) verify_posets(opt, r);
  if (all || opt.suite == Suite::functoriality) verify_functoriality(opt, r);
  if (all || opt.suite == Suite::refine) verify_refine(opt, r);
  r.seconds = since(t0);
  return r;
}

}  // namespace spinmod
