#include "spinmod/moduli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "spinmod/canonical.hpp"
#include "spinmod/detail/disjoint_sets.hpp"
#include "spinmod/detail/parallel.hpp"
#include "spinmod/error.hpp"
#include "spinmod/morphisms.hpp"

namespace spinmod {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("SPINMOD_BUDGET"); env && *env) {
    const std::string_view s(env);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 0) {
      throw InputError("SPINMOD_BUDGET must be a non-negative integer");
    }
    b.max_edges = v;
  }
  return b;
}

void Budget::check(int g, int n) const {
  if (3 * g - 3 + n > max_edges) {
    throw ResourceError("(g, n) = (" + std::to_string(g) + ", " +
                        std::to_string(n) + ") needs graphs with " +
                        std::to_string(3 * g - 3 + n) +
                        " edges; budget allows " + std::to_string(max_edges));
  }
}

const char* to_string(PosetKind k) {
  switch (k) {
    case PosetKind::graphs: return "graphs";
    case PosetKind::cyclic: return "cyclic";
    case PosetKind::spin: return "spin";
  }
  return "?";
}

PosetKind parse_poset_kind(const std::string& s) {
  if (s == "graphs") return PosetKind::graphs;
  if (s == "cyclic") return PosetKind::cyclic;
  if (s == "spin") return PosetKind::spin;
  throw InputError("unknown kind '" + s + "'");
}

std::optional<int> Poset::find(const std::string& key) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].key == key) return static_cast<int>(i);
  }
  return std::nullopt;
}

namespace {

bool in_range(int g, int n) { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }

// Calls visit(edges) for every symmetric multiplicity matrix on nv vertices
// meeting the remaining-degree vector exactly.
void fill_regular(std::vector<int>& remaining, int i, int j,
                  std::vector<std::pair<int, int>>& edges,
                  const std::function<void()>& visit) {
  const int nv = static_cast<int>(remaining.size());
  if (i == nv) {
    visit();
    return;
  }
  if (j == nv) {
    if (remaining[i] == 0) fill_regular(remaining, i + 1, i + 1, edges, visit);
    return;
  }
  const std::size_t mark = edges.size();
  if (i == j) {
    for (int m = 0; 2 * m <= remaining[i]; ++m) {
      remaining[i] -= 2 * m;
      for (int k = 0; k < m; ++k) edges.emplace_back(i, i);
      fill_regular(remaining, i, j + 1, edges, visit);
      edges.resize(mark);
      remaining[i] += 2 * m;
    }
    return;
  }
  for (int m = 0; m <= std::min(remaining[i], remaining[j]); ++m) {
    remaining[i] -= m;
    remaining[j] -= m;
    for (int k = 0; k < m; ++k) edges.emplace_back(i, j);
    fill_regular(remaining, i, j + 1, edges, visit);
    edges.resize(mark);
    remaining[i] += m;
    remaining[j] += m;
  }
}

// Every placement of n ordered legs on nv vertices.
void for_each_leg_placement(int nv, int n,
                            const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> legs(n, 0);
  for (;;) {
    visit(legs);
    int k = n - 1;
    while (k >= 0 && legs[k] == nv - 1) legs[k--] = 0;
    if (k < 0) return;
    ++legs[k];
  }
}

std::vector<IsoClass> sorted_classes(std::map<std::string, IsoClass> by_key) {
  std::vector<IsoClass> out;
  out.reserve(by_key.size());
  for (auto& [key, c] : by_key) out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(), [](const IsoClass& a, const IsoClass& b) {
    return a.rank < b.rank;
  });
  return out;
}

IsoClass graph_class(Graph g, std::string key) {
  IsoClass c;
  c.rank = g.num_edges();
  c.graph = std::move(g);
  c.key = std::move(key);
  return c;
}

}  // namespace

std::vector<Graph> enumerate_three_regular(int g, int n) {
  if (!in_range(g, n)) return {};
  const int nv = 2 * g - 2 + n;
  std::map<std::string, Graph> found;
  for_each_leg_placement(nv, n, [&](const std::vector<int>& legs) {
    std::vector<int> remaining(nv, 3);
    for (int v : legs) {
      if (--remaining[v] < 0) return;
    }
    std::vector<std::pair<int, int>> edges;
    fill_regular(remaining, 0, 0, edges, [&] {
      Graph gr = Graph::from_edges(std::vector<int>(nv, 0), edges, legs);
      if (!gr.connected()) return;
      found.try_emplace(canonical_key(gr), std::move(gr));
    });
  });
  std::vector<Graph> out;
  for (auto& [k, gr] : found) out.push_back(std::move(gr));
  return out;
}

std::vector<IsoClass> enumerate_stable_graphs(int g, int n, const Budget& budget) {
  if (!in_range(g, n)) return {};
  budget.check(g, n);
  std::map<std::string, IsoClass> seen;
  std::vector<std::string> frontier;
  for (Graph& seed : enumerate_three_regular(g, n)) {
    std::string key = canonical_key(seed);
    frontier.push_back(key);
    seen.emplace(key, graph_class(std::move(seed), key));
  }
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const auto& key : frontier) {
      const Graph gr = seen.at(key).graph;
      for (int e = 0; e < gr.num_edges(); ++e) {
        Graph lower = contract(gr, EdgeSet::of(gr.num_edges(), {e})).target;
        std::string lk = canonical_key(lower);
        if (seen.count(lk)) continue;
        next.push_back(lk);
        seen.emplace(lk, graph_class(std::move(lower), lk));
      }
    }
    frontier = std::move(next);
  }
  auto out = sorted_classes(std::move(seen));
  for (std::size_t i = 0; i < out.size(); ++i) out[i].graph_class = static_cast<int>(i);
  return out;
}

std::vector<IsoClass> enumerate_stable_graphs_direct(int g, int n) {
  if (!in_range(g, n)) return {};
  std::map<std::string, IsoClass> seen;
  const int max_v = 2 * g - 2 + n;
  for (int nv = 1; nv <= max_v; ++nv) {
    // Weights nonincreasing along vertex ids; any graph can be relabelled so.
    std::vector<int> w(nv, 0);
    std::function<void(int, int, int)> weights = [&](int i, int cap, int sum) {
      if (i == nv) {
        const int ne = g - sum + nv - 1;
        if (ne < 0) return;
        std::vector<std::pair<int, int>> slots;
        for (int a = 0; a < nv; ++a) {
          for (int b = a; b < nv; ++b) slots.emplace_back(a, b);
        }
        for_each_leg_placement(nv, n, [&](const std::vector<int>& legs) {
          std::vector<std::pair<int, int>> edges;
          std::function<void(std::size_t, int)> place = [&](std::size_t s, int left) {
            if (s + 1 == slots.size() || left == 0) {
              const std::size_t mark = edges.size();
              if (s < slots.size()) {
                for (int k = 0; k < left; ++k) edges.push_back(slots[s]);
              }
              Graph gr = Graph::from_edges(w, edges, legs);
              if (is_stable(gr) && genus(gr) == g) {
                std::string key = canonical_key(gr);
                if (!seen.count(key)) seen.emplace(key, graph_class(std::move(gr), key));
              }
              edges.resize(mark);
              return;
            }
            for (int m = 0; m <= left; ++m) {
              const std::size_t mark = edges.size();
              for (int k = 0; k < m; ++k) edges.push_back(slots[s]);
              place(s + 1, left - m);
              edges.resize(mark);
            }
          };
          place(0, ne);
        });
        return;
      }
      for (int x = 0; x <= std::min(cap, g - sum); ++x) {
        w[i] = x;
        weights(i + 1, x, sum + x);
      }
    };
    weights(0, g, 0);
  }
  auto out = sorted_classes(std::move(seen));
  for (std::size_t i = 0; i < out.size(); ++i) out[i].graph_class = static_cast<int>(i);
  return out;
}

namespace {

Poset empty_poset(PosetKind kind, int g, int n) {
  Poset p;
  p.kind = kind;
  p.g = g;
  p.n = n;
  if (!in_range(g, n)) p.note = "no stable graphs: 2g - 2 + n <= 0";
  return p;
}

// Sorts nodes by (rank, key), then derives covers from single-edge
// contractions via lower_key(node, edge).
void assemble(Poset& p, std::map<std::string, IsoClass> by_key, int jobs,
              const std::function<std::string(const IsoClass&, int)>& lower_key) {
  p.nodes = sorted_classes(std::move(by_key));
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    index.emplace(p.nodes[i].key, static_cast<int>(i));
  }
  std::vector<std::vector<int>> lower(p.nodes.size());
  detail::parallel_for(p.nodes.size(), jobs, [&](std::size_t i) {
    const IsoClass& c = p.nodes[i];
    for (int e = 0; e < c.graph.num_edges(); ++e) {
      const std::string k = lower_key(c, e);
      auto it = index.find(k);
      if (it == index.end()) {
        throw VerificationFailure("contraction of " + c.key + " along edge " +
                                  std::to_string(e) + " leaves the poset");
      }
      lower[i].push_back(it->second);
    }
  });
  std::set<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    for (int l : lower[i]) covers.emplace(static_cast<int>(i), l);
  }
  p.covers.assign(covers.begin(), covers.end());
}

}  // namespace

Poset build_graph_poset(int g, int n, const Budget& budget) {
  Poset p = empty_poset(PosetKind::graphs, g, n);
  if (!in_range(g, n)) return p;
  std::map<std::string, IsoClass> by_key;
  for (auto& c : enumerate_stable_graphs(g, n, budget)) by_key.emplace(c.key, std::move(c));
  assemble(p, std::move(by_key), budget.jobs, [](const IsoClass& c, int e) {
    return canonical_key(contract(c.graph, EdgeSet::of(c.graph.num_edges(), {e})).target);
  });
  return p;
}

Poset build_cyclic_poset(int g, int n, const Budget& budget) {
  Poset p = empty_poset(PosetKind::cyclic, g, n);
  if (!in_range(g, n)) return p;
  const auto graphs = enumerate_stable_graphs(g, n, budget);
  std::vector<std::vector<IsoClass>> per_graph(graphs.size());
  detail::parallel_for(graphs.size(), budget.jobs, [&](std::size_t i) {
    const Graph& gr = graphs[i].graph;
    for (const auto& cyc : enumerate_cyclic(gr, budget.cycle_cap)) {
      IsoClass c = graph_class(gr, canonical_key(gr, cyc));
      c.cycle = cyc;
      c.graph_class = static_cast<int>(i);
      per_graph[i].push_back(std::move(c));
    }
  });
  std::map<std::string, IsoClass> by_key;
  for (auto& v : per_graph) {
    for (auto& c : v) by_key.try_emplace(c.key, std::move(c));
  }
  assemble(p, std::move(by_key), budget.jobs, [](const IsoClass& c, int e) {
    const Contraction k = contract(c.graph, EdgeSet::of(c.graph.num_edges(), {e}));
    return canonical_key(k.target, push_cycle(k, c.cycle));
  });
  return p;
}

Poset build_spin_poset(int g, int n, const Budget& budget) {
  Poset p = empty_poset(PosetKind::spin, g, n);
  if (!in_range(g, n)) return p;
  const auto graphs = enumerate_stable_graphs(g, n, budget);
  std::vector<std::vector<IsoClass>> per_graph(graphs.size());
  detail::parallel_for(graphs.size(), budget.jobs, [&](std::size_t i) {
    const Graph& gr = graphs[i].graph;
    for (const auto& s : enumerate_spin(gr, budget.cycle_cap).all()) {
      IsoClass c = graph_class(gr, canonical_key(gr, s));
      c.cycle = s.cycle();
      c.spin = s;
      c.parity = s.parity();
      c.graph_class = static_cast<int>(i);
      per_graph[i].push_back(std::move(c));
    }
  });
  std::map<std::string, IsoClass> by_key;
  for (auto& v : per_graph) {
    for (auto& c : v) by_key.try_emplace(c.key, std::move(c));
  }
  assemble(p, std::move(by_key), budget.jobs, [](const IsoClass& c, int e) {
    const Contraction k = contract(c.graph, EdgeSet::of(c.graph.num_edges(), {e}));
    return canonical_key(k.target, push_spin(k, c.spin));
  });
  return p;
}

Poset build_poset(PosetKind kind, int g, int n, const Budget& budget) {
  switch (kind) {
    case PosetKind::graphs: return build_graph_poset(g, n, budget);
    case PosetKind::cyclic: return build_cyclic_poset(g, n, budget);
    case PosetKind::spin: return build_spin_poset(g, n, budget);
  }
  throw InputError("unknown poset kind");
}

PosetStats poset_stats(const Poset& p) {
  PosetStats st;
  const int nn = static_cast<int>(p.nodes.size());
  if (nn == 0) return st;
  const int top = p.max_rank();

  detail::DisjointSets ds(nn);
  std::vector<int> ups(nn, 0);
  std::vector<int> downs(nn, 0);
  for (auto [u, l] : p.covers) {
    ds.unite(u, l);
    ++ups[l];
    ++downs[u];
    if (p.nodes[u].rank != p.nodes[l].rank + 1) {
      st.graded = false;
      st.failures.push_back("cover " + p.nodes[u].key + " > " + p.nodes[l].key +
                            " skips a rank");
    }
  }
  const auto labels = ds.labels();
  st.components = nn == 0 ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;

  std::vector<int> parity_mask(st.components, 0);
  std::vector<int> minima(st.components, 0);
  for (int i = 0; i < nn; ++i) {
    const IsoClass& c = p.nodes[i];
    ++st.rank_histogram[c.rank];
    if (c.parity >= 0) parity_mask[labels[i]] |= 1 << c.parity;
    if (c.rank == 0) ++minima[labels[i]];
    if (c.rank > 0 && downs[i] == 0) {
      st.graded = false;
      st.failures.push_back("node " + c.key + " of rank " + std::to_string(c.rank) +
                            " has nothing below it");
    }
    if (c.rank < top && ups[i] == 0) {
      st.pure = false;
      st.failures.push_back("node " + c.key + " of rank " + std::to_string(c.rank) +
                            " is maximal below rank " + std::to_string(top));
    }
    const bool three_regular = classify(c.graph).three_regular;
    if (three_regular != (c.rank == top)) {
      st.maximal_are_three_regular = false;
      st.failures.push_back("node " + c.key + ": rank " + std::to_string(c.rank) +
                            (three_regular ? " but 3-regular" : " but not 3-regular"));
    }
  }
  for (int c = 0; c < st.components; ++c) {
    if (minima[c] != 1) {
      st.minimum_ok = false;
      st.failures.push_back("component " + std::to_string(c) + " has " +
                            std::to_string(minima[c]) + " rank-0 nodes");
    }
    if (parity_mask[c] == 1) ++st.even_components;
    if (parity_mask[c] == 2) ++st.odd_components;
    if (parity_mask[c] == 3) {
      st.parity_pure = false;
      st.failures.push_back("component " + std::to_string(c) + " mixes parities");
    }
  }

  if (p.kind == PosetKind::spin) {
    const int want = p.g > 0 ? 2 : 1;
    if (st.components != want) {
      st.failures.push_back("spin poset has " + std::to_string(st.components) +
                            " components, expected " + std::to_string(want));
    }
    if (p.g > 0 && (st.even_components != 1 || st.odd_components != 1)) {
      st.failures.push_back("components do not coincide with parity classes");
    }
  } else if (st.components != 1) {
    st.failures.push_back(std::string(to_string(p.kind)) + " poset is not connected (" +
                          std::to_string(st.components) + " components)");
  }
  return st;
}

std::vector<std::string> forgetful_failures(const Poset& spin, const Poset& cyclic,
                                            const Poset& graphs) {
  std::vector<std::string> out;
  auto index_of = [](const Poset& p) {
    std::unordered_map<std::string, int> m;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) m.emplace(p.nodes[i].key, i);
    return m;
  };
  const auto cyc_index = index_of(cyclic);
  const auto gr_index = index_of(graphs);
  const std::set<std::pair<int, int>> cyc_covers(cyclic.covers.begin(),
                                                 cyclic.covers.end());
  const std::set<std::pair<int, int>> gr_covers(graphs.covers.begin(),
                                                graphs.covers.end());

  std::vector<int> spin_to_cyc(spin.nodes.size(), -1);
  std::vector<char> cyc_hit(cyclic.nodes.size(), 0);
  for (std::size_t i = 0; i < spin.nodes.size(); ++i) {
    const IsoClass& c = spin.nodes[i];
    if (c.parity != 0) continue;
    auto it = cyc_index.find(canonical_key(c.graph, c.cycle));
    if (it == cyc_index.end()) {
      out.push_back("even spin class " + c.key + " has no image in [C]");
      continue;
    }
    spin_to_cyc[i] = it->second;
    cyc_hit[it->second] = 1;
  }
  for (std::size_t j = 0; j < cyclic.nodes.size(); ++j) {
    if (!cyc_hit[j]) out.push_back("[SP+] -> [C] misses " + cyclic.nodes[j].key);
  }
  for (auto [u, l] : spin.covers) {
    if (spin_to_cyc[u] < 0 || spin_to_cyc[l] < 0) continue;
    if (!cyc_covers.count({spin_to_cyc[u], spin_to_cyc[l]})) {
      out.push_back("cover " + spin.nodes[u].key + " > " + spin.nodes[l].key +
                    " does not map to a cover of [C]");
    }
  }

  std::vector<int> cyc_to_gr(cyclic.nodes.size(), -1);
  std::vector<char> gr_hit(graphs.nodes.size(), 0);
  for (std::size_t j = 0; j < cyclic.nodes.size(); ++j) {
    auto it = gr_index.find(canonical_key(cyclic.nodes[j].graph));
    if (it == gr_index.end()) {
      out.push_back("cyclic class " + cyclic.nodes[j].key + " has no image in S");
      continue;
    }
    cyc_to_gr[j] = it->second;
    gr_hit[it->second] = 1;
  }
  for (std::size_t k = 0; k < graphs.nodes.size(); ++k) {
    if (!gr_hit[k]) out.push_back("[C] -> S misses " + graphs.nodes[k].key);
  }
  for (auto [u, l] : cyclic.covers) {
    if (cyc_to_gr[u] < 0 || cyc_to_gr[l] < 0) continue;
    if (!gr_covers.count({cyc_to_gr[u], cyc_to_gr[l]})) {
      out.push_back("cover " + cyclic.nodes[u].key + " > " + cyclic.nodes[l].key +
                    " does not map to a cover of S");
    }
  }
  return out;
}

PosetOrder::PosetOrder(const Poset& p) {
  const std::size_t nn = p.nodes.size();
  const std::size_t words = (nn + 63) / 64;
  below_.assign(nn, std::vector<std::uint64_t>(words, 0));
  std::vector<std::vector<int>> lower(nn);
  for (auto [u, l] : p.covers) lower[u].push_back(l);
  // Nodes are sorted by rank and covers go down one rank.
  for (std::size_t i = 0; i < nn; ++i) {
    below_[i][i / 64] |= std::uint64_t{1} << (i % 64);
    for (int l : lower[i]) {
      for (std::size_t w = 0; w < words; ++w) below_[i][w] |= below_[l][w];
    }
  }
}

bool PosetOrder::geq(int upper, int lower) const {
  return (below_.at(upper)[lower / 64] >> (lower % 64)) & 1U;
}

}  // namespace spinmod
