#pragma once

// Brute-force references. Nothing here calls canonical_key, the refinement
// search or the automorphism backtracking.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "spinmod/graph.hpp"

namespace oracle {

using spinmod::Graph;

inline int multiplicity(const Graph& g, int u, int v) {
  int m = 0;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(e);
    if ((a == u && b == v) || (a == v && b == u)) ++m;
  }
  return m;
}

// Every vertex permutation that matches weights, leg placement and edge
// multiplicities.
inline std::vector<std::vector<int>> vertex_isos(const Graph& a, const Graph& b) {
  std::vector<std::vector<int>> out;
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.num_legs() != b.num_legs()) {
    return out;
  }
  const int nv = a.num_vertices();
  std::vector<int> sigma(nv);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < nv && ok; ++v) ok = a.weight(v) == b.weight(sigma[v]);
    for (int i = 0; i < a.num_legs() && ok; ++i) {
      ok = sigma[a.endpoint(a.legs()[i])] == b.endpoint(b.legs()[i]);
    }
    for (int u = 0; u < nv && ok; ++u) {
      for (int v = u; v < nv && ok; ++v) {
        ok = multiplicity(a, u, v) == multiplicity(b, sigma[u], sigma[v]);
      }
    }
    if (ok) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) { return !vertex_isos(a, b).empty(); }

// Edge bijections a -> b compatible with a vertex permutation.
inline void for_each_edge_map(const Graph& a, const Graph& b, const std::vector<int>& sigma,
                              const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> beta(a.num_edges(), -1);
  std::vector<char> used(b.num_edges(), 0);
  std::function<void(int)> rec = [&](int e) {
    if (e == a.num_edges()) {
      visit(beta);
      return;
    }
    auto [u, v] = a.ends(e);
    const int su = sigma[u];
    const int sv = sigma[v];
    for (int f = 0; f < b.num_edges(); ++f) {
      if (used[f]) continue;
      auto [x, y] = b.ends(f);
      if (!((x == su && y == sv) || (x == sv && y == su))) continue;
      used[f] = 1;
      beta[e] = f;
      rec(e + 1);
      used[f] = 0;
    }
  };
  rec(0);
}

// Even-degree subsets by exhausting all 2^|E| masks.
inline std::vector<std::uint64_t> kernel(const Graph& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.num_edges()); ++m) {
    std::vector<int> deg(g.num_vertices(), 0);
    for (int e = 0; e < g.num_edges(); ++e) {
      if (!((m >> e) & 1U)) continue;
      auto [u, v] = g.ends(e);
      ++deg[u];
      ++deg[v];
    }
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; })) out.push_back(m);
  }
  return out;
}

// Components of (V, P) as labels ordered by smallest vertex, with genus.
struct Comps {
  std::vector<int> label;
  std::vector<int> genus;
};

inline Comps components(const Graph& g, std::uint64_t p) {
  const int nv = g.num_vertices();
  std::vector<int> label(nv, -1);
  Comps c;
  for (int s = 0; s < nv; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(c.genus.size());
    std::vector<int> stack{s};
    label[s] = id;
    int verts = 0;
    int weight = 0;
    int edges = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++verts;
      weight += g.weight(v);
      for (int e = 0; e < g.num_edges(); ++e) {
        if (!((p >> e) & 1U)) continue;
        auto [a, b] = g.ends(e);
        if (a != v && b != v) continue;
        const int w = a == v ? b : a;
        if (label[w] < 0) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
    for (int e = 0; e < g.num_edges(); ++e) {
      if (((p >> e) & 1U) && label[g.ends(e).first] == id) ++edges;
    }
    c.genus.push_back(weight + edges - verts + 1);
  }
  c.label = std::move(label);
  return c;
}

struct Spin {
  std::uint64_t p = 0;
  std::vector<int> sign;
  int parity() const { return std::accumulate(sign.begin(), sign.end(), 0) % 2; }
};

inline std::vector<Spin> spins(const Graph& g) {
  std::vector<Spin> out;
  for (auto p : kernel(g)) {
    const Comps c = components(g, p);
    const int nc = static_cast<int>(c.genus.size());
    for (int mask = 0; mask < (1 << nc); ++mask) {
      Spin s{p, std::vector<int>(nc, 0)};
      bool ok = true;
      for (int i = 0; i < nc; ++i) {
        s.sign[i] = (mask >> i) & 1;
        if (s.sign[i] && c.genus[i] == 0) ok = false;
      }
      if (ok) out.push_back(std::move(s));
    }
  }
  return out;
}

inline bool spin_isomorphic(const Graph& a, const Spin& sa, const Graph& b, const Spin& sb) {
  if (sa.parity() != sb.parity()) return false;
  const Comps ca = components(a, sa.p);
  const Comps cb = components(b, sb.p);
  for (const auto& sigma : vertex_isos(a, b)) {
    bool found = false;
    for_each_edge_map(a, b, sigma, [&](const std::vector<int>& beta) {
      if (found) return;
      std::uint64_t image = 0;
      for (int e = 0; e < a.num_edges(); ++e) {
        if ((sa.p >> e) & 1U) image |= std::uint64_t{1} << beta[e];
      }
      if (image != sb.p) return;
      for (int v = 0; v < a.num_vertices(); ++v) {
        if (sa.sign[ca.label[v]] != sb.sign[cb.label[sigma[v]]]) return;
      }
      found = true;
    });
    if (found) return true;
  }
  return false;
}

// Number of distinct (vertex, edge) permutation pairs that are automorphisms.
inline std::size_t vertex_edge_automorphisms(const Graph& g) {
  std::size_t count = 0;
  for (const auto& sigma : vertex_isos(g, g)) {
    for_each_edge_map(g, g, sigma, [&](const std::vector<int>&) { ++count; });
  }
  return count;
}

// Maps on V ∪ H. Half-edges of a non-loop edge follow its ends, so each
// (vertex, edge) automorphism extends in 2^{loops} ways.
inline std::size_t half_edge_automorphisms(const Graph& g) {
  int loops = 0;
  for (int e = 0; e < g.num_edges(); ++e) loops += g.is_loop(e);
  return vertex_edge_automorphisms(g) << loops;
}

// All stable graphs of genus g with n legs up to brute-force isomorphism.
inline std::vector<Graph> stable_graphs(int g, int n) {
  std::vector<Graph> found;
  if (2 * g - 2 + n <= 0) return found;
  for (int nv = 1; nv <= 2 * g - 2 + n; ++nv) {
    std::vector<int> w(nv, 0);
    std::function<void(int, int)> weights = [&](int i, int sum) {
      if (i < nv) {
        for (int x = 0; x + sum <= g; ++x) {
          w[i] = x;
          weights(i + 1, sum + x);
        }
        return;
      }
      const int ne = g - sum + nv - 1;
      if (ne < 0) return;
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < nv; ++a) {
        for (int b = a; b < nv; ++b) pairs.emplace_back(a, b);
      }
      // Multisets of ne pairs as nondecreasing index sequences.
      std::vector<int> idx(ne, 0);
      std::vector<int> legs(n, 0);
      std::function<void(int, int)> edges = [&](int k, int lo) {
        if (k == ne) {
          for (;;) {
            std::vector<std::pair<int, int>> el;
            for (int i : idx) el.push_back(pairs[i]);
            Graph gr = Graph::from_edges(w, el, legs);
            if (spinmod::is_stable(gr) && spinmod::genus(gr) == g) {
              bool dup = false;
              for (const auto& f : found) {
                if (isomorphic(f, gr)) {
                  dup = true;
                  break;
                }
              }
              if (!dup) found.push_back(gr);
            }
            int j = n - 1;
            while (j >= 0 && legs[j] == nv - 1) legs[j--] = 0;
            if (j < 0) break;
            ++legs[j];
          }
          return;
        }
        for (int i = lo; i < static_cast<int>(pairs.size()); ++i) {
          idx[k] = i;
          edges(k + 1, i);
        }
      };
      edges(0, 0);
    };
    weights(0, 0);
  }
  return found;
}

// Spin classes over the given graphs, as (graph index, spin) pairs.
inline std::vector<std::pair<int, Spin>> spin_classes(const std::vector<Graph>& graphs) {
  std::vector<std::pair<int, Spin>> out;
  for (int i = 0; i < static_cast<int>(graphs.size()); ++i) {
    std::vector<Spin> reps;
    for (auto& s : spins(graphs[i])) {
      bool dup = false;
      for (const auto& r : reps) {
        if (spin_isomorphic(graphs[i], r, graphs[i], s)) {
          dup = true;
          break;
        }
      }
      if (!dup) reps.push_back(s);
    }
    for (auto& r : reps) out.emplace_back(i, r);
  }
  return out;
}

}  // namespace oracle
