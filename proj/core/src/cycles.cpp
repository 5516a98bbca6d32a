#include "spinmod/cycles.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

#include "spinmod/detail/disjoint_sets.hpp"
#include "spinmod/error.hpp"

namespace spinmod {

namespace {

void check_carrier(const Graph& g, const EdgeSet& f) {
  if (f.size() != g.num_edges()) {
    throw InputError("edge set of length " + std::to_string(f.size()) +
                     " used with a graph of " + std::to_string(g.num_edges()) +
                     " edges");
  }
}

bool all_degrees_even(const Graph& g, const EdgeSet& f) {
  std::vector<int> deg(g.num_vertices(), 0);
  for (int e : f.indices()) {
    auto [u, v] = g.ends(e);
    ++deg[u];
    ++deg[v];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

}  // namespace

VertexMask boundary(const Graph& g, const EdgeSet& f) {
  check_carrier(g, f);
  if (g.num_vertices() > 64) throw ResourceError("more than 64 vertices");
  VertexMask out = 0;
  for (int e : f.indices()) {
    auto [u, v] = g.ends(e);
    out ^= VertexMask{1} << u;
    out ^= VertexMask{1} << v;
  }
  return out;
}

bool is_cyclic(const Graph& g, const EdgeSet& f) { return boundary(g, f) == 0; }

std::vector<EdgeSet> cycle_basis(const Graph& g) {
  const int nv = g.num_vertices();
  const int ne = g.num_edges();

  // Iterative DFS; parent_edge[v] is the forest edge used to reach v.
  std::vector<int> parent_edge(nv, -1);
  std::vector<int> parent(nv, -1);
  std::vector<int> depth(nv, -1);
  std::vector<bool> in_forest(ne, false);
  std::vector<std::vector<int>> incident(nv);
  for (int e = 0; e < ne; ++e) {
    auto [u, v] = g.ends(e);
    incident[u].push_back(e);
    if (v != u) incident[v].push_back(e);
  }
  for (int root = 0; root < nv; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int e : incident[x]) {
        auto [u, v] = g.ends(e);
        const int y = u == x ? v : u;
        if (depth[y] >= 0) continue;
        depth[y] = depth[x] + 1;
        parent[y] = x;
        parent_edge[y] = e;
        in_forest[e] = true;
        stack.push_back(y);
      }
    }
  }

  std::vector<EdgeSet> basis;
  for (int e = 0; e < ne; ++e) {
    if (in_forest[e]) continue;
    EdgeSet c(ne);
    c.insert(e);
    auto [u, v] = g.ends(e);
    while (u != v) {
      if (depth[u] < depth[v]) std::swap(u, v);
      c.insert(parent_edge[u]);
      u = parent[u];
    }
    basis.push_back(c);
  }
  return basis;
}

std::vector<EdgeSet> enumerate_cyclic(const Graph& g, int cap) {
  const auto basis = cycle_basis(g);
  const int b = static_cast<int>(basis.size());
  if (b > cap) {
    throw ResourceError("cycle rank " + std::to_string(b) +
                        " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::vector<EdgeSet> out;
  out.reserve(std::size_t{1} << b);
  EdgeSet cur = g.no_edges();
  out.push_back(cur);
  // Gray code walk: one basis vector toggled per step.
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << b); ++i) {
    cur = cur ^ basis[std::countr_zero(i)];
    out.push_back(cur);
  }
#ifndef NDEBUG
  for (const auto& f : out) assert(all_degrees_even(g, f));
#else
  (void)all_degrees_even;
#endif
  std::sort(out.begin(), out.end());
  return out;
}

int PbarComponents::c_plus() const {
  return static_cast<int>(
      std::count_if(genus.begin(), genus.end(), [](int x) { return x > 0; }));
}

PbarComponents pbar_components(const Graph& g, const EdgeSet& p) {
  check_carrier(g, p);
  detail::DisjointSets ds(g.num_vertices());
  for (int e : p.indices()) {
    auto [u, v] = g.ends(e);
    ds.unite(u, v);
  }
  PbarComponents out;
  out.component_of = ds.labels();
  int nc = 0;
  for (int c : out.component_of) nc = std::max(nc, c + 1);
  std::vector<int> nverts(nc, 0);
  std::vector<int> nedges(nc, 0);
  out.genus.assign(nc, 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    ++nverts[out.component_of[v]];
    out.genus[out.component_of[v]] += g.weight(v);
  }
  for (int e : p.indices()) ++nedges[out.component_of[g.ends(e).first]];
  for (int c = 0; c < nc; ++c) out.genus[c] += nedges[c] - nverts[c] + 1;
  return out;
}

PbarDecomposition pbar_decompose(const Graph& g, const EdgeSet& p) {
  check_carrier(g, p);
  if (!is_cyclic(g, p)) {
    throw DomainError("edge set " + p.to_hex() + " is not cyclic");
  }
  const Graph pbar = remove_edges(g, p.complement(), /*open=*/true);
  PbarDecomposition out;
  out.component_of = pbar.component_labels();
  for (auto& piece : connected_components(pbar)) {
    const int gen = genus(piece.graph);
    if (gen > 0) ++out.c_plus;
    out.components.push_back({std::move(piece), gen});
  }
  return out;
}

}  // namespace spinmod
