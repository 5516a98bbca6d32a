#include "spinmod/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "spinmod/canonical.hpp"
#include "spinmod/detail/colored.hpp"
#include "spinmod/detail/disjoint_sets.hpp"
#include "spinmod/error.hpp"

namespace spinmod {

Contraction contract(const Graph& g, const EdgeSet& f) {
  if (f.size() != g.num_edges()) {
    throw InputError("edge set does not belong to this graph");
  }
  Contraction c;
  c.source = g;
  c.contracted = f;

  detail::DisjointSets ds(g.num_vertices());
  for (int e : f.indices()) {
    auto [u, v] = g.ends(e);
    ds.unite(u, v);
  }
  c.vertex_map = ds.labels();
  int nt = 0;
  for (int x : c.vertex_map) nt = std::max(nt, x + 1);

  // Target weight: genus of the preimage subgraph.
  std::vector<Vertex> vertices(nt);
  std::vector<int> nverts(nt, 0);
  std::vector<int> nedges(nt, 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    vertices[c.vertex_map[v]].weight += g.weight(v);
    ++nverts[c.vertex_map[v]];
  }
  for (int e : f.indices()) ++nedges[c.vertex_map[g.ends(e).first]];
  for (int t = 0; t < nt; ++t) vertices[t].weight += nedges[t] - nverts[t] + 1;

  c.half_edge_map.assign(g.num_half_edges(), -1);
  int next = 0;
  for (int h = 0; h < g.num_half_edges(); ++h) {
    const int e = g.edge_of(h);
    if (e >= 0 && f.contains(e)) continue;
    c.half_edge_map[h] = next++;
  }
  std::vector<int> endpoint(next);
  std::vector<int> involution(next);
  for (int h = 0; h < g.num_half_edges(); ++h) {
    const int t = c.half_edge_map[h];
    if (t < 0) continue;
    endpoint[t] = c.vertex_map[g.endpoint(h)];
    involution[t] = c.half_edge_map[g.involution(h)];
  }
  std::vector<int> legs;
  for (int h : g.legs()) legs.push_back(c.half_edge_map[h]);
  c.target = Graph(std::move(vertices), std::move(endpoint),
                   std::move(involution), std::move(legs));

  c.edge_map.assign(g.num_edges(), -1);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!f.contains(e)) c.edge_map[e] = c.target.edge_of(c.half_edge_map[g.edge(e).h0]);
  }
  return c;
}

Contraction compose(const Contraction& first, const Contraction& second) {
  if (!(first.target == second.source)) {
    throw InputError("contractions do not compose: target and source differ");
  }
  Contraction c;
  c.source = first.source;
  c.contracted = first.contracted;
  for (int e = 0; e < first.source.num_edges(); ++e) {
    const int mid = first.edge_map[e];
    if (mid >= 0 && second.contracted.contains(mid)) c.contracted.insert(e);
  }
  c.target = second.target;
  c.vertex_map.resize(first.vertex_map.size());
  for (std::size_t v = 0; v < first.vertex_map.size(); ++v) {
    c.vertex_map[v] = second.vertex_map[first.vertex_map[v]];
  }
  c.edge_map.resize(first.edge_map.size());
  for (std::size_t e = 0; e < first.edge_map.size(); ++e) {
    const int mid = first.edge_map[e];
    c.edge_map[e] = mid < 0 ? -1 : second.edge_map[mid];
  }
  c.half_edge_map.resize(first.half_edge_map.size());
  for (std::size_t h = 0; h < first.half_edge_map.size(); ++h) {
    const int mid = first.half_edge_map[h];
    c.half_edge_map[h] = mid < 0 ? -1 : second.half_edge_map[mid];
  }
  return c;
}

EdgeSet push_edges(const Contraction& c, const EdgeSet& f) {
  if (f.size() != c.source.num_edges()) {
    throw InputError("edge set does not belong to the contraction source");
  }
  EdgeSet out = c.target.no_edges();
  for (int e : f.indices()) {
    if (c.edge_map[e] >= 0) out.insert(c.edge_map[e]);
  }
  return out;
}

VertexMask push_vertices(const Contraction& c, VertexMask m) {
  VertexMask out = 0;
  for (int v = 0; v < c.source.num_vertices(); ++v) {
    if ((m >> v) & 1U) out ^= VertexMask{1} << c.vertex_map[v];
  }
  return out;
}

Divisor push_divisor(const Contraction& c, const Divisor& d) {
  Divisor out;
  out.values.assign(c.target.num_vertices(), 0);
  for (int v = 0; v < c.source.num_vertices(); ++v) {
    out.values[c.vertex_map[v]] += d.values.at(v);
  }
  return out;
}

EdgeSet push_cycle(const Contraction& c, const EdgeSet& p) {
  if (!is_cyclic(c.source, p)) {
    throw DomainError("cannot push non-cyclic set " + p.to_hex());
  }
  return push_edges(c, p);
}

SpinStructure push_spin(const Contraction& c, const SpinStructure& s) {
  const EdgeSet p2 = push_cycle(c, s.cycle());
  const auto from = pbar_components(c.source, s.cycle());
  const auto to = pbar_components(c.target, p2);
  std::vector<std::uint8_t> sign(to.count(), 0);
  std::vector<int> representative(from.count(), -1);
  for (int v = 0; v < c.source.num_vertices(); ++v) {
    if (representative[from.component_of[v]] < 0) {
      representative[from.component_of[v]] = v;
    }
  }
  for (int k = 0; k < from.count(); ++k) {
    const int target = to.component_of[c.vertex_map[representative[k]]];
    sign[target] ^= s.sign()[k];
  }
  return SpinStructure(c.target, p2, std::move(sign));
}

bool is_isomorphism(const Graph& from, const Graph& to, const GraphMap& m) {
  if (from.num_vertices() != to.num_vertices() ||
      from.num_half_edges() != to.num_half_edges() ||
      from.num_legs() != to.num_legs()) {
    return false;
  }
  if (static_cast<int>(m.vertex.size()) != from.num_vertices() ||
      static_cast<int>(m.half_edge.size()) != from.num_half_edges()) {
    return false;
  }
  std::vector<bool> hit_v(to.num_vertices(), false);
  for (int v = 0; v < from.num_vertices(); ++v) {
    const int x = m.vertex[v];
    if (x < 0 || x >= to.num_vertices() || hit_v[x]) return false;
    hit_v[x] = true;
    if (from.weight(v) != to.weight(x)) return false;
  }
  std::vector<bool> hit_h(to.num_half_edges(), false);
  for (int h = 0; h < from.num_half_edges(); ++h) {
    const int x = m.half_edge[h];
    if (x < 0 || x >= to.num_half_edges() || hit_h[x]) return false;
    hit_h[x] = true;
    if (to.endpoint(x) != m.vertex[from.endpoint(h)]) return false;
    if (to.involution(x) != m.half_edge[from.involution(h)]) return false;
  }
  for (int i = 0; i < from.num_legs(); ++i) {
    if (m.half_edge[from.legs()[i]] != to.legs()[i]) return false;
  }
  return true;
}

std::vector<int> edge_permutation(const Graph& g, const GraphMap& m) {
  std::vector<int> out(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    out[e] = g.edge_of(m.half_edge[g.edge(e).h0]);
  }
  return out;
}

EdgeSet act(const Graph& g, const GraphMap& m, const EdgeSet& f) {
  EdgeSet out = g.no_edges();
  for (int e : f.indices()) out.insert(g.edge_of(m.half_edge[g.edge(e).h0]));
  return out;
}

SpinStructure act(const Graph& g, const GraphMap& m, const SpinStructure& s) {
  const EdgeSet p2 = act(g, m, s.cycle());
  const auto from = pbar_components(g, s.cycle());
  const auto to = pbar_components(g, p2);
  std::vector<std::uint8_t> sign(to.count(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    sign[to.component_of[m.vertex[v]]] = s.sign()[from.component_of[v]];
  }
  return SpinStructure(g, p2, std::move(sign));
}

GraphMap compose(const GraphMap& outer, const GraphMap& inner) {
  GraphMap out;
  out.vertex.resize(inner.vertex.size());
  out.half_edge.resize(inner.half_edge.size());
  for (std::size_t v = 0; v < inner.vertex.size(); ++v) {
    out.vertex[v] = outer.vertex[inner.vertex[v]];
  }
  for (std::size_t h = 0; h < inner.half_edge.size(); ++h) {
    out.half_edge[h] = outer.half_edge[inner.half_edge[h]];
  }
  return out;
}

AutGroup::AutGroup(const Graph& g, std::vector<GraphMap> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  std::set<std::pair<std::vector<int>, std::vector<int>>> ve;
  std::set<std::vector<int>> e_only;
  for (const auto& m : elements_) {
    auto perm = edge_permutation(g, m);
    ve.emplace(m.vertex, perm);
    e_only.insert(std::move(perm));
  }
  ve_order_ = ve.size();
  edge_order_ = e_only.size();
}

namespace {

// Every extension of a vertex automorphism sigma to half-edges: parallel
// edges between a pair are permuted arbitrarily, loops additionally flip.
void extend_all(const Graph& g, const std::vector<int>& sigma,
                std::vector<GraphMap>& out) {
  std::map<std::pair<int, int>, std::vector<int>> bundles;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.ends(e);
    bundles[{std::min(u, v), std::max(u, v)}].push_back(e);
  }
  struct Bundle {
    int u, v;                 // source ends, u <= v
    std::vector<int> from;    // source edges
    std::vector<int> to;      // target edges
  };
  std::vector<Bundle> list;
  for (const auto& [key, edges] : bundles) {
    const int su = sigma[key.first];
    const int sv = sigma[key.second];
    list.push_back({key.first, key.second, edges,
                    bundles.at({std::min(su, sv), std::max(su, sv)})});
  }

  GraphMap m;
  m.vertex = sigma;
  m.half_edge.assign(g.num_half_edges(), -1);
  for (int h : g.legs()) m.half_edge[h] = h;

  auto half_at = [&](int e, int v) {
    const auto& ed = g.edge(e);
    return g.endpoint(ed.h0) == v ? ed.h0 : ed.h1;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (out.size() > kMaxGroupElements) {
      throw ResourceError("automorphism group exceeds the element cap");
    }
    if (k == list.size()) {
      out.push_back(m);
      return;
    }
    const Bundle& b = list[k];
    std::vector<int> perm = b.to;
    std::sort(perm.begin(), perm.end());
    const bool loop = b.u == b.v;
    const int count = static_cast<int>(b.from.size());
    do {
      const int flips = loop ? (1 << count) : 1;
      for (int flip = 0; flip < flips; ++flip) {
        for (int i = 0; i < count; ++i) {
          const int e = b.from[i];
          const int f = perm[i];
          const auto& ed = g.edge(e);
          const auto& fd = g.edge(f);
          if (loop) {
            const bool swap = (flip >> i) & 1;
            m.half_edge[ed.h0] = swap ? fd.h1 : fd.h0;
            m.half_edge[ed.h1] = swap ? fd.h0 : fd.h1;
          } else {
            m.half_edge[half_at(e, b.u)] = half_at(f, sigma[b.u]);
            m.half_edge[half_at(e, b.v)] = half_at(f, sigma[b.v]);
          }
        }
        rec(k + 1);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(0);
}

}  // namespace

AutGroup automorphisms(const Graph& g) {
  const auto c = detail::make_colored(g, nullptr, {});
  std::vector<GraphMap> elements;
  detail::for_each_vertex_map(c, c, [&](const std::vector<int>& sigma) {
    extend_all(g, sigma, elements);
    return true;
  });
  return AutGroup(g, std::move(elements));
}

AutGroup automorphisms(const Graph& g, const SpinStructure& s) {
  const AutGroup full = automorphisms(g);
  std::vector<GraphMap> keep;
  for (const auto& m : full.elements()) {
    if (act(g, m, s) == s) keep.push_back(m);
  }
  return AutGroup(g, std::move(keep));
}

AutGroup pbar_subgroup(const Graph& g, const EdgeSet& p) {
  const AutGroup full = automorphisms(g);
  const auto comps = pbar_components(g, p);
  const EdgeSet r = p.complement();
  std::vector<GraphMap> keep;
  for (const auto& m : full.elements()) {
    bool ok = true;
    for (int e : r.indices()) {
      const auto& ed = g.edge(e);
      if (m.half_edge[ed.h0] != ed.h0 || m.half_edge[ed.h1] != ed.h1) ok = false;
    }
    for (int v = 0; v < g.num_vertices() && ok; ++v) {
      ok = comps.component_of[m.vertex[v]] == comps.component_of[v];
    }
    if (ok) keep.push_back(m);
  }
  return AutGroup(g, std::move(keep));
}

AutGroup quotient_image(const Graph& g, const EdgeSet& p, const AutGroup& sub) {
  const Contraction q = contract(g, p);
  std::vector<int> rep(q.target.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (rep[q.vertex_map[v]] < 0) rep[q.vertex_map[v]] = v;
  }
  std::vector<int> preimage(q.target.num_half_edges(), -1);
  for (int h = 0; h < g.num_half_edges(); ++h) {
    if (q.half_edge_map[h] >= 0) preimage[q.half_edge_map[h]] = h;
  }
  std::vector<GraphMap> images;
  for (const auto& m : sub.elements()) {
    if (act(g, m, p) != p) {
      throw DomainError("subgroup does not stabilize P");
    }
    GraphMap im;
    im.vertex.resize(q.target.num_vertices());
    for (int t = 0; t < q.target.num_vertices(); ++t) {
      im.vertex[t] = q.vertex_map[m.vertex[rep[t]]];
    }
    im.half_edge.resize(q.target.num_half_edges());
    for (int t = 0; t < q.target.num_half_edges(); ++t) {
      im.half_edge[t] = q.half_edge_map[m.half_edge[preimage[t]]];
    }
    if (!is_isomorphism(q.target, q.target, im)) {
      throw VerificationFailure("induced map on G/P is not an automorphism");
    }
    images.push_back(std::move(im));
  }
  return AutGroup(q.target, std::move(images));
}

AutSequenceReport aut_sequence(const Graph& g, const SpinStructure& s) {
  const EdgeSet& p = s.cycle();
  const AutGroup spin = automorphisms(g, s);
  const Graph pbar = remove_edges(g, p.complement(), /*open=*/true);
  const AutGroup pbar_group = automorphisms(pbar);
  const AutGroup image = quotient_image(g, p, spin);
  const Contraction q = contract(g, p);

  // Kernel of the quotient map, as maps on G.
  std::vector<GraphMap> kernel;
  for (const auto& m : spin.elements()) {
    bool trivial = true;
    for (int v = 0; v < g.num_vertices() && trivial; ++v) {
      trivial = q.vertex_map[m.vertex[v]] == q.vertex_map[v];
    }
    for (int h = 0; h < g.num_half_edges() && trivial; ++h) {
      if (q.half_edge_map[h] >= 0) trivial = m.half_edge[h] == h;
    }
    if (trivial) kernel.push_back(m);
  }
  std::sort(kernel.begin(), kernel.end());

  AutSequenceReport r;
  // P̄ shares vertex and half-edge ids with G.
  r.kernel_matches = kernel == pbar_group.elements();

  // Induced actions of Aut(P̄) on G's vertices and on E(P̄) = P.
  std::set<std::pair<std::vector<int>, std::vector<int>>> pbar_ve;
  std::set<std::vector<int>> pbar_e;
  for (const auto& m : pbar_group.elements()) {
    auto perm = edge_permutation(pbar, m);
    pbar_ve.emplace(m.vertex, perm);
    pbar_e.insert(std::move(perm));
  }

  r.half_edge = {spin.order(), pbar_group.order(), image.order()};
  r.vertex_edge = {spin.vertex_edge_order(), pbar_ve.size(),
                   image.vertex_edge_order()};
  r.edge = {spin.edge_order(), pbar_e.size(), image.edge_order()};
  return r;
}

std::optional<OrderWitness> order_test(const SpinGraph& upper,
                                       const SpinGraph& lower) {
  const Graph& a = upper.graph;
  const Graph& b = lower.graph;
  if (genus(a) != genus(b) || a.num_legs() != b.num_legs()) return std::nullopt;
  if (upper.spin.parity() != lower.spin.parity()) return std::nullopt;
  const int k = a.num_edges() - b.num_edges();
  if (k < 0) return std::nullopt;
  const std::string target_key = canonical_key(lower);
  const std::string target_graph_key = canonical_key(b);
  const int ne = a.num_edges();

  auto try_mask = [&](std::uint64_t mask) -> std::optional<OrderWitness> {
    Contraction c = contract(a, EdgeSet(ne, mask));
    if (c.target.num_vertices() != b.num_vertices()) return std::nullopt;
    if (canonical_key(c.target) != target_graph_key) return std::nullopt;
    SpinStructure pushed = push_spin(c, upper.spin);
    if (canonical_key(c.target, pushed) != target_key) return std::nullopt;
    return OrderWitness{std::move(c), std::move(pushed)};
  };

  if (k == 0) return try_mask(0);
  if (ne == 64) throw ResourceError("order test over 64 edges");
  // Gosper's hack over masks with k bits.
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << ne;
  while (mask < limit) {
    if (auto w = try_mask(mask)) return w;
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return std::nullopt;
}

}  // namespace spinmod
