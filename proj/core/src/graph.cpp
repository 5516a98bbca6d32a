#include "spinmod/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "spinmod/detail/disjoint_sets.hpp"
#include "spinmod/error.hpp"

namespace spinmod {

Graph::Graph(std::vector<Vertex> vertices, std::vector<int> endpoint,
             std::vector<int> involution, std::vector<int> legs)
    : vertices_(std::move(vertices)),
      endpoint_(std::move(endpoint)),
      involution_(std::move(involution)),
      legs_(std::move(legs)) {
  const int nv = num_vertices();
  const int nh = num_half_edges();
  if (nv == 0) throw InputError("graph must have at least one vertex");
  for (int v = 0; v < nv; ++v) {
    if (vertices_[v].weight < 0) {
      throw InputError("vertex " + std::to_string(v) + " has negative weight");
    }
  }
  if (static_cast<int>(involution_.size()) != nh) {
    throw InputError("involution and endpoint arrays differ in length");
  }
  for (int h = 0; h < nh; ++h) {
    if (endpoint_[h] < 0 || endpoint_[h] >= nv) {
      throw InputError("half-edge " + std::to_string(h) +
                       " has unknown endpoint " + std::to_string(endpoint_[h]));
    }
    const int t = involution_[h];
    if (t < 0 || t >= nh || involution_[t] != h) {
      throw InputError("involution is not self-inverse at half-edge " +
                       std::to_string(h));
    }
  }

  std::vector<int> seen(nh, 0);
  for (int h : legs_) {
    if (h < 0 || h >= nh || involution_[h] != h) {
      throw InputError("leg " + std::to_string(h) +
                       " is not a fixed point of the involution");
    }
    if (seen[h]++) throw InputError("leg " + std::to_string(h) + " repeated");
  }
  for (int h = 0; h < nh; ++h) {
    if (involution_[h] == h && !seen[h]) {
      throw InputError("fixed half-edge " + std::to_string(h) +
                       " missing from the leg order");
    }
  }

  edge_of_.assign(nh, -1);
  for (int h = 0; h < nh; ++h) {
    const int t = involution_[h];
    if (h < t) {
      edge_of_[h] = edge_of_[t] = static_cast<int>(edges_.size());
      edges_.push_back({h, t});
    }
  }
  if (num_edges() > kMaxEdges) {
    throw ResourceError("graph has more than 64 edges");
  }

  degree_.assign(nv, 0);
  legs_at_.assign(nv, 0);
  loops_at_.assign(nv, 0);
  for (int h = 0; h < nh; ++h) {
    if (involution_[h] == h) {
      ++legs_at_[endpoint_[h]];
    } else {
      ++degree_[endpoint_[h]];
    }
  }
  for (const Edge& e : edges_) {
    if (endpoint_[e.h0] == endpoint_[e.h1]) ++loops_at_[endpoint_[e.h0]];
  }
}

Graph Graph::from_edges(const std::vector<int>& weights,
                        const std::vector<std::pair<int, int>>& edges,
                        const std::vector<int>& leg_vertices) {
  std::vector<Vertex> vs;
  vs.reserve(weights.size());
  for (int w : weights) vs.push_back({w, false});
  std::vector<int> endpoint;
  std::vector<int> involution;
  for (auto [u, v] : edges) {
    const int h = static_cast<int>(endpoint.size());
    endpoint.push_back(u);
    endpoint.push_back(v);
    involution.push_back(h + 1);
    involution.push_back(h);
  }
  std::vector<int> legs;
  for (int v : leg_vertices) {
    const int h = static_cast<int>(endpoint.size());
    endpoint.push_back(v);
    involution.push_back(h);
    legs.push_back(h);
  }
  return Graph(std::move(vs), std::move(endpoint), std::move(involution),
               std::move(legs));
}

std::pair<int, int> Graph::ends(int e) const {
  const Edge& ed = edges_.at(e);
  return {endpoint_[ed.h0], endpoint_[ed.h1]};
}

bool Graph::is_loop(int e) const {
  auto [u, v] = ends(e);
  return u == v;
}

int Graph::leg_position(int h) const {
  auto it = std::find(legs_.begin(), legs_.end(), h);
  return it == legs_.end() ? -1 : static_cast<int>(it - legs_.begin());
}

int Graph::total_weight() const {
  int s = 0;
  for (const Vertex& v : vertices_) s += v.weight;
  return s;
}

std::vector<int> Graph::component_labels() const {
  detail::DisjointSets ds(num_vertices());
  for (const Edge& e : edges_) ds.unite(endpoint_[e.h0], endpoint_[e.h1]);
  return ds.labels();
}

int Graph::num_components() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

int Divisor::degree() const {
  return std::accumulate(values.begin(), values.end(), 0);
}

int first_betti(const Graph& g) {
  return g.num_edges() - g.num_vertices() + g.num_components();
}

int first_betti(const Graph& g, const EdgeSet& f) {
  if (f.size() != g.num_edges()) {
    throw InputError("edge set does not belong to this graph");
  }
  detail::DisjointSets ds(g.num_vertices());
  int merges = 0;
  for (int e : f.indices()) {
    auto [u, v] = g.ends(e);
    if (ds.unite(u, v)) ++merges;
  }
  return f.count() - merges;
}

int genus(const Graph& g) { return g.total_weight() + first_betti(g); }

bool is_stable(const Graph& g, bool semistable) {
  if (!g.connected()) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int value = 2 * g.weight(v) - 2 + g.degree(v) + g.legs_at(v);
    if (semistable ? value < 0 : value <= 0) return false;
  }
  return true;
}

Divisor canonical_divisor(const Graph& g) {
  Divisor d;
  d.values.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    d.values[v] = 2 * g.weight(v) - 2 + g.degree(v);
  }
  return d;
}

Graph remove_edges(const Graph& g, const EdgeSet& f, bool open) {
  if (f.size() != g.num_edges()) {
    throw InputError("edge set does not belong to this graph");
  }
  if (f.empty()) return g;

  if (open) {
    std::vector<int> involution(g.involutions().begin(), g.involutions().end());
    std::vector<int> legs(g.legs().begin(), g.legs().end());
    for (int e : f.indices()) {  // ascending edge index
      const auto& ed = g.edge(e);
      involution[ed.h0] = ed.h0;
      involution[ed.h1] = ed.h1;
      legs.push_back(ed.h0);  // h0 < h1
      legs.push_back(ed.h1);
    }
    return Graph(g.vertices(),
                 std::vector<int>(g.endpoints().begin(), g.endpoints().end()),
                 std::move(involution), std::move(legs));
  }

  std::vector<int> new_id(g.num_half_edges(), -1);
  int next = 0;
  for (int h = 0; h < g.num_half_edges(); ++h) {
    const int e = g.edge_of(h);
    if (e >= 0 && f.contains(e)) continue;
    new_id[h] = next++;
  }
  std::vector<int> endpoint(next);
  std::vector<int> involution(next);
  for (int h = 0; h < g.num_half_edges(); ++h) {
    if (new_id[h] < 0) continue;
    endpoint[new_id[h]] = g.endpoint(h);
    involution[new_id[h]] = new_id[g.involution(h)];
  }
  std::vector<int> legs;
  for (int h : g.legs()) legs.push_back(new_id[h]);
  return Graph(g.vertices(), std::move(endpoint), std::move(involution),
               std::move(legs));
}

Graph blow_up(const Graph& g, const EdgeSet& r) {
  if (r.size() != g.num_edges()) {
    throw InputError("edge set does not belong to this graph");
  }
  std::vector<Vertex> vertices = g.vertices();
  std::vector<int> endpoint(g.endpoints().begin(), g.endpoints().end());
  std::vector<int> involution(g.involutions().begin(), g.involutions().end());
  for (int e : r.indices()) {
    const auto& ed = g.edge(e);
    const int hv = static_cast<int>(vertices.size());
    vertices.push_back({0, true});
    const int a = static_cast<int>(endpoint.size());
    const int b = a + 1;
    endpoint.push_back(hv);
    endpoint.push_back(hv);
    involution.push_back(ed.h0);
    involution.push_back(ed.h1);
    involution[ed.h0] = a;
    involution[ed.h1] = b;
  }
  return Graph(std::move(vertices), std::move(endpoint), std::move(involution),
               std::vector<int>(g.legs().begin(), g.legs().end()));
}

std::vector<Subgraph> connected_components(const Graph& g) {
  const auto labels = g.component_labels();
  const int nc = labels.empty()
                     ? 0
                     : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<Subgraph> out(nc);
  std::vector<int> local_vertex(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    local_vertex[v] = static_cast<int>(out[labels[v]].vertices.size());
    out[labels[v]].vertices.push_back(v);
  }
  std::vector<int> local_half(g.num_half_edges());
  for (int h = 0; h < g.num_half_edges(); ++h) {
    auto& sub = out[labels[g.endpoint(h)]];
    local_half[h] = static_cast<int>(sub.half_edges.size());
    sub.half_edges.push_back(h);
  }
  for (int c = 0; c < nc; ++c) {
    auto& sub = out[c];
    std::vector<Vertex> vs;
    for (int v : sub.vertices) vs.push_back(g.vertices()[v]);
    std::vector<int> endpoint;
    std::vector<int> involution;
    for (int h : sub.half_edges) {
      endpoint.push_back(local_vertex[g.endpoint(h)]);
      involution.push_back(local_half[g.involution(h)]);
    }
    std::vector<int> legs;
    for (int h : g.legs()) {
      if (labels[g.endpoint(h)] == c) legs.push_back(local_half[h]);
    }
    sub.graph = Graph(std::move(vs), std::move(endpoint), std::move(involution),
                      std::move(legs));
  }
  return out;
}

Classification classify(const Graph& g) {
  Classification c;
  const int nv = g.num_vertices();
  c.eulerian = true;
  c.three_regular = true;
  for (int v = 0; v < nv; ++v) {
    if (g.degree(v) % 2 != 0) c.eulerian = false;
    if (g.weight(v) != 0 || g.degree(v) + g.legs_at(v) != 3) {
      c.three_regular = false;
    }
  }

  c.basic = c.eulerian && g.num_edges() > 0 && genus(g) >= 2 && is_stable(g);
  for (int v = 0; v < nv && c.basic; ++v) {
    const int value = g.weight(v) + g.degree(v) + g.legs_at(v);
    if (g.weight(v) > 1 || value > 4) c.basic = false;
    if (value == 4 && g.loops_at(v) == 0) c.basic = false;
  }

  c.vertex_classes.assign(nv, std::nullopt);
  if (c.basic) {
    for (int v = 0; v < nv; ++v) {
      c.vertex_classes[v] = std::pair{g.weight(v), g.weight(v) + g.loops_at(v)};
    }
  }
  return c;
}

}  // namespace spinmod
