#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spinmod/edge_set.hpp"

namespace spinmod {

struct Vertex {
  int weight = 0;
  // Set on the vertices inserted by blow_up.
  bool exceptional = false;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Weighted multigraph with ordered legs in half-edge form.
//
// Vertices and half-edges carry dense integer ids. The involution pairs
// half-edges into edges; its fixed points are legs and appear exactly once
// in the ordered leg list. Edges are indexed by increasing smaller
// half-edge id, which is the indexing every EdgeSet over the graph uses.
class Graph {
 public:
  struct Edge {
    int h0 = -1;  // smaller half-edge id
    int h1 = -1;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  Graph() = default;
  Graph(std::vector<Vertex> vertices, std::vector<int> endpoint,
        std::vector<int> involution, std::vector<int> legs);

  // Builds half-edges 2i, 2i+1 for edge i (in list order) and then one
  // half-edge per leg, in leg order.
  static Graph from_edges(const std::vector<int>& weights,
                          const std::vector<std::pair<int, int>>& edges,
                          const std::vector<int>& leg_vertices);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_half_edges() const { return static_cast<int>(endpoint_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_legs() const { return static_cast<int>(legs_.size()); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  int weight(int v) const { return vertices_.at(v).weight; }
  bool exceptional(int v) const { return vertices_.at(v).exceptional; }
  int endpoint(int h) const { return endpoint_.at(h); }
  int involution(int h) const { return involution_.at(h); }
  std::span<const int> endpoints() const { return endpoint_; }
  std::span<const int> involutions() const { return involution_; }
  std::span<const int> legs() const { return legs_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(e); }

  // Vertex ends of edge e (equal for a loop).
  std::pair<int, int> ends(int e) const;
  bool is_loop(int e) const;
  // Edge index of a half-edge, or -1 for a leg.
  int edge_of(int h) const { return edge_of_.at(h); }
  // Position of a leg half-edge in the leg order, or -1.
  int leg_position(int h) const;

  // Edge half-edges at v; a loop contributes 2, legs are not counted.
  int degree(int v) const { return degree_.at(v); }
  int legs_at(int v) const { return legs_at_.at(v); }
  int loops_at(int v) const { return loops_at_.at(v); }
  int total_weight() const;

  // Component label per vertex, labels ordered by smallest vertex id.
  std::vector<int> component_labels() const;
  int num_components() const;
  bool connected() const { return num_components() == 1; }

  EdgeSet no_edges() const { return EdgeSet::none(num_edges()); }
  EdgeSet all_edges() const { return EdgeSet::all(num_edges()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.endpoint_ == b.endpoint_ &&
           a.involution_ == b.involution_ && a.legs_ == b.legs_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<int> endpoint_;
  std::vector<int> involution_;
  std::vector<int> legs_;

  std::vector<Edge> edges_;
  std::vector<int> edge_of_;
  std::vector<int> degree_;
  std::vector<int> legs_at_;
  std::vector<int> loops_at_;
};

// Integer divisor indexed by vertex id.
struct Divisor {
  std::vector<int> values;

  int degree() const;
  friend bool operator==(const Divisor&, const Divisor&) = default;
};

// b1 = |E| - |V| + c.
int first_betti(const Graph& g);
// Sum of weights plus b1; defined for disconnected graphs.
int genus(const Graph& g);
// Cycle rank of the spanning subgraph (V, F).
int first_betti(const Graph& g, const EdgeSet& f);

// Connected and 2w - 2 + deg + legs > 0 (>= 0 when semistable) everywhere.
bool is_stable(const Graph& g, bool semistable = false);

Divisor canonical_divisor(const Graph& g);

// open == false: drop the edges in F. open == true: every half-edge of a
// removed edge becomes a leg at its vertex; new legs are appended after the
// existing ones ordered by removed edge index, then half-edge id. Half-edge
// ids are preserved in the open case.
Graph remove_edges(const Graph& g, const EdgeSet& f, bool open);

// Inserts a weight-0 exceptional vertex in the interior of every edge in R.
Graph blow_up(const Graph& g, const EdgeSet& r);

// A connected component cut out of a graph, with maps back to the parent.
struct Subgraph {
  Graph graph;
  std::vector<int> vertices;    // parent vertex id per local vertex
  std::vector<int> half_edges;  // parent half-edge id per local half-edge
};

// Components ordered by smallest parent vertex id; legs keep parent order.
std::vector<Subgraph> connected_components(const Graph& g);

struct Classification {
  bool eulerian = false;
  bool three_regular = false;
  bool basic = false;
  // (w, w + loops) per vertex; only filled for basic graphs.
  std::vector<std::optional<std::pair<int, int>>> vertex_classes;
};

Classification classify(const Graph& g);

}  // namespace spinmod
