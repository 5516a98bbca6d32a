#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "spinmod/edge_set.hpp"
#include "spinmod/graph.hpp"

namespace spinmod::detail {

// Vertex-labelled multiplicity matrix: the data a graph (optionally with a
// cyclic set and per-vertex signs) is determined by up to isomorphism.
struct Colored {
  int n = 0;
  std::vector<std::vector<int>> label;
  // mult[u * n + v] = 256 * (edges between u, v) + (those in P), u != v.
  std::vector<int> mult;

  int at(int u, int v) const { return mult[u * n + v]; }
};

// sign may be empty; otherwise one entry per vertex.
Colored make_colored(const Graph& g, const EdgeSet* p,
                     const std::vector<std::uint8_t>& vertex_sign);

// Stable colour refinement. Colours are ranks of iso-invariant signatures.
std::vector<int> refine_colors(const Colored& c);

// Lexicographically least row encoding over orderings compatible with the
// refined colour classes.
std::vector<std::uint8_t> canonical_encoding(const Colored& c);

// Calls visit(sigma) for every label- and multiplicity-preserving vertex
// bijection a -> b; stops early when visit returns false.
void for_each_vertex_map(const Colored& a, const Colored& b,
                         const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace spinmod::detail
