#pragma once

#include <cstdint>
#include <vector>

#include "spinmod/edge_set.hpp"
#include "spinmod/graph.hpp"

namespace spinmod {

// Bitmask over vertex ids; desk-scale graphs have at most 64 vertices.
using VertexMask = std::uint64_t;

inline constexpr int kDefaultCycleRankCap = 24;

// GF(2) boundary: sum of endpoint indicators. Loops contribute zero.
VertexMask boundary(const Graph& g, const EdgeSet& f);

// Boundary zero, equivalently every vertex of <F> has even degree.
bool is_cyclic(const Graph& g, const EdgeSet& f);

// Fundamental cycles of a DFS spanning forest, one per non-forest edge in
// increasing edge index. Size is b1(G).
std::vector<EdgeSet> cycle_basis(const Graph& g);

// All 2^b1 elements of the cycle space, sorted by mask. Throws
// ResourceError when b1 exceeds the cap.
std::vector<EdgeSet> enumerate_cyclic(const Graph& g,
                                      int cap = kDefaultCycleRankCap);

// The graph P̄ = G - (E \ P)° split into connected components.
struct PbarDecomposition {
  struct Component {
    Subgraph piece;  // component of P̄, legs inherited in P̄ order
    int genus = 0;
  };

  std::vector<Component> components;  // ordered by smallest vertex id
  std::vector<int> component_of;      // per vertex of G
  int c_plus = 0;
};

PbarDecomposition pbar_decompose(const Graph& g, const EdgeSet& p);

// Component labelling of the spanning subgraph (V, P) and each component's
// genus (weights plus cycle rank). Same indexing as pbar_decompose without
// materializing the component graphs.
struct PbarComponents {
  std::vector<int> component_of;
  std::vector<int> genus;

  int count() const { return static_cast<int>(genus.size()); }
  int c_plus() const;
};

PbarComponents pbar_components(const Graph& g, const EdgeSet& p);

}  // namespace spinmod
