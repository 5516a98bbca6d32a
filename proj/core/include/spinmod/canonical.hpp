#pragma once

#include <optional>
#include <string>

#include "spinmod/edge_set.hpp"
#include "spinmod/graph.hpp"
#include "spinmod/morphisms.hpp"
#include "spinmod/spin.hpp"

namespace spinmod {

// Lowercase hex keys; equal iff the objects are isomorphic. Graph, cyclic
// pair and spin keys carry distinct prefixes and never collide.
std::string canonical_key(const Graph& g);
std::string canonical_key(const Graph& g, const EdgeSet& p);
std::string canonical_key(const Graph& g, const SpinStructure& s);
inline std::string canonical_key(const SpinGraph& sg) {
  return canonical_key(sg.graph, sg.spin);
}

// Some isomorphism a -> b, if one exists.
std::optional<GraphMap> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace spinmod
