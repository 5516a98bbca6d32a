#pragma once

#include <string>
#include <vector>

#include "spinmod/graph.hpp"
#include "spinmod/morphisms.hpp"
#include "spinmod/spin.hpp"

namespace spinmod {

// A one-edge splitting G' -> G of a non-basic Eulerian stable graph with a
// connected spin structure (P', s') lifting (G, G, s).
struct Refinement {
  SpinGraph refined;
  Contraction witness;  // contracts new_edge, target equals G
  int split_vertex = -1;
  int new_edge = -1;
};

// Searches vertices v of G in increasing order, then every distribution of
// v's half-edges (as a bitmask, ascending), weight split (weight at the
// original vertex ascending) and leg distribution (bitmask, ascending), and
// returns the first candidate passing every check in
// refinement_failures. Throws DomainError if G is outside the domain and
// VerificationFailure if no candidate passes.
Refinement refine_nonbasic(const Graph& g, int sign);

// Empty when the refinement satisfies: one more edge with equal b1 and a
// stable G'; Aut(G', P', s') = Aut(G'); every contraction G' -> G pushes
// (P', s') to (G, G, s); and (P', s') is the only spin structure on G'
// contracting to (G, G, s).
std::vector<std::string> refinement_failures(const Graph& g, int sign,
                                             const Refinement& r);

}  // namespace spinmod
