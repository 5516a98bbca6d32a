#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spinmod/cycles.hpp"
#include "spinmod/graph.hpp"
#include "spinmod/spin.hpp"

namespace spinmod {

// The contraction G -> G/F. Target vertices are ordered by the smallest
// source vertex they contain; surviving half-edges keep their relative
// order, so target edges are E \ F in source order.
struct Contraction {
  Graph source;
  EdgeSet contracted;
  Graph target;
  std::vector<int> vertex_map;     // source vertex -> target vertex
  std::vector<int> edge_map;       // source edge -> target edge, -1 if in F
  std::vector<int> half_edge_map;  // source half-edge -> target, -1 if in F
};

Contraction contract(const Graph& g, const EdgeSet& f);

// second ∘ first; requires second.source == first.target.
Contraction compose(const Contraction& first, const Contraction& second);

// Linear maps induced on the edge and vertex spaces.
EdgeSet push_edges(const Contraction& c, const EdgeSet& f);
VertexMask push_vertices(const Contraction& c, VertexMask m);
Divisor push_divisor(const Contraction& c, const Divisor& d);

// P \ F reindexed to the target; throws DomainError on non-cyclic input.
EdgeSet push_cycle(const Contraction& c, const EdgeSet& p);
// Signs add over the preimage of each target component.
SpinStructure push_spin(const Contraction& c, const SpinStructure& s);

// A map on V ∪ H. Used for automorphisms and isomorphisms alike.
struct GraphMap {
  std::vector<int> vertex;
  std::vector<int> half_edge;

  friend bool operator==(const GraphMap&, const GraphMap&) = default;
  friend auto operator<=>(const GraphMap&, const GraphMap&) = default;
};

// Checks weights, endpoints, involution and that legs map to the leg with
// the same position.
bool is_isomorphism(const Graph& from, const Graph& to, const GraphMap& m);

std::vector<int> edge_permutation(const Graph& g, const GraphMap& m);
EdgeSet act(const Graph& g, const GraphMap& m, const EdgeSet& f);
SpinStructure act(const Graph& g, const GraphMap& m, const SpinStructure& s);
GraphMap compose(const GraphMap& outer, const GraphMap& inner);

// A finite group of graph automorphisms with every element materialized.
class AutGroup {
 public:
  AutGroup() = default;
  AutGroup(const Graph& g, std::vector<GraphMap> elements);

  const std::vector<GraphMap>& elements() const { return elements_; }
  // Order as maps on V ∪ H.
  std::size_t order() const { return elements_.size(); }
  // Order of the induced action on V ⊔ E (loop flips act trivially).
  std::size_t vertex_edge_order() const { return ve_order_; }
  // Order of the induced permutation action on E alone.
  std::size_t edge_order() const { return edge_order_; }

 private:
  std::vector<GraphMap> elements_;
  std::size_t ve_order_ = 0;
  std::size_t edge_order_ = 0;
};

inline constexpr std::size_t kMaxGroupElements = 2'000'000;

AutGroup automorphisms(const Graph& g);
// Aut(G, P, s): elements with α_*(P, s) = (P, s).
AutGroup automorphisms(const Graph& g, const SpinStructure& s);
// Elements fixing every half-edge outside P and every component of P̄.
AutGroup pbar_subgroup(const Graph& g, const EdgeSet& p);

// Image of a subgroup of Aut(G) stabilizing P in Aut(G/P), as maps on the
// quotient's V ∪ H. Throws VerificationFailure if an image is not an
// automorphism of G/P.
AutGroup quotient_image(const Graph& g, const EdgeSet& p, const AutGroup& sub);

// Orders in 0 -> Aut(P̄) -> Aut(G,P,s) -> Aut_G(G/P,s) -> 0 at three
// levels of action. Aut(P̄) is computed on the graph P̄ itself.
struct AutSequenceReport {
  struct Orders {
    std::size_t spin = 0;
    std::size_t pbar = 0;
    std::size_t image = 0;
    bool multiplicative() const { return spin == pbar * image; }
  };

  Orders half_edge;
  Orders vertex_edge;
  Orders edge;
  // Aut(P̄) equals the kernel of Aut(G,P,s) -> Aut(G/P) as sets of maps.
  bool kernel_matches = false;
};

AutSequenceReport aut_sequence(const Graph& g, const SpinStructure& s);

// A contraction γ with γ_*(P, s) isomorphic to the lower spin graph.
struct OrderWitness {
  Contraction contraction;
  SpinStructure pushed;
};

// Searches every F ⊆ E(upper) of size |E(upper)| - |E(lower)|.
std::optional<OrderWitness> order_test(const SpinGraph& upper,
                                       const SpinGraph& lower);

}  // namespace spinmod
