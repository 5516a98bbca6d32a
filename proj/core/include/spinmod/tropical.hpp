#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spinmod/graph.hpp"
#include "spinmod/moduli.hpp"
#include "spinmod/morphisms.hpp"
#include "spinmod/rational.hpp"
#include "spinmod/spin.hpp"

namespace spinmod {

// A graph with a length in Q>=0 ∪ {∞} on every edge.
struct TropicalCurve {
  Graph graph;
  std::vector<ExtRational> lengths;

  bool finite() const;
  friend bool operator==(const TropicalCurve&, const TropicalCurve&) = default;
};

// Throws InputError on a length vector of the wrong size or a negative length.
void validate(const TropicalCurve& c);

struct SpinTropicalCurve {
  TropicalCurve curve;
  SpinStructure spin;
};

struct ConeCell {
  IsoClass cls;
  int dim = 0;
  std::size_t aut_order = 0;  // edge action of Aut(G, P, s)
  std::vector<int> face_of;   // cells one dimension up containing this one
};

struct ConeComplex {
  int g = 0;
  int n = 0;
  std::vector<ConeCell> cells;
  PosetStats stats;
  bool pure = false;
  int components = 0;
  // Pairs compared between the face relation (contraction search) and the
  // poset order; mismatches are listed in failures.
  std::size_t face_pairs_checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// One cell per spin class. Faces are checked against the transitive poset
// order on every pair of cells when there are at most max_exhaustive cells,
// otherwise on `samples` pseudo-random pairs.
ConeComplex build_cone_complex(int g, int n, const Budget& budget = {},
                               std::size_t max_exhaustive = 200,
                               std::size_t samples = 2000);

// Doubles lengths outside P.
TropicalCurve pi_trop(const SpinTropicalCurve& psi);

// Aut(Γ): automorphisms of the graph preserving edge lengths.
AutGroup length_automorphisms(const TropicalCurve& c);

// One representative per Aut(Γ)-orbit of SP_G, with lengths halved outside
// P so that pi_trop maps each back to Γ. Requires a stable curve.
std::vector<SpinTropicalCurve> pi_trop_fiber(const TropicalCurve& c);

// A spin graph with a valuation per node of the special fiber.
struct FamilyDescriptor {
  SpinGraph special;
  std::vector<ExtRational> val;
};

// Throws InputError unless every valuation is positive.
void validate(const FamilyDescriptor& fam);

SpinTropicalCurve trop_family(const FamilyDescriptor& fam);

// Tropicalization of the stable model: each node keeps its smoothing
// parameter, except over the blown-up nodes E \ P where t = s^2.
TropicalCurve family_stable_model(const FamilyDescriptor& fam);

// pi_trop(trop_family(fam)) == family_stable_model(fam).
bool diagram_check(const FamilyDescriptor& fam);

struct GenericFiber {
  SpinGraph fiber;
  Contraction contraction;  // contracts the edges of finite valuation
  OrderWitness witness;     // found independently by order_test
};

// Throws VerificationFailure if order_test finds no witness.
GenericFiber family_generic_fiber(const FamilyDescriptor& fam);

// Random valuations on a spin graph: infinite with probability 1/4,
// otherwise p/q with 1 <= p <= 20, 1 <= q <= 6.
FamilyDescriptor random_family(const SpinGraph& sg, std::mt19937_64& rng);

}  // namespace spinmod
