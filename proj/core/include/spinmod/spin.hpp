#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spinmod/cycles.hpp"
#include "spinmod/edge_set.hpp"
#include "spinmod/graph.hpp"

namespace spinmod {

// A cyclic edge set P together with a sign on each component of P̄
// (equivalently each vertex of G/P). Components are indexed as in
// pbar_components. Signs vanish on genus-0 components.
class SpinStructure {
 public:
  SpinStructure() = default;
  // Throws DomainError if P is not cyclic or a genus-0 component carries
  // sign 1; InputError if the sign vector has the wrong length.
  SpinStructure(const Graph& g, EdgeSet p, std::vector<std::uint8_t> sign);

  const EdgeSet& cycle() const { return p_; }
  std::span<const std::uint8_t> sign() const { return sign_; }
  int parity() const { return parity_; }
  bool even() const { return parity_ == 0; }

  friend bool operator==(const SpinStructure&, const SpinStructure&) = default;
  friend auto operator<=>(const SpinStructure& a, const SpinStructure& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.sign_ <=> b.sign_;
  }

 private:
  EdgeSet p_;
  std::vector<std::uint8_t> sign_;
  int parity_ = 0;
};

// (0, s0), or (0, s) with the given sign on a single-vertex edgeless graph.
SpinStructure trivial_spin(const Graph& g);

struct SpinGraph {
  Graph graph;
  SpinStructure spin;
};

struct SpinEnumeration {
  std::vector<SpinStructure> even;
  std::vector<SpinStructure> odd;

  std::size_t size() const { return even.size() + odd.size(); }
  // Even structures first, each block ordered by (P, sign).
  std::vector<SpinStructure> all() const;
};

// Every sign assignment over a fixed cyclic P.
std::vector<SpinStructure> spin_structures_over(const Graph& g,
                                                const EdgeSet& p);

SpinEnumeration enumerate_spin(const Graph& g, int cap = kDefaultCycleRankCap);

struct SpinCountReport {
  struct PerCycle {
    EdgeSet p;
    int c_plus = 0;
    std::uint64_t even = 0;
    std::uint64_t odd = 0;
  };

  int b1 = 0;
  std::uint64_t closed_form = 0;  // sum over P of 2^{c+}
  std::uint64_t enumerated = 0;
  std::uint64_t lower_bound = 0;  // 2^{b1+1} - 1
  bool tight = false;
  std::vector<PerCycle> per_cycle;
};

// Recomputes |SP_G| two ways and checks the lower bound, its equality
// case, and the per-P parity split. Throws VerificationFailure naming the
// graph and P on any mismatch.
SpinCountReport spin_count_check(const Graph& g);

struct ThetaDivisors {
  // d^P on the vertices of P̄ (= vertices of G).
  Divisor graph_divisor;
  // Unit mass at the midpoint of every edge outside P.
  std::vector<int> midpoint_mass;

  int degree() const;
};

ThetaDivisors theta_divisors(const Graph& g, const EdgeSet& p);

struct StratumCount {
  struct PerCycle {
    EdgeSet p;
    int b1_p = 0;
    std::uint64_t point_count = 0;       // 2^{b1(P) + 2|w|}
    std::uint64_t length_per_point = 0;  // 2^{b - b1(P)}
    std::uint64_t total = 0;             // 2^{b + 2|w|}
    // Set when P spans a connected subgraph with b1(P) > 0.
    bool split_applies = false;
    std::uint64_t odd_points = 0;
    std::uint64_t even_points = 0;
  };

  std::vector<PerCycle> per_p;
  std::uint64_t grand_total = 0;
};

// Throws VerificationFailure if the total differs from 2^{2g}.
StratumCount stratum_counts(const Graph& g);

// Sum over components of the sign values, as an integer.
int h0_general(const SpinGraph& sg);

struct GCollections {
  // (vertex id, admissible indices) for each vertex outside V_{0,0}.
  std::vector<std::pair<int, std::vector<int>>> index_sets;
  std::uint64_t count = 0;
};

// Requires a basic graph (DomainError otherwise).
GCollections g_collections(const Graph& g);

}  // namespace spinmod
