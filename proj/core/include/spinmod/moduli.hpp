#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinmod/graph.hpp"
#include "spinmod/spin.hpp"

namespace spinmod {

struct Budget {
  int max_edges = 9;  // largest 3g - 3 + n accepted
  int cycle_cap = kDefaultCycleRankCap;
  int jobs = 1;

  // Reads SPINMOD_BUDGET (an integer max_edges) when set.
  static Budget from_env();
  // Throws ResourceError when 3g - 3 + n exceeds max_edges.
  void check(int g, int n) const;
};

enum class PosetKind { graphs, cyclic, spin };

const char* to_string(PosetKind k);
PosetKind parse_poset_kind(const std::string& s);

struct IsoClass {
  Graph graph;
  EdgeSet cycle;       // cyclic and spin posets
  SpinStructure spin;  // spin poset only
  std::string key;
  int rank = 0;
  int parity = -1;       // spin poset only
  int graph_class = -1;  // index into the stable-graph list
};

struct Poset {
  PosetKind kind = PosetKind::graphs;
  int g = 0;
  int n = 0;
  std::vector<IsoClass> nodes;                // sorted by (rank, key)
  std::vector<std::pair<int, int>> covers;    // (upper, lower), sorted
  std::string note;                           // set for empty ranges

  int max_rank() const { return 3 * g - 3 + n; }
  std::optional<int> find(const std::string& key) const;
};

// Stable graphs of genus g with n legs up to isomorphism, sorted by
// (rank, key). Built by closing the weightless 3-regular classes downward
// under single-edge contraction.
std::vector<IsoClass> enumerate_stable_graphs(int g, int n,
                                              const Budget& budget = {});

// Weightless graphs with deg + legs = 3 everywhere, up to isomorphism.
std::vector<Graph> enumerate_three_regular(int g, int n);

// Independent generator: every vertex count, weight vector, leg placement
// and symmetric multiplicity matrix, filtered by stability. Meant for small
// (g, n) only.
std::vector<IsoClass> enumerate_stable_graphs_direct(int g, int n);

Poset build_graph_poset(int g, int n, const Budget& budget = {});
Poset build_cyclic_poset(int g, int n, const Budget& budget = {});
Poset build_spin_poset(int g, int n, const Budget& budget = {});
Poset build_poset(PosetKind kind, int g, int n, const Budget& budget = {});

struct PosetStats {
  int components = 0;
  int even_components = 0;
  int odd_components = 0;
  bool parity_pure = true;  // every component has a single parity
  bool graded = true;       // covers join consecutive ranks, chains reach 0
  bool pure = true;         // every node lies under a maximal-rank node
  bool maximal_are_three_regular = true;
  bool minimum_ok = true;   // one rank-0 node per component
  std::map<int, int> rank_histogram;
  std::vector<std::string> failures;
};

// Computes the statistics; failures lists violated claims with witnesses
// (component counts are checked only for spin posets and connectivity for
// the others).
PosetStats poset_stats(const Poset& p);

// Forgetful maps [SP+] -> [C] -> S: surjective on nodes and mapping covers
// to covers. Returns the violations found.
std::vector<std::string> forgetful_failures(const Poset& spin,
                                            const Poset& cyclic,
                                            const Poset& graphs);

// Transitive order relation from the covers: upper >= lower.
class PosetOrder {
 public:
  explicit PosetOrder(const Poset& p);
  bool geq(int upper, int lower) const;

 private:
  std::vector<std::vector<std::uint64_t>> below_;
};

}  // namespace spinmod
