#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spinmod/canonical.hpp"
#include "spinmod/error.hpp"
#include "spinmod/moduli.hpp"

using namespace spinmod;
using namespace fixtures;

TEST(Enumerate, ReferenceCounts) {
  EXPECT_EQ(enumerate_stable_graphs(1, 1).size(), 2U);
  EXPECT_EQ(enumerate_stable_graphs(2, 0).size(), 7U);
  EXPECT_EQ(enumerate_stable_graphs(0, 3).size(), 1U);
  EXPECT_EQ(enumerate_stable_graphs(3, 0).size(), 42U);
  EXPECT_TRUE(enumerate_stable_graphs(1, 0).empty());
  EXPECT_TRUE(build_spin_poset(1, 0).nodes.empty());
  EXPECT_FALSE(build_spin_poset(1, 0).note.empty());
}

TEST(Enumerate, OneOneClasses) {
  std::set<std::string> keys;
  for (const auto& c : enumerate_stable_graphs(1, 1)) keys.insert(c.key);
  EXPECT_EQ(keys, (std::set<std::string>{canonical_key(loop1()), canonical_key(g_w(1, 1))}));
}

TEST(Enumerate, AgreesWithOracle) {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 0}}) {
    const auto ours = enumerate_stable_graphs(g, n);
    const auto ref = oracle::stable_graphs(g, n);
    ASSERT_EQ(ours.size(), ref.size()) << g << "," << n;
    // every oracle graph is isomorphic to exactly one of ours
    for (const auto& r : ref) {
      int hits = 0;
      for (const auto& c : ours) hits += oracle::isomorphic(r, c.graph);
      EXPECT_EQ(hits, 1);
    }
  }
}

TEST(Enumerate, DirectGeneratorAgrees) {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 3}, {2, 1}, {2, 2}, {3, 0}}) {
    std::set<std::string> a;
    std::set<std::string> b;
    for (const auto& c : enumerate_stable_graphs(g, n)) a.insert(c.key);
    for (const auto& c : enumerate_stable_graphs_direct(g, n)) b.insert(c.key);
    EXPECT_EQ(a, b) << g << "," << n;
  }
}

TEST(Enumerate, BudgetEnforced) {
  Budget b;
  b.max_edges = 5;
  EXPECT_THROW(enumerate_stable_graphs(3, 0, b), ResourceError);
  EXPECT_NO_THROW(enumerate_stable_graphs(2, 0, b));
}

TEST(Enumerate, ThreeRegularSeeds) {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {2, 2}, {4, 0}}) {
    for (const auto& s : enumerate_three_regular(g, n)) {
      EXPECT_TRUE(classify(s).three_regular);
      EXPECT_EQ(s.num_edges(), 3 * g - 3 + n);
      EXPECT_EQ(genus(s), g);
    }
  }
  EXPECT_EQ(enumerate_three_regular(2, 0).size(), 2U);
  EXPECT_EQ(enumerate_three_regular(3, 0).size(), 5U);
}

TEST(SpinPoset, OneOne) {
  const Poset p = build_spin_poset(1, 1);
  ASSERT_EQ(p.nodes.size(), 5U);
  int over_loop = 0;
  int even = 0;
  for (const auto& c : p.nodes) {
    over_loop += c.graph.num_edges() == 1;
    even += c.parity == 0;
  }
  EXPECT_EQ(over_loop, 3);
  EXPECT_EQ(even, 3);
  const auto st = poset_stats(p);
  EXPECT_TRUE(st.failures.empty());
  EXPECT_EQ(st.components, 2);
  EXPECT_EQ(st.even_components, 1);
  EXPECT_EQ(st.odd_components, 1);
}

TEST(SpinPoset, ZeroThree) {
  const Poset p = build_spin_poset(0, 3);
  ASSERT_EQ(p.nodes.size(), 1U);
  EXPECT_EQ(p.nodes[0].parity, 0);
  EXPECT_EQ(poset_stats(p).components, 1);
  EXPECT_TRUE(poset_stats(p).failures.empty());
}

TEST(SpinPoset, TwoZeroMaximalCells) {
  const Poset p = build_spin_poset(2, 0);
  int top = 0;
  int top_odd = 0;
  int over_theta = 0;
  const std::string theta_key = canonical_key(theta());
  for (const auto& c : p.nodes) {
    if (c.rank != 3) continue;
    ++top;
    top_odd += c.parity;
    over_theta += canonical_key(c.graph) == theta_key;
  }
  EXPECT_EQ(top, 9);
  EXPECT_EQ(top_odd, 3);
  EXPECT_EQ(over_theta, 3);
}

TEST(SpinPoset, MatchesOracleClassCounts) {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 0}, {0, 4}}) {
    const auto graphs = oracle::stable_graphs(g, n);
    const auto ref = oracle::spin_classes(graphs);
    const Poset p = build_spin_poset(g, n);
    EXPECT_EQ(p.nodes.size(), ref.size()) << g << "," << n;
    std::size_t odd = 0;
    for (const auto& [i, s] : ref) odd += s.parity();
    std::size_t ours_odd = 0;
    for (const auto& c : p.nodes) ours_odd += c.parity;
    EXPECT_EQ(ours_odd, odd);
  }
}

TEST(GraphPoset, TwoZero) {
  const Poset p = build_graph_poset(2, 0);
  const auto st = poset_stats(p);
  EXPECT_TRUE(st.failures.empty());
  EXPECT_EQ(st.components, 1);
  EXPECT_TRUE(st.graded);
  EXPECT_EQ(st.rank_histogram, (std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 2}}));
}

TEST(PosetProperty, StatsAndForgetfulMaps) {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 4}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0}}) {
    const Poset gp = build_graph_poset(g, n);
    const Poset cp = build_cyclic_poset(g, n);
    const Poset sp = build_spin_poset(g, n);
    for (const Poset* p : {&gp, &cp, &sp}) {
      const auto st = poset_stats(*p);
      EXPECT_TRUE(st.failures.empty()) << to_string(p->kind) << " " << g << "," << n << ": "
                                       << (st.failures.empty() ? "" : st.failures[0]);
      EXPECT_TRUE(st.pure);
      EXPECT_TRUE(st.maximal_are_three_regular);
      for (auto [u, l] : p->covers) EXPECT_EQ(p->nodes[u].rank, p->nodes[l].rank + 1);
    }
    EXPECT_TRUE(forgetful_failures(sp, cp, gp).empty());
  }
}

TEST(PosetProperty, OrderMatchesOrderTest) {
  const Poset p = build_spin_poset(2, 1);
  const PosetOrder order(p);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, p.nodes.size() - 1);
  for (int t = 0; t < 400; ++t) {
    const auto a = pick(rng);
    const auto b = pick(rng);
    const bool witness =
        order_test({p.nodes[a].graph, p.nodes[a].spin}, {p.nodes[b].graph, p.nodes[b].spin}).has_value();
    EXPECT_EQ(witness, order.geq(static_cast<int>(a), static_cast<int>(b)));
  }
}
