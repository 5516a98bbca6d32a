#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spinmod/error.hpp"
#include "spinmod/moduli.hpp"
#include "spinmod/spin.hpp"

using namespace spinmod;
using namespace fixtures;

TEST(Spin, Validation) {
  const Graph t = theta();
  EXPECT_THROW(SpinStructure(t, EdgeSet::of(3, {0}), {0}), DomainError);
  EXPECT_THROW(SpinStructure(t, EdgeSet::none(3), {1, 0}), DomainError);  // genus 0
  EXPECT_THROW(SpinStructure(t, EdgeSet::none(3), {0}), InputError);
  EXPECT_THROW(SpinStructure(t, EdgeSet::of(3, {0, 1}), {2}), InputError);
  const SpinStructure s(t, EdgeSet::of(3, {0, 1}), {1});
  EXPECT_EQ(s.parity(), 1);
  EXPECT_FALSE(s.even());
}

TEST(Spin, EnumerateCounts) {
  auto t = enumerate_spin(theta());
  EXPECT_EQ(t.size(), 7U);
  EXPECT_EQ(t.even.size(), 4U);
  EXPECT_EQ(t.odd.size(), 3U);

  auto d = enumerate_spin(dumbbell());
  EXPECT_EQ(d.size(), 9U);
  EXPECT_EQ(d.even.size(), 5U);
  EXPECT_EQ(d.odd.size(), 4U);

  auto w = enumerate_spin(g_w(2, 1));
  ASSERT_EQ(w.size(), 2U);
  EXPECT_EQ(w.even[0].sign()[0], 0);
  EXPECT_EQ(w.odd[0].sign()[0], 1);
}

TEST(Spin, CountCheck) {
  const auto t = spin_count_check(theta());
  EXPECT_EQ(t.closed_form, 7U);
  EXPECT_EQ(t.lower_bound, 7U);
  EXPECT_TRUE(t.tight);

  const auto d = spin_count_check(dumbbell());
  EXPECT_EQ(d.closed_form, 9U);
  EXPECT_EQ(d.lower_bound, 7U);
  EXPECT_FALSE(d.tight);

  const auto w = spin_count_check(g_w(3, 0));
  EXPECT_EQ(w.closed_form, 2U);
  EXPECT_EQ(w.lower_bound, 1U);
  EXPECT_FALSE(w.tight);
}

TEST(Spin, ThetaDivisors) {
  const auto a = theta_divisors(theta(), EdgeSet::of(3, {0, 1}));
  EXPECT_EQ(a.graph_divisor.values, (std::vector<int>{0, 0}));
  EXPECT_EQ(a.midpoint_mass, (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(a.degree(), 1);

  const auto b = theta_divisors(g_w(4, 0), EdgeSet::none(0));
  EXPECT_EQ(b.graph_divisor.values, (std::vector<int>{3}));

  const auto c = theta_divisors(dumbbell(), EdgeSet::of(3, {0, 2}));
  EXPECT_EQ(c.graph_divisor.values, (std::vector<int>{0, 0}));
  EXPECT_EQ(c.midpoint_mass, (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(c.degree(), 1);
  EXPECT_THROW(theta_divisors(theta(), EdgeSet::of(3, {0})), DomainError);
}

TEST(Spin, StratumCounts) {
  const auto t = stratum_counts(theta());
  ASSERT_EQ(t.per_p.size(), 4U);
  for (const auto& pc : t.per_p) EXPECT_EQ(pc.total, 4U);
  EXPECT_EQ(t.grand_total, 16U);

  const auto w = stratum_counts(g_w(3, 0));
  ASSERT_EQ(w.per_p.size(), 1U);
  EXPECT_EQ(w.per_p[0].point_count, 64U);
  EXPECT_EQ(w.per_p[0].length_per_point, 1U);

  EXPECT_EQ(stratum_counts(dumbbell()).grand_total, 16U);
  EXPECT_THROW(stratum_counts(rose(1)), DomainError);
}

TEST(Spin, H0) {
  EXPECT_EQ(h0_general({theta(), SpinStructure(theta(), EdgeSet::of(3, {0, 1}), {1})}), 1);
  EXPECT_EQ(h0_general({dumbbell(), SpinStructure(dumbbell(), EdgeSet::of(3, {0, 2}), {1, 1})}), 2);
  EXPECT_EQ(h0_general({theta(), trivial_spin(theta())}), 0);
}

TEST(Spin, GCollections) {
  // cycle of length 2 with a loop at each vertex, g = 3
  const Graph c2 = Graph::from_edges({0, 0}, {{0, 1}, {0, 1}, {0, 0}, {1, 1}}, {});
  ASSERT_TRUE(classify(c2).basic);
  const auto a = g_collections(c2);
  EXPECT_EQ(a.count, 4U);
  EXPECT_EQ(a.count, std::uint64_t{1} << (first_betti(c2) - 1));

  const auto b = g_collections(rose(2));
  ASSERT_EQ(b.index_sets.size(), 1U);
  EXPECT_EQ(b.index_sets[0].second, (std::vector<int>{1, 2}));

  const auto c = g_collections(rose(1, 1));
  EXPECT_EQ(c.index_sets[0].second, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(c.count, 4U);

  EXPECT_THROW(g_collections(theta()), DomainError);
}

TEST(SpinProperty, MatchesOracleEnumeration) {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0}}) {
    for (const auto& c : enumerate_stable_graphs(g, n)) {
      const auto ours = enumerate_spin(c.graph);
      const auto ref = oracle::spins(c.graph);
      std::size_t odd = 0;
      for (const auto& s : ref) odd += s.parity();
      EXPECT_EQ(ours.size(), ref.size()) << c.key;
      EXPECT_EQ(ours.odd.size(), odd) << c.key;
      EXPECT_NO_THROW(spin_count_check(c.graph));
      EXPECT_NO_THROW(stratum_counts(c.graph));
      for (const auto& p : enumerate_cyclic(c.graph)) {
        EXPECT_EQ(theta_divisors(c.graph, p).degree(), g - 1);
      }
    }
  }
}

TEST(SpinProperty, GCollectionCountMatchesOddThetas) {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {3, 1}, {4, 0}}) {
    for (const auto& c : enumerate_stable_graphs(g, n)) {
      if (!classify(c.graph).basic || c.graph.num_vertices() < 2) continue;
      EXPECT_EQ(g_collections(c.graph).count,
                std::uint64_t{1} << (first_betti(c.graph) + 2 * c.graph.total_weight() - 1))
          << c.key;
    }
  }
}
