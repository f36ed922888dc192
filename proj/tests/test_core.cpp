#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "minent/entropy.hpp"
#include "minent/graph.hpp"
#include "minent/intervals.hpp"
#include "minent/set_system.hpp"
#include "oracles.hpp"

namespace minent {
namespace {

TEST(Entropy, CountsExampleDistribution) {
  const Distribution d({5.0 / 11, 4.0 / 11, 2.0 / 11});
  EXPECT_NEAR(entropy(d), 1.4949188482339508, 1e-12);
}

TEST(Entropy, PointMassAndUniform) {
  EXPECT_EQ(entropy(Distribution({1.0})), 0.0);
  EXPECT_DOUBLE_EQ(entropy(Distribution({0.25, 0.25, 0.25, 0.25})), 2.0);
  EXPECT_EQ(entropy(Distribution({0.0, 1.0, 0.0})), 0.0);
}

TEST(Entropy, RejectsInvalidDistributions) {
  EXPECT_THROW(Distribution({0.5, 0.6}), ValidationError);
  EXPECT_THROW(Distribution({1.5, -0.5}), ValidationError);
  EXPECT_THROW(Distribution(std::vector<double>{}), ValidationError);
}

TEST(Entropy, CountsToDistribution) {
  const CountVector fig1{5, 4, 2};
  const Distribution d = counts_to_distribution(fig1);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_DOUBLE_EQ(d[0], 5.0 / 11);
  EXPECT_DOUBLE_EQ(d[1], 4.0 / 11);
  EXPECT_DOUBLE_EQ(d[2], 2.0 / 11);

  const CountVector single{7};
  EXPECT_EQ(counts_to_distribution(single)[0], 1.0);

  const CountVector zeros{0, 3, 3};
  const Distribution z = counts_to_distribution(zeros);
  EXPECT_EQ(z[0], 0.0);
  EXPECT_EQ(z[1], 0.5);
  EXPECT_EQ(z[2], 0.5);

  const CountVector none{0, 0};
  EXPECT_THROW(counts_to_distribution(none), ValidationError);
}

TEST(Entropy, CountEntropyIgnoresZerosAndOrder) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    CountVector c;
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) c.push_back(static_cast<Count>(rng() % 5));
    c.push_back(1 + static_cast<Count>(rng() % 4));
    const double h = entropy_of_counts(c);
    CountVector shuffled = c;
    shuffled.push_back(0);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(entropy_of_counts(shuffled), h);
    std::vector<long> as_long(c.begin(), c.end());
    EXPECT_NEAR(h, oracle::entropy_from_sizes(as_long), 1e-12);
    EXPECT_NEAR(h, entropy(counts_to_distribution(c)), 1e-12);
  }
}

TEST(Entropy, MergingTwoPartsNeverIncreasesEntropy) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    CountVector c;
    const int len = 2 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) c.push_back(1 + static_cast<Count>(rng() % 9));
    const std::size_t i = rng() % c.size();
    std::size_t j = rng() % c.size();
    if (j == i) j = (i + 1) % c.size();
    CountVector merged = c;
    merged[i] += merged[j];
    merged[j] = 0;
    EXPECT_LE(entropy_of_counts(merged), entropy_of_counts(c) + 1e-12);
  }
}

TEST(Dominance, Examples) {
  const Distribution halves({0.5, 0.5});
  const Distribution thirds({1.0 / 3, 1.0 / 3, 1.0 / 3});
  EXPECT_TRUE(dominates(halves, thirds));
  EXPECT_TRUE(dominates(thirds, thirds));
  EXPECT_FALSE(dominates(thirds, halves));

  const CountVector h{1, 1};
  const CountVector t{1, 1, 1};
  EXPECT_TRUE(dominates(h, t));
  EXPECT_TRUE(dominates(t, t));
  EXPECT_FALSE(dominates(t, h));
}

// Exhaustive over all nonincreasing integer-count distributions with total
// at most 12: dominated implies no smaller entropy, equal only if identical.
TEST(Dominance, EntropyMonotonicityExhaustive) {
  std::vector<CountVector> all;
  for (int total = 1; total <= 12; ++total) {
    oracle::for_each_partition(total, [&](const std::vector<long>& parts) {
      all.emplace_back(parts.begin(), parts.end());
    });
  }
  int dominated_pairs = 0;
  for (const auto& q : all) {
    for (const auto& r : all) {
      if (!dominates(r, q)) continue;
      ++dominated_pairs;
      const double hq = entropy_of_counts(q);
      const double hr = entropy_of_counts(r);
      EXPECT_GE(hq, hr - kEntropyTolerance);
      if (same_distribution(q, r)) {
        EXPECT_NEAR(hq, hr, kEntropyTolerance);
      } else {
        EXPECT_GT(hq, hr + kEntropyTolerance);
      }
    }
  }
  EXPECT_GT(dominated_pairs, 1000);
}

TEST(Graph, ValidationAndPlumbing) {
  const Graph p3(3, {{0, 1}, {2, 1}});
  EXPECT_EQ(p3.num_edges(), 2);
  EXPECT_EQ(p3.degree(1), 2);
  EXPECT_EQ(p3.max_degree(), 2);
  EXPECT_TRUE(p3.has_edge(1, 2));
  EXPECT_FALSE(p3.has_edge(0, 2));
  const std::vector<Vertex> ends{0, 2};
  EXPECT_TRUE(p3.is_independent_set(ends));
  const std::vector<int> good{1, 2, 1};
  const std::vector<int> bad{1, 1, 2};
  EXPECT_TRUE(p3.is_proper_coloring(good));
  EXPECT_FALSE(p3.is_proper_coloring(bad));
  const Graph c = p3.complement();
  EXPECT_EQ(c.num_edges(), 1);
  EXPECT_TRUE(c.has_edge(0, 2));

  EXPECT_THROW(Graph(2, {{0, 0}}), ValidationError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), ValidationError);
  EXPECT_THROW(Graph(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(Graph(2, {{0, 1}}, std::vector<double>{0.5, 0.6}), ValidationError);
  EXPECT_THROW(Graph(2, {{0, 1}}, std::vector<double>{1.5, -0.5}), ValidationError);
}

TEST(SetSystem, Validation) {
  const SetSystem s(4, {{0, 1, 2}, {2, 3}, {3}});
  EXPECT_EQ(s.num_sets(), 3);
  EXPECT_EQ(s.sets_containing(2).size(), 2u);
  EXPECT_THROW(SetSystem(3, {{0, 1}}), ValidationError);
  EXPECT_THROW(SetSystem(2, {{0, 0, 1}}), ValidationError);
  EXPECT_THROW(SetSystem(2, {{0, 5}}), ValidationError);
}

TEST(Intervals, OpenIntervalGraph) {
  const IntervalSet iv({{Rational(0), Rational(2)},
                        {Rational(1), Rational(3)},
                        {Rational(2), Rational(4)}});
  const Graph g = interval_graph(iv);
  ASSERT_EQ(g.num_edges(), 2);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(0, 2));

  const Graph single = interval_graph(IntervalSet({{Rational(0), Rational(1)}}));
  EXPECT_EQ(single.num_vertices(), 1);
  EXPECT_EQ(single.num_edges(), 0);

  EXPECT_THROW(IntervalSet({{Rational(1), Rational(1)}}), ValidationError);
}

TEST(Intervals, ExactRationalTouching) {
  // 1/3 + 1/3 + 1/3 is exactly 1: (0,1/3),(1/3,2/3),(2/3,1) are disjoint.
  const IntervalSet iv({{Rational(0), Rational(1, 3)},
                        {Rational(1, 3), Rational(2, 3)},
                        {Rational(2, 3), Rational(1)},
                        {Rational(1, 6), Rational(1, 2)}});
  const Graph g = interval_graph(iv);
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(0, 3));
  EXPECT_TRUE(g.has_edge(1, 3));
  EXPECT_FALSE(g.has_edge(2, 3));
}

TEST(Intervals, DisjointIntervalsAreIndependent) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Interval> intervals;
    std::vector<Vertex> disjoint;
    Rational cursor(0);
    const int n = 2 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      if (rng() % 2) {
        const Rational len(1 + static_cast<long>(rng() % 3), 1 + static_cast<long>(rng() % 4));
        intervals.push_back({cursor, cursor + len});
        disjoint.push_back(i);
        cursor += len;
      } else {
        const Rational lo(static_cast<long>(rng() % 10), 3);
        intervals.push_back({lo, lo + Rational(1, 2)});
      }
    }
    const Graph g = interval_graph(IntervalSet(intervals));
    EXPECT_TRUE(g.is_independent_set(disjoint));
  }
}

}  // namespace
}  // namespace minent
