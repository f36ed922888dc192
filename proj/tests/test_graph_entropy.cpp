#include <gtest/gtest.h>

#include <cmath>

#include "minent/coloring.hpp"
#include "minent/generators.hpp"
#include "minent/graph_entropy.hpp"
#include "oracles.hpp"

namespace minent {
namespace {

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}
Graph clique(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  }
  return Graph(n, e);
}

TEST(MaximalIndependentSets, Examples) {
  using Sets = std::vector<std::vector<Vertex>>;
  EXPECT_EQ(enumerate_maximal_independent_sets(clique(3)), (Sets{{0}, {1}, {2}}));
  EXPECT_EQ(enumerate_maximal_independent_sets(Graph(3, {{0, 1}, {1, 2}})),
            (Sets{{0, 2}, {1}}));
  const Sets c5 = enumerate_maximal_independent_sets(cycle(5));
  ASSERT_EQ(c5.size(), 5u);
  for (const auto& s : c5) EXPECT_EQ(s.size(), 2u);
  EXPECT_THROW(enumerate_maximal_independent_sets(Graph(12, {}).complement(), 3), BudgetExceeded);
}

TEST(MaximalIndependentSets, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 1 + static_cast<int>(seed % 10);
    const Graph g = random_graph(n, static_cast<int>(seed % (n * (n - 1) / 2 + 1)), seed);
    std::vector<std::vector<Vertex>> expected;
    for (const auto& s : oracle::independent_sets(g)) {
      bool maximal = true;
      for (Vertex v = 0; v < n && maximal; ++v) {
        if (std::find(s.begin(), s.end(), v) != s.end()) continue;
        auto bigger = s;
        bigger.push_back(v);
        if (g.is_independent_set(bigger)) maximal = false;
      }
      if (maximal) expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(enumerate_maximal_independent_sets(g), expected) << "seed " << seed;
  }
}

TEST(GraphEntropy, Examples) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_NEAR(graph_entropy(clique(n)).H, std::log2(static_cast<double>(n)), 1e-6);
  }
  EXPECT_NEAR(graph_entropy(Graph(5, {})).H, 0.0, 1e-12);
  EXPECT_NEAR(graph_entropy(cycle(4)).H, 1.0, 1e-5);
}

TEST(GraphEntropy, WitnessIsConsistent) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const Graph g = random_graph(n, static_cast<int>(seed % (n * (n - 1) / 2 + 1)), seed);
    const GraphEntropyResult r = graph_entropy(g);
    const EntropyWitness& w = r.witness;
    ASSERT_EQ(w.support.size(), w.q.size());
    double total = 0.0;
    std::vector<double> p(static_cast<std::size_t>(n), 0.0);
    for (std::size_t s = 0; s < w.support.size(); ++s) {
      EXPECT_GT(w.q[s], 0.0);
      EXPECT_TRUE(g.is_independent_set(w.support[s]));
      total += w.q[s];
      for (Vertex v : w.support[s]) p[v] += w.q[s];
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
    double value = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_NEAR(p[v], w.p[v], 1e-9);
      value -= std::log2(p[v]) / n;
    }
    EXPECT_NEAR(value, w.value, 1e-9);
    EXPECT_NEAR(r.H, w.value, 1e-12);
    EXPECT_LE(r.gap, GraphEntropyOptions{}.tol);
  }
}

TEST(GraphEntropy, ObjectiveNeverIncreases) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(9, 14, seed);
    const auto trace = graph_entropy(g).objective_trace;
    for (std::size_t i = 1; i < trace.size(); ++i) {
      EXPECT_LE(trace[i], trace[i - 1] + 1e-12);
    }
  }
}

TEST(GraphEntropy, ConvergenceFailureReportsBestValue) {
  GraphEntropyOptions tight;
  tight.tol = 1e-15;
  tight.max_iterations = 1;
  const Graph g = random_graph(9, 14, 1);
  try {
    graph_entropy(g, tight);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.gap(), tight.tol);
    EXPECT_GE(e.best_value(), graph_entropy(g).H - 1e-6);
  }
}

TEST(SplittingGap, PerfectAndImperfect) {
  EXPECT_NEAR(splitting_gap(cycle(4)), 0.0, 2e-6);
  EXPECT_NEAR(splitting_gap(clique(5)), 0.0, 2e-6);
  EXPECT_GE(splitting_gap(cycle(5)), -2e-6);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph b = random_bipartite(3 + static_cast<int>(seed % 4), 2 + static_cast<int>(seed % 5),
                                     0.5, seed);
    EXPECT_NEAR(splitting_gap(b), 0.0, 2e-6) << "bipartite seed " << seed;
    const Graph iv = interval_graph(random_intervals(2 + static_cast<int>(seed % 10), 6, seed));
    EXPECT_NEAR(splitting_gap(iv), 0.0, 2e-6) << "interval seed " << seed;
    EXPECT_NEAR(splitting_gap(iv.complement()), 0.0, 2e-6);
  }
}

TEST(GreedyVsEntropy, Examples) {
  const auto empty = greedy_vs_entropy(Graph(4, {}));
  EXPECT_EQ(empty.g_bits, 0.0);
  EXPECT_NEAR(empty.H_bits, 0.0, 1e-12);
  EXPECT_TRUE(empty.bound_holds);

  const auto k5 = greedy_vs_entropy(clique(5));
  EXPECT_NEAR(k5.g_bits, std::log2(5.0), 1e-12);
  EXPECT_NEAR(k5.H_bits, std::log2(5.0), 1e-6);
  EXPECT_GE(k5.bound_rhs - k5.g_bits, 4.0 - 1e-6);
}

TEST(GreedyVsEntropy, ChainOnPerfectFamilies) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = seed % 2 == 0
                        ? random_bipartite(2 + static_cast<int>(seed % 6), 2 + static_cast<int>(seed % 5),
                                           0.4, seed)
                        : interval_graph(random_intervals(2 + static_cast<int>(seed % 11), 6, seed));
    const auto r = greedy_vs_entropy(g);
    ASSERT_TRUE(r.chromatic_bits.has_value());
    EXPECT_LE(r.H_bits - 1e-6, *r.chromatic_bits + kEntropyTolerance);
    EXPECT_LE(*r.chromatic_bits, r.g_bits + kEntropyTolerance);
    EXPECT_TRUE(r.relaxation_holds);
    EXPECT_TRUE(r.bound_holds);
  }
}

}  // namespace
}  // namespace minent
