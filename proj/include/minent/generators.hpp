#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "minent/errors.hpp"
#include "minent/graph.hpp"
#include "minent/intervals.hpp"
#include "minent/set_system.hpp"

// Seeded instance generators. The same arguments always give the same
// instance.

namespace minent {

inline Graph random_graph(int n, int m, std::uint64_t seed) {
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 0 || m < 0 || m > max_edges) {
    throw ValidationError("random graph: need 0 <= m <= n(n-1)/2");
  }
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(m));
  std::sort(all.begin(), all.end());
  return Graph(n, std::move(all));
}

// Random spanning tree plus m - (n - 1) further random edges.
inline Graph random_connected_graph(int n, int m, std::uint64_t seed) {
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 1 || m < n - 1 || m > max_edges) {
    throw ValidationError("connected graph: need n - 1 <= m <= n(n-1)/2");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    const int u = perm[i];
    const int v = perm[parent(rng)];
    edges.push_back({std::min(u, v), std::max(u, v)});
    present[u][v] = present[v][u] = true;
  }
  std::vector<Edge> rest;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!present[u][v]) rest.push_back({u, v});
    }
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  rest.resize(static_cast<std::size_t>(m - (n - 1)));
  edges.insert(edges.end(), rest.begin(), rest.end());
  std::sort(edges.begin(), edges.end());
  return Graph(n, std::move(edges));
}

// Pairing model: match n*degree half-edges uniformly, rejecting loops and
// multi-edges.
inline Graph random_regular(int n, int degree, std::uint64_t seed,
                            int max_attempts = 100'000) {
  if (n < 1 || degree < 0 || degree >= n || (n * degree) % 2 != 0) {
    throw ValidationError(
        "regular graph: need 0 <= degree < n and n * degree even");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> points;
  for (int v = 0; v < n; ++v) {
    for (int d = 0; d < degree; ++d) points.push_back(v);
  }
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; ok && i < points.size(); i += 2) {
      const int u = std::min(points[i], points[i + 1]);
      const int v = std::max(points[i], points[i + 1]);
      if (u == v) ok = false;
      edges.push_back({u, v});
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph(n, std::move(edges));
  }
  throw ValidationError("regular graph: pairing model kept rejecting");
}

// Each of the left * right cross pairs is an edge with probability p.
inline Graph random_bipartite(int left, int right, double p,
                              std::uint64_t seed) {
  if (left < 0 || right < 0 || !(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("bipartite graph: bad parameters");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < left; ++u) {
    for (int v = left; v < left + right; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(left + right, std::move(edges));
}

// Random edges added in random order while both endpoints stay below
// max_degree; stops after `edges` insertions.
inline Graph random_bounded_degree(int n, int max_degree, int edges,
                                   std::uint64_t seed) {
  if (n < 0 || max_degree < 0 || edges < 0) {
    throw ValidationError("bounded-degree graph: bad parameters");
  }
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<Edge> chosen;
  for (const Edge& e : all) {
    if (static_cast<int>(chosen.size()) == edges) break;
    if (degree[e.u] < max_degree && degree[e.v] < max_degree) {
      ++degree[e.u];
      ++degree[e.v];
      chosen.push_back(e);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return Graph(n, std::move(chosen));
}

// n open intervals with endpoints a/grid < b/grid, a, b in [0, grid].
inline IntervalSet random_intervals(int n, int grid, std::uint64_t seed) {
  if (n < 0 || grid < 1) throw ValidationError("intervals: bad parameters");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> point(0, grid);
  std::vector<Interval> intervals;
  while (static_cast<int>(intervals.size()) < n) {
    int a = point(rng);
    int b = point(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    intervals.push_back({Rational(a, grid), Rational(b, grid)});
  }
  return IntervalSet(std::move(intervals));
}

// k random nonempty subsets of {0..n-1}; elements left uncovered are added
// to a random set.
inline SetSystem random_setcover(int n, int k, std::uint64_t seed) {
  if (n < 0 || k < 1) throw ValidationError("setcover: need k >= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> pick_set(0, k - 1);
  std::vector<std::vector<Element>> sets(static_cast<std::size_t>(k));
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (auto& set : sets) {
    do {
      set.clear();
      for (Element x = 0; x < n; ++x) {
        if (coin(rng)) set.push_back(x);
      }
    } while (set.empty() && n > 0);
    for (Element x : set) covered[x] = true;
  }
  for (Element x = 0; x < n; ++x) {
    if (!covered[x]) {
      auto& set = sets[pick_set(rng)];
      set.insert(std::upper_bound(set.begin(), set.end(), x), x);
    }
  }
  return SetSystem(n, std::move(sets));
}

}  // namespace minent
