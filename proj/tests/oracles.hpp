#pragma once

// Brute-force reference computations for the test suites. Nothing here
// calls into the solver code paths it is used to check; only the plain data
// types (Graph, SetSystem, IntervalSet) are shared.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "minent/graph.hpp"
#include "minent/intervals.hpp"
#include "minent/set_system.hpp"

namespace oracle {

using minent::Graph;
using minent::SetSystem;

// -sum p ln p / ln 2, evaluated in the given order.
inline double entropy_from_sizes(const std::vector<long>& sizes) {
  double total = 0.0;
  for (long s : sizes) total += static_cast<double>(s);
  double h = 0.0;
  for (long s : sizes) {
    if (s > 0) {
      const double p = static_cast<double>(s) / total;
      h -= p * std::log(p);
    }
  }
  return h / std::log(2.0);
}

// Minimum entropy over every feasible assignment, no pruning or memo.
inline double cover_entropy(const SetSystem& s) {
  const int n = s.universe_size();
  std::vector<long> counts(static_cast<std::size_t>(s.num_sets()), 0);
  double best = std::numeric_limits<double>::infinity();
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      best = std::min(best, entropy_from_sizes(counts));
      return;
    }
    for (int i = 0; i < s.num_sets(); ++i) {
      if (!s.contains(i, x)) continue;
      ++counts[i];
      rec(x + 1);
      --counts[i];
    }
  };
  rec(0);
  return best;
}

// Minimum orientation entropy over all 2^m bitmasks.
inline double orientation_entropy(const Graph& g) {
  const int m = g.num_edges();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<long> indegree(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int i = 0; i < m; ++i) {
      const auto& e = g.edges()[i];
      ++indegree[(mask >> i & 1U) ? e.v : e.u];
    }
    best = std::min(best, entropy_from_sizes(indegree));
  }
  return best;
}

// Calls visit(color) for every partition of V into independent sets, given
// as restricted-growth color vectors (colors 1..k).
inline void for_each_proper_partition(
    const Graph& g, const std::function<void(const std::vector<int>&)>& visit) {
  const int n = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (v == n) {
      visit(color);
      return;
    }
    for (int c = 1; c <= used + 1; ++c) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (color[u] == c && g.has_edge(u, v)) ok = false;
      }
      if (!ok) continue;
      color[v] = c;
      rec(v + 1, std::max(used, c));
    }
    color[v] = 0;
  };
  rec(0, 0);
}

inline std::vector<long> class_sizes(const std::vector<int>& color) {
  std::vector<long> sizes;
  for (int c : color) {
    if (static_cast<int>(sizes.size()) < c) sizes.resize(static_cast<std::size_t>(c), 0);
    ++sizes[c - 1];
  }
  return sizes;
}

inline double chromatic_entropy(const Graph& g) {
  double best = std::numeric_limits<double>::infinity();
  for_each_proper_partition(g, [&](const std::vector<int>& color) {
    best = std::min(best, entropy_from_sizes(class_sizes(color)));
  });
  return best;
}

// best[i] = largest vertex subset whose induced subgraph is i-colorable,
// for i = 0..n, from a chromatic-number DP over all 2^n subsets.
inline std::vector<int> max_colorable_sizes(const Graph& g) {
  const int n = g.num_vertices();
  const std::uint32_t full = std::uint32_t{1} << n;
  std::vector<bool> independent(full, true);
  for (std::uint32_t s = 1; s < full; ++s) {
    const int low = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    bool ok = independent[rest];
    for (int u = 0; ok && u < n; ++u) {
      if ((rest >> u & 1U) && g.has_edge(low, u)) ok = false;
    }
    independent[s] = ok;
  }
  std::vector<int> chi(full, 0);
  for (std::uint32_t s = 1; s < full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    int best = n + 1;
    // Independent subsets containing the lowest vertex.
    for (std::uint32_t sub = s; sub; sub = (sub - 1) & s) {
      if ((sub & low) && independent[sub]) best = std::min(best, 1 + chi[s & ~sub]);
    }
    chi[s] = best;
  }
  std::vector<int> out(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t s = 0; s < full; ++s) {
    const int size = std::popcount(s);
    for (int i = chi[s]; i <= n; ++i) out[i] = std::max(out[i], size);
  }
  return out;
}

// All independent sets (as sorted vertex lists) by subset enumeration.
inline std::vector<std::vector<int>> independent_sets(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1U) members.push_back(v);
    }
    if (g.is_independent_set(members)) out.push_back(std::move(members));
  }
  return out;
}

inline bool is_bipartite(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> side(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<bool> in(static_cast<std::size_t>(g.num_vertices()), false);
  for (int v : vertices) in[v] = true;
  for (int start : vertices) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (!in[w]) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Nonincreasing integer partitions of `total`.
inline void for_each_partition(int total, const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> parts;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(total, total);
}

}  // namespace oracle
