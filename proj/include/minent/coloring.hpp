#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "minent/entropy.hpp"
#include "minent/errors.hpp"
#include "minent/graph.hpp"
#include "minent/intervals.hpp"

namespace minent {

// Vertex coloring with colors 1..k. Input colors are relabelled to a
// contiguous range preserving their relative order.
class Coloring {
 public:
  Coloring() = default;

  explicit Coloring(std::vector<int> color) : color_(std::move(color)) {
    std::map<int, int> relabel;
    for (int c : color_) {
      if (c < 1) {
        throw ValidationError("coloring: colors must be positive, got " +
                              std::to_string(c));
      }
      relabel.emplace(c, 0);
    }
    int next = 1;
    for (auto& [from, to] : relabel) to = next++;
    classes_.assign(relabel.size(), {});
    for (std::size_t v = 0; v < color_.size(); ++v) {
      color_[v] = relabel[color_[v]];
      classes_[color_[v] - 1].push_back(static_cast<Vertex>(v));
    }
  }

  std::span<const int> colors() const noexcept { return color_; }
  int color(Vertex v) const { return color_[v]; }
  int num_colors() const noexcept { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<Vertex>>& classes() const noexcept {
    return classes_;
  }
  CountVector class_sizes() const {
    CountVector sizes;
    for (const auto& cls : classes_) {
      sizes.push_back(static_cast<Count>(cls.size()));
    }
    return sizes;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> color_;
  std::vector<std::vector<Vertex>> classes_;
};

// Entropy of the color of a random vertex, drawn from w when the graph is
// weighted and uniformly otherwise.
inline double coloring_entropy(const Graph& g, const Coloring& c) {
  if (!g.is_proper_coloring(c.colors())) {
    throw FeasibilityError("coloring is not proper for this graph");
  }
  if (!g.weighted()) return entropy_of_counts(c.class_sizes());
  std::vector<double> masses(static_cast<std::size_t>(c.num_colors()), 0.0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    masses[c.color(v) - 1] += g.weight(v);
  }
  double h = 0.0;
  for (double p : masses) h -= xlog2x(p);
  return std::max(h, 0.0);
}

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> neighbor_masks(const Graph& g) {
  if (g.num_vertices() > 64) {
    throw BudgetExceeded("bitset search supports at most 64 vertices");
  }
  std::vector<Mask> nbr(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u] |= Mask{1} << e.v;
    nbr[e.v] |= Mask{1} << e.u;
  }
  return nbr;
}

struct MisSearch {
  const std::vector<Mask>& nbr;
  std::span<const double> weight;  // unit weights for cardinality
  Mask best = 0;
  double best_value = -1.0;

  // Covers `cand` by greedy cliques; a clique contributes at most its
  // heaviest vertex to any independent set.
  double clique_cover_bound(Mask cand) const {
    double bound = 0.0;
    while (cand) {
      const int v = std::countr_zero(cand);
      Mask clique_cand = cand & nbr[v];
      cand &= cand - 1;
      double heaviest = weight[v];
      while (clique_cand) {
        const int u = std::countr_zero(clique_cand);
        clique_cand &= nbr[u];
        cand &= ~(Mask{1} << u);
        heaviest = std::max(heaviest, weight[u]);
      }
      bound += heaviest;
    }
    return bound;
  }

  void run(Mask current, double value, Mask cand) {
    if (!cand) {
      if (value > best_value + kDominanceSlack) {
        best_value = value;
        best = current;
      }
      return;
    }
    if (value + clique_cover_bound(cand) <= best_value + kDominanceSlack) {
      return;
    }
    const int v = std::countr_zero(cand);
    const Mask bit = Mask{1} << v;
    run(current | bit, value + weight[v], cand & ~bit & ~nbr[v]);
    run(current, value, cand & ~bit);
  }
};

inline std::vector<Vertex> mask_to_vertices(Mask mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace detail

inline constexpr int kMaxExactMisVertices = 40;

// Maximum-cardinality independent set, or maximum-weight when weights are
// given. Among optima, returns the lexicographically smallest vertex set.
inline std::vector<Vertex> exact_mis(
    const Graph& g, std::optional<std::span<const double>> weights = {}) {
  const int n = g.num_vertices();
  if (n > kMaxExactMisVertices) {
    throw BudgetExceeded("exact MIS supports at most " +
                         std::to_string(kMaxExactMisVertices) + " vertices");
  }
  if (n == 0) return {};
  std::vector<double> unit(static_cast<std::size_t>(n), 1.0);
  std::span<const double> w = weights ? *weights : std::span<const double>(unit);
  if (static_cast<int>(w.size()) != n) {
    throw ValidationError("exact MIS: weight vector has wrong length");
  }
  const auto nbr = detail::neighbor_masks(g);
  detail::MisSearch search{nbr, w};
  const detail::Mask all = n == 64 ? ~detail::Mask{0}
                                   : (detail::Mask{1} << n) - 1;
  search.run(0, 0.0, all);
  return detail::mask_to_vertices(search.best);
}

// Greedy minimum-degree independent set: take a minimum-degree vertex of the
// residual graph (smallest index on ties) and delete its closed neighborhood.
inline std::vector<Vertex> approx_mis(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<Vertex> chosen;
  int remaining = n;

  const auto remove = [&](Vertex v) {
    alive[v] = false;
    --remaining;
    for (Vertex w : g.neighbors(v)) {
      if (alive[w]) --degree[w];
    }
  };

  while (remaining > 0) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && (pick < 0 || degree[v] < degree[pick])) pick = v;
    }
    chosen.push_back(pick);
    remove(pick);
    for (Vertex w : g.neighbors(pick)) {
      if (alive[w]) remove(w);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

enum class MisOracle { kExact, kApprox };

// Removes an independent set from the residual graph per round and gives it
// the next color. The exact oracle maximizes weight on weighted graphs.
inline Coloring greedy_coloring(const Graph& g, MisOracle oracle) {
  const int n = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> residual(static_cast<std::size_t>(n));
  std::iota(residual.begin(), residual.end(), 0);
  int next_color = 1;
  while (!residual.empty()) {
    const Graph sub = g.induced(residual);
    std::vector<Vertex> picked;
    if (oracle == MisOracle::kExact) {
      if (g.weighted()) {
        std::vector<double> w;
        for (Vertex v : residual) w.push_back(g.weight(v));
        picked = exact_mis(sub, std::span<const double>(w));
      } else {
        picked = exact_mis(sub);
      }
    } else {
      picked = approx_mis(sub);
    }
    if (picked.empty()) {
      throw std::logic_error("greedy coloring: oracle returned an empty set");
    }
    std::vector<bool> taken(residual.size(), false);
    for (Vertex local : picked) {
      color[residual[local]] = next_color;
      taken[local] = true;
    }
    std::vector<Vertex> rest;
    for (std::size_t i = 0; i < residual.size(); ++i) {
      if (!taken[i]) rest.push_back(residual[i]);
    }
    residual = std::move(rest);
    ++next_color;
  }
  return Coloring(std::move(color));
}

inline constexpr std::uint64_t kDefaultColoringNodeLimit = 200'000'000;

// Minimum-entropy proper coloring by enumeration of set partitions into
// independent sets in restricted-growth order. Returns the optimum whose
// canonical color vector is lexicographically smallest.
//
// A branch is cut when even the most concentrated completion cannot beat
// the incumbent: moving every unassigned vertex into the currently largest
// class yields a distribution that dominates every completion of the
// branch, so its entropy bounds theirs from below.
inline Coloring exact_coloring(
    const Graph& g, std::uint64_t node_limit = kDefaultColoringNodeLimit) {
  const int n = g.num_vertices();
  if (n == 0) return Coloring(std::vector<int>{});
  const auto nbr = detail::neighbor_masks(g);
  std::vector<double> mass(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    mass[v] = g.weighted() ? g.weight(v) : 1.0;
  }
  std::vector<double> suffix_mass(static_cast<std::size_t>(n) + 1, 0.0);
  for (int v = n - 1; v >= 0; --v) suffix_mass[v] = suffix_mass[v + 1] + mass[v];

  // Objective: maximize sum over classes of M log2 M, M the class mass.
  const double tie = 1e-9;
  const Coloring seed = greedy_coloring(g, MisOracle::kApprox);
  double best_score = 0.0;
  {
    std::vector<double> seed_mass(static_cast<std::size_t>(seed.num_colors()), 0.0);
    for (Vertex v = 0; v < n; ++v) seed_mass[seed.color(v) - 1] += mass[v];
    for (double m : seed_mass) best_score += xlog2x(m);
  }
  // Lower the incumbent so the search itself rediscovers a solution at least
  // as good as the seed, which keeps the canonical tie-break intact.
  best_score -= 2 * tie;

  std::vector<detail::Mask> class_members;
  std::vector<double> class_mass;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  std::vector<int> best;
  double score = 0.0;
  std::uint64_t nodes = 0;

  const auto search = [&](auto&& self, int v) -> void {
    if (++nodes > node_limit) {
      throw BudgetExceeded("coloring oracle exceeded " +
                           std::to_string(node_limit) + " search nodes");
    }
    if (v == n) {
      if (score > best_score + tie) {
        best_score = score;
        best = current;
      }
      return;
    }
    double largest = 0.0;
    for (double m : class_mass) largest = std::max(largest, m);
    const double optimistic =
        score - xlog2x(largest) + xlog2x(largest + suffix_mass[v]);
    if (optimistic <= best_score + tie) return;

    const detail::Mask bit = detail::Mask{1} << v;
    for (std::size_t c = 0; c < class_members.size(); ++c) {
      if (class_members[c] & nbr[v]) continue;
      const double before = class_mass[c];
      score += xlog2x(before + mass[v]) - xlog2x(before);
      class_members[c] |= bit;
      class_mass[c] += mass[v];
      current[v] = static_cast<int>(c) + 1;
      self(self, v + 1);
      class_mass[c] = before;
      class_members[c] &= ~bit;
      score -= xlog2x(before + mass[v]) - xlog2x(before);
    }
    class_members.push_back(bit);
    class_mass.push_back(mass[v]);
    score += xlog2x(mass[v]);
    current[v] = static_cast<int>(class_members.size());
    self(self, v + 1);
    score -= xlog2x(mass[v]);
    class_mass.pop_back();
    class_members.pop_back();
  };
  search(search, 0);
  if (best.empty()) {
    throw std::logic_error("coloring oracle found no solution");
  }
  return Coloring(std::move(best));
}

// Open intervals h_i^j = ((j-1)/i, j/i), 1 <= j <= i <= k, listed row by
// row. Row i is an independent set of size i.
struct JkGadget {
  IntervalSet intervals;
  std::vector<int> row;     // i, 1-based
  std::vector<int> column;  // j, 1-based
};

inline JkGadget gen_jk(int k) {
  if (k < 1) throw ValidationError("J_k: k must be at least 1");
  std::vector<Interval> intervals;
  JkGadget gadget;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= i; ++j) {
      intervals.push_back({Rational(j - 1, i), Rational(j, i)});
      gadget.row.push_back(i);
      gadget.column.push_back(j);
    }
  }
  gadget.intervals = IntervalSet(std::move(intervals));
  return gadget;
}

struct LayerDecomposition {
  std::vector<std::vector<Vertex>> layers;  // S_1..S_k
  double lower_bound_H = 0.0;
};

struct IntervalColoring {
  Coloring coloring;
  LayerDecomposition layers;
};

// Sort by right endpoint; put each interval into the first layer i such that
// layers 1..i plus the interval contain no (i+1)-clique. Layer 1 gets color
// 1 and layer i >= 2 is 2-colored with 2i-2 and 2i-1. The layer size
// distribution is a lower bound on the optimum, within one bit of the
// returned coloring.
inline IntervalColoring interval_mec(const IntervalSet& iv) {
  const int n = static_cast<int>(iv.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (iv[a].hi != iv[b].hi) return iv[a].hi < iv[b].hi;
    if (iv[a].lo != iv[b].lo) return iv[a].lo < iv[b].lo;
    return a < b;
  });
  std::vector<int> sorted_pos(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) sorted_pos[order[p]] = p;

  LayerDecomposition decomposition;
  auto& layers = decomposition.layers;
  for (int v : order) {
    std::vector<int> prefix{v};
    std::size_t i = 0;
    for (; i < layers.size(); ++i) {
      prefix.insert(prefix.end(), layers[i].begin(), layers[i].end());
      if (max_point_depth(iv, prefix) <= static_cast<int>(i) + 1) break;
    }
    if (i == layers.size()) layers.emplace_back();
    layers[i].push_back(v);
  }

  std::vector<int> color(static_cast<std::size_t>(n), 0);
  if (!layers.empty()) {
    for (int v : layers[0]) color[v] = 1;
  }
  for (std::size_t li = 1; li < layers.size(); ++li) {
    const auto& layer = layers[li];
    const int even = 2 * static_cast<int>(li + 1) - 2;
    std::vector<int> side(layer.size(), -1);
    for (std::size_t start = 0; start < layer.size(); ++start) {
      if (side[start] >= 0) continue;
      // Breadth-first 2-coloring of one component of the layer.
      std::vector<std::size_t> component{start};
      side[start] = 0;
      for (std::size_t head = 0; head < component.size(); ++head) {
        const std::size_t a = component[head];
        for (std::size_t b = 0; b < layer.size(); ++b) {
          if (b == a || !intersects(iv[layer[a]], iv[layer[b]])) continue;
          if (side[b] < 0) {
            side[b] = 1 - side[a];
            component.push_back(b);
          } else if (side[b] == side[a]) {
            throw std::logic_error("interval layer is not bipartite");
          }
        }
      }
      std::size_t count[2] = {0, 0};
      int first_side = side[start];
      int first_pos = sorted_pos[layer[start]];
      for (std::size_t a : component) {
        ++count[side[a]];
        if (sorted_pos[layer[a]] < first_pos) {
          first_pos = sorted_pos[layer[a]];
          first_side = side[a];
        }
      }
      const int lower_side = count[0] != count[1]
                                 ? (count[0] > count[1] ? 0 : 1)
                                 : first_side;
      for (std::size_t a : component) {
        color[layer[a]] = side[a] == lower_side ? even : even + 1;
      }
    }
  }

  CountVector sizes;
  for (const auto& layer : layers) sizes.push_back(static_cast<Count>(layer.size()));
  if (!sizes.empty()) decomposition.lower_bound_H = entropy_of_counts(sizes);
  return {Coloring(std::move(color)), std::move(decomposition)};
}

}  // namespace minent
