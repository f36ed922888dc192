#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "minent/entropy.hpp"
#include "minent/errors.hpp"
#include "minent/graph.hpp"

namespace minent {

struct Arc {
  Vertex tail;
  Vertex head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// One arc per edge of the graph, in the graph's edge order.
class Orientation {
 public:
  Orientation() = default;

  Orientation(const Graph& g, std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
    if (static_cast<int>(arcs_.size()) != g.num_edges()) {
      throw FeasibilityError("orientation: expected one arc per edge");
    }
    indegrees_.assign(static_cast<std::size_t>(g.num_vertices()), 0);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const Edge& e = g.edges()[i];
      const Arc& a = arcs_[i];
      const bool forward = a.tail == e.u && a.head == e.v;
      const bool backward = a.tail == e.v && a.head == e.u;
      if (!forward && !backward) {
        throw FeasibilityError("orientation: arc " + std::to_string(i) +
                               " does not match its edge");
      }
      ++indegrees_[a.head];
    }
  }

  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::span<const Count> indegrees() const noexcept { return indegrees_; }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<Arc> arcs_;
  CountVector indegrees_;
};

inline double orientation_entropy(const Graph& g, const Orientation& o) {
  if (g.num_edges() == 0) {
    throw PreconditionError("orientation entropy: graph has no edges");
  }
  return entropy_of_counts(o.indegrees());
}

namespace detail {

inline std::vector<int> positions_of(const Graph& g,
                                     std::span<const Vertex> order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) {
    throw ValidationError("orientation: order is not a vertex permutation");
  }
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    if (v < 0 || v >= n || position[v] >= 0) {
      throw ValidationError("orientation: order is not a vertex permutation");
    }
    position[v] = i;
  }
  return position;
}

// Head of edge {u, v} in the biased orientation: the strictly higher-degree
// endpoint, else the one appearing later in the order.
inline Vertex biased_head(const Graph& g, std::span<const int> position,
                          Vertex u, Vertex v) {
  const int du = g.degree(u);
  const int dv = g.degree(v);
  if (du != dv) return du > dv ? u : v;
  return position[u] > position[v] ? u : v;
}

}  // namespace detail

inline std::vector<Vertex> identity_order(int n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

inline Orientation biased_orientation(const Graph& g,
                                      std::span<const Vertex> order) {
  const auto position = detail::positions_of(g, order);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(g.num_edges()));
  for (const Edge& e : g.edges()) {
    const Vertex head = detail::biased_head(g, position, e.u, e.v);
    arcs.push_back({head == e.u ? e.v : e.u, head});
  }
  return Orientation(g, std::move(arcs));
}

inline Orientation biased_orientation(const Graph& g) {
  return biased_orientation(g, identity_order(g.num_vertices()));
}

inline constexpr std::uint64_t kDefaultOrientationOracleLimit =
    std::uint64_t{1} << 22;

// Minimum-entropy orientation over all 2^m direction choices. Among optima,
// returns the one whose head sequence is lexicographically smallest.
inline Orientation exact_orientation(
    const Graph& g, std::uint64_t limit = kDefaultOrientationOracleLimit) {
  const int m = g.num_edges();
  if (m >= 63 || (std::uint64_t{1} << m) > limit) {
    throw BudgetExceeded("orientation oracle: 2^" + std::to_string(m) +
                         " orientations exceed the budget of " +
                         std::to_string(limit));
  }
  // Entropy is log2 m - (1/m) sum rho log2 rho, so the search maximizes the
  // sum, maintained incrementally. plogp[k] = k log2 k.
  std::vector<double> plogp(static_cast<std::size_t>(m) + 2, 0.0);
  for (int k = 1; k <= m + 1; ++k) plogp[k] = xlog2x(static_cast<double>(k));

  std::vector<int> indegree(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<Vertex> heads(static_cast<std::size_t>(m));
  std::vector<Vertex> best_heads;
  double best_sum = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  const auto edges = g.edges();

  const auto search = [&](auto&& self, int i) -> void {
    if (i == m) {
      if (sum > best_sum + kDominanceSlack) {
        best_sum = sum;
        best_heads = heads;
      }
      return;
    }
    for (Vertex head : {edges[i].u, edges[i].v}) {
      const int before = indegree[head];
      sum += plogp[before + 1] - plogp[before];
      ++indegree[head];
      heads[i] = head;
      self(self, i + 1);
      --indegree[head];
      sum -= plogp[before + 1] - plogp[before];
    }
  };
  search(search, 0);

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Vertex head = best_heads[i];
    arcs.push_back({head == edges[i].u ? edges[i].v : edges[i].u, head});
  }
  return Orientation(g, std::move(arcs));
}

// Number of samples s with 2 exp(-2 s eps^2 / B^2) <= delta, where
// B = max(Delta log2 Delta, 1) bounds rho log2 rho.
inline std::uint64_t sample_count(double epsilon, double delta,
                                  int max_degree) {
  if (!(epsilon > 0.0)) throw ValidationError("sample count: epsilon <= 0");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("sample count: delta outside (0, 1)");
  }
  if (max_degree < 1) throw ValidationError("sample count: max degree < 1");
  const double range =
      std::max(xlog2x(static_cast<double>(max_degree)), 1.0);
  const double s =
      std::ceil(range * range / (2.0 * epsilon * epsilon) * std::log(2.0 / delta));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(s));
}

struct EstimatorParams {
  double epsilon = 0.5;
  double delta = 0.05;
  std::uint64_t seed = 0;
  // Explicit sample count; derived from sample_count() when absent.
  std::optional<std::uint64_t> samples;
  bool one_sided = false;
  // Visit every vertex exactly once instead of sampling (s = n).
  bool full_sweep = false;
};

struct EntropyEstimate {
  double value = 0.0;  // H, or H + epsilon when one-sided
  std::uint64_t samples = 0;
  double sampled_sum = 0.0;  // sum over samples of rho log2 rho
};

// Indegree of v in the identity-order biased orientation, computed from the
// neighborhood of v alone.
inline int local_biased_indegree(const Graph& g, Vertex v) {
  const int dv = g.degree(v);
  int indegree = 0;
  for (Vertex w : g.neighbors(v)) {
    const int dw = g.degree(w);
    if (dv > dw || (dv == dw && v > w)) ++indegree;
  }
  return indegree;
}

// Sublinear estimate of the minimum orientation entropy:
// H = log2 m - n/(s m) * sum_i rho(v_i) log2 rho(v_i) over s uniform samples
// (with replacement) of the identity-order biased orientation.
inline EntropyEstimate estimate_entropy(const Graph& g,
                                        const EstimatorParams& params) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (n < 1 || m < n) {
    throw PreconditionError(
        "estimator requires at least as many edges as vertices (m >= n >= 1)");
  }
  if (!(params.epsilon > 0.0)) throw ValidationError("estimator: epsilon <= 0");
  if (!(params.delta > 0.0 && params.delta < 1.0)) {
    throw ValidationError("estimator: delta outside (0, 1)");
  }

  EntropyEstimate result;
  std::vector<Vertex> picks;
  if (params.full_sweep) {
    picks = identity_order(n);
  } else {
    result.samples = params.samples.value_or(
        sample_count(params.epsilon, params.delta, g.max_degree()));
    if (result.samples == 0) throw ValidationError("estimator: zero samples");
    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    picks.reserve(result.samples);
    for (std::uint64_t i = 0; i < result.samples; ++i) {
      picks.push_back(pick(rng));
    }
  }
  result.samples = picks.size();

  // Neumaier-compensated sum.
  double sum = 0.0;
  double compensation = 0.0;
  for (Vertex v : picks) {
    const double term = xlog2x(static_cast<double>(local_biased_indegree(g, v)));
    const double t = sum + term;
    compensation += std::abs(sum) >= std::abs(term) ? (sum - t) + term
                                                    : (term - t) + sum;
    sum = t;
  }
  result.sampled_sum = sum + compensation;

  const double s = static_cast<double>(result.samples);
  result.value = std::log2(static_cast<double>(m)) -
                 static_cast<double>(n) / (s * m) * result.sampled_sum;
  if (params.one_sided) result.value += params.epsilon;
  return result;
}

}  // namespace minent
