#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minent/entropy.hpp"
#include "minent/errors.hpp"

namespace minent {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph, immutable after construction. Edges are stored
// normalized (u < v) in input order; neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges,
        std::optional<std::vector<double>> weights = std::nullopt)
      : n_(n), edges_(std::move(edges)), weights_(std::move(weights)) {
    if (n_ < 0) throw ValidationError("graph: negative vertex count");
    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (Edge& e : edges_) {
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
        throw ValidationError("graph: edge (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ") out of range");
      }
      if (e.u == e.v) {
        throw ValidationError("graph: self-loop at " + std::to_string(e.u));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
        throw ValidationError("graph: duplicate edge");
      }
    }
    if (weights_) {
      if (static_cast<int>(weights_->size()) != n_) {
        throw ValidationError("graph: expected " + std::to_string(n_) +
                              " weights, got " +
                              std::to_string(weights_->size()));
      }
      double total = 0.0;
      for (double w : *weights_) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
          throw ValidationError("graph: negative or non-finite weight");
        }
        total += w;
      }
      if (std::abs(total - 1.0) > kProbabilityTolerance) {
        throw ValidationError("graph: weights sum to " +
                              std::to_string(total) + ", expected 1");
      }
    }
  }

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[v].size());
  }

  int max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  bool weighted() const noexcept { return weights_.has_value(); }
  const std::optional<std::vector<double>>& weights() const noexcept {
    return weights_;
  }
  // w(v); uniform 1/n when the graph carries no weights.
  double weight(Vertex v) const {
    return weights_ ? (*weights_)[v] : 1.0 / static_cast<double>(n_);
  }

  Graph complement() const {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (!has_edge(u, v)) edges.push_back({u, v});
      }
    }
    return Graph(n_, std::move(edges), weights_);
  }

  // Subgraph induced by `vertices` (relabelled 0..k-1 in the given order).
  // Weights are dropped since they no longer sum to one.
  Graph induced(std::span<const Vertex> vertices) const {
    std::vector<int> position(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      position[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : edges_) {
      if (position[e.u] >= 0 && position[e.v] >= 0) {
        edges.push_back({position[e.u], position[e.v]});
      }
    }
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
  }

  bool is_independent_set(std::span<const Vertex> set) const {
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (set[i] == set[j] || has_edge(set[i], set[j])) return false;
      }
    }
    return true;
  }

  // color[v] for every vertex; adjacent vertices must differ.
  bool is_proper_coloring(std::span<const int> color) const {
    if (static_cast<int>(color.size()) != n_) return false;
    for (const Edge& e : edges_) {
      if (color[e.u] == color[e.v]) return false;
    }
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.weights_ == b.weights_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::optional<std::vector<double>> weights_;
};

}  // namespace minent
