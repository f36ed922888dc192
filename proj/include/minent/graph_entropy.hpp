#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "minent/coloring.hpp"
#include "minent/entropy.hpp"
#include "minent/errors.hpp"
#include "minent/graph.hpp"

namespace minent {

inline constexpr std::uint64_t kDefaultMisEnumerationLimit = 100'000;

// All maximal independent sets, each sorted, in lexicographic order.
inline std::vector<std::vector<Vertex>> enumerate_maximal_independent_sets(
    const Graph& g, std::uint64_t limit = kDefaultMisEnumerationLimit) {
  using detail::Mask;
  const int n = g.num_vertices();
  if (n == 0) return {{}};
  const auto nbr = detail::neighbor_masks(g);
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  // Non-neighbors: maximal independent sets of g are maximal cliques here.
  std::vector<Mask> compatible(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) compatible[v] = all & ~nbr[v] & ~(Mask{1} << v);

  std::vector<Mask> found;
  // Bron-Kerbosch with Tomita pivoting.
  const auto expand = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
    if (!p && !x) {
      if (found.size() >= limit) {
        throw BudgetExceeded("more than " + std::to_string(limit) +
                             " maximal independent sets");
      }
      found.push_back(r);
      return;
    }
    Mask px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (Mask scan = px; scan; scan &= scan - 1) {
      const int u = std::countr_zero(scan);
      const int cover = std::popcount(p & compatible[u]);
      if (cover > best) {
        best = cover;
        pivot = u;
      }
    }
    for (Mask cand = p & ~compatible[pivot]; cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      const Mask bit = Mask{1} << v;
      self(self, r | bit, p & compatible[v], x & compatible[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  expand(expand, 0, all, 0);

  std::vector<std::vector<Vertex>> sets;
  sets.reserve(found.size());
  for (Mask m : found) sets.push_back(detail::mask_to_vertices(m));
  std::sort(sets.begin(), sets.end());
  return sets;
}

struct EntropyWitness {
  std::vector<std::vector<Vertex>> support;  // independent sets with q > 0
  std::vector<double> q;
  std::vector<double> p;  // vertex marginals
  double value = 0.0;     // -(1/n) sum log2 p_v
};

struct GraphEntropyResult {
  double H = 0.0;
  double gap = 0.0;  // conditional-gradient duality gap at termination
  int iterations = 0;
  EntropyWitness witness;
  std::vector<double> objective_trace;
};

struct GraphEntropyOptions {
  double tol = 1e-6;
  int max_iterations = 200'000;
  std::uint64_t enumeration_limit = kDefaultMisEnumerationLimit;
};

namespace detail {

inline double mean_neg_log2(const std::vector<double>& p) {
  double sum = 0.0;
  for (double pv : p) sum -= std::log2(pv);
  return sum / static_cast<double>(p.size());
}

}  // namespace detail

// H(G) = min over p in STAB(G) of -(1/n) sum_v log2 p_v, with p a convex
// combination of maximal independent sets. Solved by pairwise conditional
// gradient with exact line search; the linear subproblem is a max-weight
// independent set over the enumerated family.
inline GraphEntropyResult graph_entropy(const Graph& g,
                                        const GraphEntropyOptions& options = {}) {
  using detail::Mask;
  const int n = g.num_vertices();
  if (n == 0) throw ValidationError("graph entropy: empty graph");
  if (!(options.tol > 0.0)) throw ValidationError("graph entropy: tol <= 0");

  const auto sets = enumerate_maximal_independent_sets(g, options.enumeration_limit);
  const std::size_t k = sets.size();
  std::vector<Mask> masks(k, 0);
  for (std::size_t s = 0; s < k; ++s) {
    for (Vertex v : sets[s]) masks[s] |= Mask{1} << v;
  }

  std::vector<double> q(k, 1.0 / static_cast<double>(k));
  std::vector<double> p(static_cast<std::size_t>(n), 0.0);
  const auto recompute_marginals = [&] {
    std::fill(p.begin(), p.end(), 0.0);
    for (std::size_t s = 0; s < k; ++s) {
      for (Vertex v : sets[s]) p[v] += q[s];
    }
  };
  recompute_marginals();

  const double scale = 1.0 / (static_cast<double>(n) * std::numbers::ln2);
  GraphEntropyResult result;
  std::vector<double> inv(static_cast<std::size_t>(n));
  std::vector<double> direction(static_cast<std::size_t>(n));

  for (int it = 0;; ++it) {
    const double value = detail::mean_neg_log2(p);
    result.objective_trace.push_back(value);
    for (int v = 0; v < n; ++v) inv[v] = 1.0 / p[v];
    const auto score = [&](std::size_t s) {
      double total = 0.0;
      for (Vertex v : sets[s]) total += inv[v];
      return total;
    };

    std::size_t toward = 0;
    std::size_t away = k;
    double toward_score = -1.0;
    double away_score = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < k; ++s) {
      const double sc = score(s);
      if (sc > toward_score) {
        toward_score = sc;
        toward = s;
      }
      if (q[s] > 0.0 && sc < away_score) {
        away_score = sc;
        away = s;
      }
    }
    const double gap = std::max(0.0, scale * (toward_score - n));
    result.gap = gap;
    result.iterations = it;
    result.H = value;
    if (gap <= options.tol) break;
    if (it >= options.max_iterations) {
      throw ConvergenceError("graph entropy did not converge", value, gap);
    }

    // Move mass from the away set to the toward set.
    const double max_step = q[away];
    for (int v = 0; v < n; ++v) {
      const bool in_toward = masks[toward] >> v & 1U;
      const bool in_away = masks[away] >> v & 1U;
      direction[v] = static_cast<double>(in_toward) - static_cast<double>(in_away);
    }
    // Derivative of -(1/n) sum log2(p + t d) along the segment, up to scale.
    const auto slope = [&](double t) {
      double total = 0.0;
      for (int v = 0; v < n; ++v) {
        if (direction[v] == 0.0) continue;
        const double pv = p[v] + t * direction[v];
        if (pv <= 0.0) return std::numeric_limits<double>::infinity();
        total -= direction[v] / pv;
      }
      return total;
    };
    double step;
    if (slope(max_step) <= 0.0) {
      step = max_step;
    } else {
      double lo = 0.0;
      double hi = max_step;
      for (int b = 0; b < 100 && hi - lo > 1e-17; ++b) {
        const double mid = 0.5 * (lo + hi);
        (slope(mid) > 0.0 ? hi : lo) = mid;
      }
      step = lo;
    }
    if (step <= 0.0) {
      throw ConvergenceError("graph entropy: line search stalled", value, gap);
    }
    q[toward] += step;
    q[away] = step == max_step ? 0.0 : q[away] - step;
    if (it % 64 == 63) {
      recompute_marginals();
    } else {
      for (int v = 0; v < n; ++v) p[v] += step * direction[v];
    }
  }

  EntropyWitness& w = result.witness;
  for (std::size_t s = 0; s < k; ++s) {
    if (q[s] > 0.0) {
      w.support.push_back(sets[s]);
      w.q.push_back(q[s]);
    }
  }
  double total = 0.0;
  for (double qs : w.q) total += qs;
  for (double& qs : w.q) qs /= total;
  w.p.assign(static_cast<std::size_t>(n), 0.0);
  for (std::size_t s = 0; s < w.support.size(); ++s) {
    for (Vertex v : w.support[s]) w.p[v] += w.q[s];
  }
  w.value = detail::mean_neg_log2(w.p);
  result.H = w.value;
  return result;
}

// H(G) + H(complement) - log2 n; zero on perfect graphs.
inline double splitting_gap(const Graph& g,
                            const GraphEntropyOptions& options = {}) {
  const double h = graph_entropy(g, options).H;
  const double hc = graph_entropy(g.complement(), options).H;
  return h + hc - std::log2(static_cast<double>(g.num_vertices()));
}

struct GreedyEntropyReport {
  double g_bits = 0.0;
  double H_bits = 0.0;
  double bound_rhs = 0.0;
  bool bound_holds = false;
  std::optional<double> chromatic_bits;  // when the exact oracle fits
  bool relaxation_holds = true;          // H <= chromatic entropy (+ tol)
};

inline constexpr double kDefaultGreedyBoundConstant = 4.0;

// Compares the exact-oracle greedy coloring entropy g with
// H(G) + log2(H(G) + 1) + constant.
inline GreedyEntropyReport greedy_vs_entropy(
    const Graph& g, double constant = kDefaultGreedyBoundConstant,
    const GraphEntropyOptions& options = {},
    std::uint64_t coloring_node_limit = kDefaultColoringNodeLimit) {
  GreedyEntropyReport report;
  report.g_bits = coloring_entropy(g, greedy_coloring(g, MisOracle::kExact));
  report.H_bits = graph_entropy(g, options).H;
  report.bound_rhs = report.H_bits + std::log2(report.H_bits + 1.0) + constant;
  report.bound_holds = report.g_bits <= report.bound_rhs + kEntropyTolerance;
  try {
    report.chromatic_bits =
        coloring_entropy(g, exact_coloring(g, coloring_node_limit));
  } catch (const BudgetExceeded&) {
    report.chromatic_bits.reset();
  }
  const double chromatic = report.chromatic_bits.value_or(report.g_bits);
  report.relaxation_holds = report.H_bits - options.tol <= chromatic + kEntropyTolerance;
  return report;
}

}  // namespace minent
