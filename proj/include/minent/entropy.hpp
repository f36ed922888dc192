#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "minent/errors.hpp"

namespace minent {

inline constexpr double kLog2E = std::numbers::log2e;  // 1.442695...
inline constexpr double kProbabilityTolerance = 1e-9;
inline constexpr double kEntropyTolerance = 1e-9;
inline constexpr double kDominanceSlack = 1e-12;

using Count = std::int64_t;
using CountVector = std::vector<Count>;

// x log2 x with 0 log 0 = 0.
inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// A finite probability vector. Entries are nonnegative and sum to one.
class Distribution {
 public:
  Distribution() = default;

  explicit Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw ValidationError("distribution: empty support");
    double total = 0.0;
    for (double p : probs_) {
      if (!(p >= 0.0) || !std::isfinite(p)) {
        throw ValidationError("distribution: entry " + std::to_string(p) +
                              " is not a nonnegative real");
      }
      total += p;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
      throw ValidationError("distribution: entries sum to " +
                            std::to_string(total) + ", expected 1");
    }
  }

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  // Entries in nonincreasing order.
  Distribution sorted_nonincreasing() const {
    Distribution d = *this;
    std::sort(d.probs_.begin(), d.probs_.end(), std::greater<>());
    return d;
  }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<double> probs_;
};

inline Distribution counts_to_distribution(std::span<const Count> counts) {
  Count total = 0;
  for (Count c : counts) {
    if (c < 0) throw ValidationError("counts: negative entry");
    total += c;
  }
  if (total == 0) throw ValidationError("counts: no positive entry");
  std::vector<double> probs;
  probs.reserve(counts.size());
  for (Count c : counts) {
    probs.push_back(static_cast<double>(c) / static_cast<double>(total));
  }
  return Distribution(std::move(probs));
}

// Shannon entropy in bits.
inline double entropy(const Distribution& d) {
  double h = 0.0;
  for (double p : d.probs()) h -= xlog2x(p);
  return std::max(h, 0.0);
}

// Entropy of the distribution counts / sum(counts). Counts are sorted first
// so that permutations of the same multiset give bit-identical results.
inline double entropy_of_counts(std::span<const Count> counts) {
  CountVector sorted;
  Count total = 0;
  for (Count c : counts) {
    if (c < 0) throw ValidationError("counts: negative entry");
    if (c > 0) sorted.push_back(c);
    total += c;
  }
  if (total == 0) throw ValidationError("counts: no positive entry");
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const double n = static_cast<double>(total);
  double h = 0.0;
  for (Count c : sorted) h -= xlog2x(static_cast<double>(c) / n);
  return std::max(h, 0.0);
}

// True iff every prefix sum of q is at most the matching prefix sum of r
// ("q is dominated by r"). Shorter vectors are padded with zeros.
inline bool dominates(const Distribution& r, const Distribution& q,
                      double slack = kDominanceSlack) {
  const std::size_t len = std::max(r.size(), q.size());
  double prefix_r = 0.0;
  double prefix_q = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    if (i < r.size()) prefix_r += r[i];
    if (i < q.size()) prefix_q += q[i];
    if (prefix_q > prefix_r + slack) return false;
  }
  return true;
}

// Exact dominance between count vectors, interpreted as r/sum(r) and
// q/sum(q). Prefix sums are compared by cross-multiplication.
inline bool dominates(std::span<const Count> r, std::span<const Count> q) {
  Count total_r = 0;
  Count total_q = 0;
  for (Count c : r) total_r += c;
  for (Count c : q) total_q += c;
  if (total_r <= 0 || total_q <= 0) {
    throw ValidationError("dominates: count vectors need positive totals");
  }
  const std::size_t len = std::max(r.size(), q.size());
  Count prefix_r = 0;
  Count prefix_q = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (i < r.size()) prefix_r += r[i];
    if (i < q.size()) prefix_q += q[i];
    // prefix_q / total_q <= prefix_r / total_r
    if (prefix_q * total_r > prefix_r * total_q) return false;
  }
  return true;
}

// Same rational distribution, ignoring trailing zeros.
inline bool same_distribution(std::span<const Count> r,
                              std::span<const Count> q) {
  return dominates(r, q) && dominates(q, r);
}

inline CountVector sorted_nonincreasing(CountVector counts) {
  std::sort(counts.begin(), counts.end(), std::greater<>());
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

}  // namespace minent
