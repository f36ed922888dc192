#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "minent/errors.hpp"
#include "minent/graph.hpp"

namespace minent {

using Rational = boost::rational<std::int64_t>;

// Open interval (lo, hi) with exact endpoints.
struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Open intervals intersect iff max(lo) < min(hi); touching endpoints do not.
inline bool intersects(const Interval& a, const Interval& b) {
  return std::max(a.lo, b.lo) < std::min(a.hi, b.hi);
}

class IntervalSet {
 public:
  IntervalSet() = default;

  explicit IntervalSet(std::vector<Interval> intervals)
      : intervals_(std::move(intervals)) {
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
      if (!(intervals_[i].lo < intervals_[i].hi)) {
        throw ValidationError("intervals: interval " + std::to_string(i) +
                              " has lo >= hi");
      }
    }
  }

  std::size_t size() const noexcept { return intervals_.size(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  const std::vector<Interval>& intervals() const noexcept {
    return intervals_;
  }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

inline Graph interval_graph(const IntervalSet& iv) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(iv.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (intersects(iv[u], iv[v])) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

// Largest number of intervals among `members` sharing a common point. For
// open intervals the maximum is attained just right of some left endpoint.
inline int max_point_depth(const IntervalSet& iv,
                           const std::vector<int>& members) {
  int best = 0;
  for (int a : members) {
    const Rational& x = iv[a].lo;
    int depth = 0;
    for (int b : members) {
      if (iv[b].lo <= x && x < iv[b].hi) ++depth;
    }
    best = std::max(best, depth);
  }
  return best;
}

}  // namespace minent
