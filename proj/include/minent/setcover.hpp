#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "minent/entropy.hpp"
#include "minent/errors.hpp"
#include "minent/set_system.hpp"

namespace minent {

// phi: element -> index of a set containing it, plus the induced class sizes.
class CoverAssignment {
 public:
  CoverAssignment() = default;

  CoverAssignment(const SetSystem& s, std::vector<int> assignment)
      : assignment_(std::move(assignment)),
        counts_(static_cast<std::size_t>(s.num_sets()), 0) {
    if (static_cast<int>(assignment_.size()) != s.universe_size()) {
      throw FeasibilityError("cover: assignment has " +
                             std::to_string(assignment_.size()) +
                             " entries for a universe of " +
                             std::to_string(s.universe_size()));
    }
    for (Element x = 0; x < s.universe_size(); ++x) {
      const int i = assignment_[x];
      if (i < 0 || i >= s.num_sets() || !s.contains(i, x)) {
        throw FeasibilityError("cover: element " + std::to_string(x) +
                               " is not a member of set " +
                               std::to_string(i));
      }
      ++counts_[i];
    }
  }

  std::span<const int> assignment() const noexcept { return assignment_; }
  std::span<const Count> counts() const noexcept { return counts_; }
  int universe_size() const noexcept {
    return static_cast<int>(assignment_.size());
  }

  friend bool operator==(const CoverAssignment&,
                         const CoverAssignment&) = default;

 private:
  std::vector<int> assignment_;
  CountVector counts_;
};

struct GreedyRound {
  int set_index;
  std::vector<Element> covered;  // elements first covered in this round
};

struct GreedyTrace {
  std::vector<GreedyRound> rounds;
};

struct GreedyCover {
  CoverAssignment assignment;
  GreedyTrace trace;
};

struct DualCertificate {
  std::vector<double> y;
  double greedy_entropy = 0.0;
  double sum_y = 0.0;
};

struct DualViolation {
  int set_index;
  std::vector<Element> subset;
  double lhs;
  double rhs;
};

struct DualFeasibilityReport {
  std::uint64_t checked = 0;
  bool exhaustive = true;
  std::vector<DualViolation> violations;
};

inline double cover_entropy(const CoverAssignment& a) {
  return entropy_of_counts(a.counts());
}

// log2 of prod_i p_i^{count_i}; equals -n * cover_entropy(a).
inline double likelihood(const CoverAssignment& a) {
  const double n = static_cast<double>(a.universe_size());
  double ll = 0.0;
  for (Count c : a.counts()) {
    if (c > 0) ll += static_cast<double>(c) * std::log2(c / n);
  }
  return ll;
}

// Repeatedly takes the set covering the most uncovered elements (lowest
// index on ties) and assigns those elements to it.
inline GreedyCover greedy_cover(const SetSystem& s) {
  const int n = s.universe_size();
  std::vector<int> assignment(static_cast<std::size_t>(n), -1);
  GreedyTrace trace;
  int uncovered = n;
  while (uncovered > 0) {
    int best_set = -1;
    int best_gain = 0;
    for (int i = 0; i < s.num_sets(); ++i) {
      int gain = 0;
      for (Element x : s.set(i)) gain += assignment[x] < 0 ? 1 : 0;
      if (gain > best_gain) {
        best_gain = gain;
        best_set = i;
      }
    }
    GreedyRound round{best_set, {}};
    for (Element x : s.set(best_set)) {
      if (assignment[x] < 0) {
        assignment[x] = best_set;
        round.covered.push_back(x);
      }
    }
    uncovered -= best_gain;
    trace.rounds.push_back(std::move(round));
  }
  return {CoverAssignment(s, std::move(assignment)), std::move(trace)};
}

inline constexpr std::uint64_t kDefaultCoverOracleLimit = 10'000'000;

namespace detail {

struct CountVectorHash {
  std::size_t operator()(const CountVector& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

struct ExactCoverSearch {
  const SetSystem& system;
  CountVector counts;
  std::vector<int> current;
  std::vector<int> best;
  double best_entropy = std::numeric_limits<double>::infinity();
  std::vector<std::unordered_set<CountVector, CountVectorHash>> seen;

  void run(int x) {
    if (x == system.universe_size()) {
      const double h = entropy_of_counts(counts);
      if (h < best_entropy - kDominanceSlack) {
        best_entropy = h;
        best = current;
      }
      return;
    }
    // The completion of a prefix depends only on its count vector. The
    // first visit of a state precedes every later one in lexicographic
    // order, so repeated states cannot yield a new canonical optimum.
    if (!seen[x].insert(counts).second) return;
    for (int i : system.sets_containing(x)) {
      ++counts[i];
      current[x] = i;
      run(x + 1);
      --counts[i];
    }
  }
};

}  // namespace detail

// Minimum-entropy assignment by exhaustive search over per-element choices.
// Returns the lexicographically smallest optimal assignment.
inline CoverAssignment exact_cover(
    const SetSystem& s, std::uint64_t limit = kDefaultCoverOracleLimit) {
  std::uint64_t combinations = 1;
  for (Element x = 0; x < s.universe_size(); ++x) {
    const auto choices = static_cast<std::uint64_t>(s.sets_containing(x).size());
    if (combinations > limit / choices) {
      throw BudgetExceeded(
          "instance too large for oracle: more than " + std::to_string(limit) +
          " assignment combinations");
    }
    combinations *= choices;
  }
  const auto n = static_cast<std::size_t>(s.universe_size());
  detail::ExactCoverSearch search{
      s, CountVector(static_cast<std::size_t>(s.num_sets()), 0),
      std::vector<int>(n, -1), {}, std::numeric_limits<double>::infinity(),
      std::vector<std::unordered_set<CountVector, detail::CountVectorHash>>(
          n + 1)};
  search.run(0);
  return CoverAssignment(s, std::move(search.best));
}

// y_v = -(1/n) log2(|S_i| e / n) for v first covered in greedy round i.
inline DualCertificate dual_certificate(const SetSystem& s,
                                        const GreedyTrace& trace) {
  const int n = s.universe_size();
  std::vector<int> round_of(static_cast<std::size_t>(n), -1);
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    const GreedyRound& round = trace.rounds[r];
    if (round.set_index < 0 || round.set_index >= s.num_sets() ||
        round.covered.empty()) {
      throw ValidationError("certificate: round " + std::to_string(r) +
                            " does not match the set system");
    }
    for (Element x : round.covered) {
      if (x < 0 || x >= n || !s.contains(round.set_index, x) ||
          round_of[x] >= 0) {
        throw ValidationError("certificate: round " + std::to_string(r) +
                              " does not match the set system");
      }
      round_of[x] = static_cast<int>(r);
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (round_of[x] < 0) {
      throw ValidationError("certificate: element " + std::to_string(x) +
                            " is not covered by the trace");
    }
  }

  const double nd = static_cast<double>(n);
  DualCertificate cert;
  cert.y.resize(static_cast<std::size_t>(n));
  for (Element x = 0; x < n; ++x) {
    const double size =
        static_cast<double>(trace.rounds[round_of[x]].covered.size());
    cert.y[x] = -(std::log2(size / nd) + kLog2E) / nd;
  }
  for (const GreedyRound& round : trace.rounds) {
    cert.greedy_entropy -= xlog2x(static_cast<double>(round.covered.size()) / nd);
  }
  for (double y : cert.y) cert.sum_y += y;
  return cert;
}

inline constexpr std::uint64_t kDefaultSubsetBudget = std::uint64_t{1} << 22;

// Checks sum_{v in S} y_v <= -(|S|/n) log2(|S|/n) for subsets S of input
// sets: all of them when the total count fits the budget, otherwise every
// subset of sets with at most 20 members plus `subset_budget` random subsets
// of the larger sets.
inline DualFeasibilityReport verify_dual_feasibility(
    const SetSystem& s, const DualCertificate& cert,
    std::uint64_t subset_budget = kDefaultSubsetBudget,
    std::uint64_t seed = 0) {
  constexpr int kMaxExhaustiveSize = 20;
  const double n = static_cast<double>(s.universe_size());
  const auto rhs = [n](std::size_t size) {
    return -xlog2x(static_cast<double>(size) / n);
  };

  DualFeasibilityReport report;
  std::uint64_t total = 0;
  for (int i = 0; i < s.num_sets(); ++i) {
    const auto size = s.set(i).size();
    if (size >= 63) {
      total = std::numeric_limits<std::uint64_t>::max();
      break;
    }
    total += std::uint64_t{1} << size;
    if (total > subset_budget) break;
  }
  report.exhaustive = total <= subset_budget;

  const auto check = [&](int set_index, std::vector<Element> subset,
                         double lhs) {
    ++report.checked;
    const double bound = rhs(subset.size());
    if (lhs > bound + kEntropyTolerance) {
      report.violations.push_back(
          {set_index, std::move(subset), lhs, bound});
    }
  };

  std::vector<int> large_sets;
  std::vector<double> sums;
  for (int i = 0; i < s.num_sets(); ++i) {
    const auto members = s.set(i);
    const int size = static_cast<int>(members.size());
    if (!report.exhaustive && size > kMaxExhaustiveSize) {
      large_sets.push_back(i);
      continue;
    }
    const std::uint32_t masks = std::uint32_t{1} << size;
    sums.assign(masks, 0.0);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      if (mask != 0) {
        const int low = std::countr_zero(mask);
        sums[mask] = sums[mask & (mask - 1)] + cert.y[members[low]];
      }
      const double bound = rhs(static_cast<std::size_t>(std::popcount(mask)));
      ++report.checked;
      if (sums[mask] > bound + kEntropyTolerance) {
        std::vector<Element> subset;
        for (int b = 0; b < size; ++b) {
          if (mask >> b & 1U) subset.push_back(members[b]);
        }
        report.violations.push_back({i, std::move(subset), sums[mask], bound});
      }
    }
  }

  if (!large_sets.empty()) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (std::uint64_t t = 0; t < subset_budget; ++t) {
      const int i = large_sets[t % large_sets.size()];
      std::vector<Element> subset;
      double lhs = 0.0;
      for (Element x : s.set(i)) {
        if (coin(rng)) {
          subset.push_back(x);
          lhs += cert.y[x];
        }
      }
      check(i, std::move(subset), lhs);
    }
  }
  return report;
}

}  // namespace minent
