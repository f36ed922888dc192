#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "minent/coloring.hpp"
#include "minent/errors.hpp"
#include "minent/graph.hpp"
#include "minent/set_system.hpp"

namespace minent {

// Genotypes over {0, 1, ?}, all of the same length.
class GenotypePanel {
 public:
  GenotypePanel() = default;

  explicit GenotypePanel(std::vector<std::string> genotypes)
      : genotypes_(std::move(genotypes)) {
    if (genotypes_.empty()) throw ValidationError("genotypes: empty panel");
    const std::size_t length = genotypes_.front().size();
    for (std::size_t i = 0; i < genotypes_.size(); ++i) {
      const std::string& g = genotypes_[i];
      if (g.size() != length) {
        throw ValidationError("genotypes: genotype " + std::to_string(i) +
                              " has length " + std::to_string(g.size()) +
                              ", expected " + std::to_string(length));
      }
      if (g.find_first_not_of("01?") != std::string::npos) {
        throw ValidationError("genotypes: genotype " + std::to_string(i) +
                              " has a character outside {0,1,?}");
      }
    }
  }

  const std::vector<std::string>& genotypes() const noexcept {
    return genotypes_;
  }
  std::size_t size() const noexcept { return genotypes_.size(); }

 private:
  std::vector<std::string> genotypes_;
};

inline constexpr int kDefaultWildcardCap = 20;
inline constexpr std::size_t kDefaultHaplotypeCap = 100'000;

// Binary strings agreeing with `genotype` on every non-? position, in
// lexicographic order.
inline std::vector<std::string> compatible_haplotypes(
    const std::string& genotype, int wildcard_cap = kDefaultWildcardCap) {
  std::vector<std::size_t> wildcards;
  for (std::size_t i = 0; i < genotype.size(); ++i) {
    const char c = genotype[i];
    if (c == '?') {
      wildcards.push_back(i);
    } else if (c != '0' && c != '1') {
      throw ParseError(std::string("genotype: invalid character '") + c + "'",
                       1, i + 1);
    }
  }
  if (static_cast<int>(wildcards.size()) > wildcard_cap) {
    throw BudgetExceeded("genotype has " + std::to_string(wildcards.size()) +
                         " wildcards; per-genotype limit is " +
                         std::to_string(wildcard_cap));
  }
  const std::uint64_t count = std::uint64_t{1} << wildcards.size();
  std::vector<std::string> out;
  out.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    std::string h = genotype;
    // The first wildcard is the most significant, giving lexicographic order.
    for (std::size_t w = 0; w < wildcards.size(); ++w) {
      h[wildcards[w]] = (bits >> (wildcards.size() - 1 - w)) & 1U ? '1' : '0';
    }
    out.push_back(std::move(h));
  }
  return out;
}

struct HaplotypeInstance {
  SetSystem system;  // universe = genotypes, one set per haplotype
  std::vector<std::string> haplotypes;
};

inline HaplotypeInstance haplotype_instance(
    const GenotypePanel& panel, std::size_t cap = kDefaultHaplotypeCap,
    int wildcard_cap = kDefaultWildcardCap) {
  std::map<std::string, std::vector<Element>> explains;
  for (std::size_t i = 0; i < panel.size(); ++i) {
    for (auto& h : compatible_haplotypes(panel.genotypes()[i], wildcard_cap)) {
      explains[std::move(h)].push_back(static_cast<Element>(i));
      if (explains.size() > cap) {
        throw BudgetExceeded(
            "more than " + std::to_string(cap) +
            " distinct haplotypes; lower the per-genotype wildcard limit");
      }
    }
  }
  HaplotypeInstance instance;
  std::vector<std::vector<Element>> sets;
  for (auto& [haplotype, members] : explains) {
    instance.haplotypes.push_back(haplotype);
    sets.push_back(std::move(members));
  }
  instance.system = SetSystem(static_cast<int>(panel.size()), std::move(sets));
  return instance;
}

// Joint distribution P(X = x, Y = y) as a row-per-x matrix.
class JointTable {
 public:
  JointTable() = default;

  JointTable(std::vector<std::string> x_labels,
             std::vector<std::string> y_labels,
             std::vector<std::vector<double>> probs)
      : x_labels_(std::move(x_labels)),
        y_labels_(std::move(y_labels)),
        probs_(std::move(probs)) {
    if (probs_.size() != x_labels_.size()) {
      throw ValidationError("joint table: row count does not match x labels");
    }
    double total = 0.0;
    for (std::size_t x = 0; x < probs_.size(); ++x) {
      if (probs_[x].size() != y_labels_.size()) {
        throw ValidationError("joint table: row " + x_labels_[x] +
                              " has the wrong number of columns");
      }
      double marginal = 0.0;
      for (double p : probs_[x]) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
          throw ValidationError("joint table: negative or non-finite entry");
        }
        marginal += p;
      }
      if (!(marginal > 0.0)) {
        throw ValidationError("joint table: symbol " + x_labels_[x] +
                              " has zero marginal probability");
      }
      total += marginal;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
      throw ValidationError("joint table: entries sum to " +
                            std::to_string(total) + ", expected 1");
    }
  }

  const std::vector<std::string>& x_labels() const noexcept { return x_labels_; }
  const std::vector<std::string>& y_labels() const noexcept { return y_labels_; }
  double operator()(std::size_t x, std::size_t y) const { return probs_[x][y]; }

  std::vector<double> x_marginal() const {
    std::vector<double> m;
    for (const auto& row : probs_) {
      double total = 0.0;
      for (double p : row) total += p;
      m.push_back(total);
    }
    return m;
  }

 private:
  std::vector<std::string> x_labels_;
  std::vector<std::string> y_labels_;
  std::vector<std::vector<double>> probs_;
};

// Symbols x, x' are adjacent when some y has P(x,y) > 0 and P(x',y) > 0.
// Vertices carry the marginal P(X = x) as weight.
inline Graph confusability_graph(const JointTable& t) {
  const std::size_t nx = t.x_labels().size();
  const std::size_t ny = t.y_labels().size();
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < nx; ++a) {
    for (std::size_t b = a + 1; b < nx; ++b) {
      for (std::size_t y = 0; y < ny; ++y) {
        if (t(a, y) > 0.0 && t(b, y) > 0.0) {
          edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
          break;
        }
      }
    }
  }
  return Graph(static_cast<int>(nx), std::move(edges), t.x_marginal());
}

// Rate of the code that sends the color of X: the coloring's entropy under
// the vertex weights.
inline double code_rate(const Graph& g, const Coloring& c) {
  if (!g.weighted()) {
    throw ValidationError("code rate: graph carries no symbol probabilities");
  }
  return coloring_entropy(g, c);
}

}  // namespace minent
