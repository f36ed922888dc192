#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "minent/errors.hpp"

namespace minent {

using Element = int;

// Ground set {0, ..., universe_size-1} and a collection of subsets that
// together cover it. Members of each set are kept sorted.
class SetSystem {
 public:
  SetSystem() = default;

  SetSystem(int universe_size, std::vector<std::vector<Element>> sets)
      : universe_size_(universe_size), sets_(std::move(sets)) {
    if (universe_size_ < 0) {
      throw ValidationError("setcover: negative universe size");
    }
    containing_.assign(static_cast<std::size_t>(universe_size_), {});
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      auto& members = sets_[i];
      std::sort(members.begin(), members.end());
      if (std::adjacent_find(members.begin(), members.end()) !=
          members.end()) {
        throw ValidationError("setcover: set " + std::to_string(i) +
                              " lists an element twice");
      }
      for (Element x : members) {
        if (x < 0 || x >= universe_size_) {
          throw ValidationError("setcover: element " + std::to_string(x) +
                                " out of range in set " + std::to_string(i));
        }
        containing_[x].push_back(static_cast<int>(i));
      }
    }
    for (Element x = 0; x < universe_size_; ++x) {
      if (containing_[x].empty()) {
        throw ValidationError("setcover: element " + std::to_string(x) +
                              " is not covered by any set");
      }
    }
  }

  int universe_size() const noexcept { return universe_size_; }
  int num_sets() const noexcept { return static_cast<int>(sets_.size()); }
  std::span<const Element> set(int i) const { return sets_[i]; }
  const std::vector<std::vector<Element>>& sets() const noexcept {
    return sets_;
  }
  // Indices of the sets containing x, ascending.
  std::span<const int> sets_containing(Element x) const {
    return containing_[x];
  }
  bool contains(int set_index, Element x) const {
    const auto& members = sets_[set_index];
    return std::binary_search(members.begin(), members.end(), x);
  }

  friend bool operator==(const SetSystem& a, const SetSystem& b) {
    return a.universe_size_ == b.universe_size_ && a.sets_ == b.sets_;
  }

 private:
  int universe_size_ = 0;
  std::vector<std::vector<Element>> sets_;
  std::vector<std::vector<int>> containing_;
};

}  // namespace minent
