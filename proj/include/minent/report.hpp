#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include <json.hpp>

#include "minent/coloring.hpp"
#include "minent/graph_entropy.hpp"
#include "minent/orientation.hpp"
#include "minent/setcover.hpp"

// JSON encodings of solver results. Doubles are written in shortest
// round-trip form, so parsing a report reproduces every value bit for bit.

namespace minent {

using Json = nlohmann::json;

inline std::string fnv1a_digest(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

inline Json to_json(const CoverAssignment& a) {
  return {{"entropy_bits", cover_entropy(a)},
          {"counts", std::vector<Count>(a.counts().begin(), a.counts().end())},
          {"assignment", std::vector<int>(a.assignment().begin(), a.assignment().end())},
          {"log_likelihood", likelihood(a)}};
}

inline Json to_json(const GreedyTrace& t) {
  Json rounds = Json::array();
  for (const GreedyRound& r : t.rounds) {
    rounds.push_back({{"set", r.set_index}, {"covered", r.covered}});
  }
  return rounds;
}

inline Json to_json(const DualCertificate& c) {
  return {{"y", c.y}, {"sum_y", c.sum_y}, {"g", c.greedy_entropy}};
}

inline Json to_json(const DualFeasibilityReport& r) {
  Json violations = Json::array();
  for (const DualViolation& v : r.violations) {
    violations.push_back({{"set", v.set_index},
                          {"subset", v.subset},
                          {"lhs", v.lhs},
                          {"rhs", v.rhs}});
  }
  return {{"checked", r.checked},
          {"exhaustive", r.exhaustive},
          {"violations", std::move(violations)}};
}

inline Json to_json(const Graph& g, const Orientation& o) {
  Json arcs = Json::array();
  for (const Arc& a : o.arcs()) arcs.push_back({a.tail, a.head});
  return {{"entropy_bits", orientation_entropy(g, o)},
          {"indegrees", std::vector<Count>(o.indegrees().begin(), o.indegrees().end())},
          {"arcs", std::move(arcs)}};
}

inline Json to_json(const Graph& g, const Coloring& c) {
  return {{"entropy_bits", coloring_entropy(g, c)},
          {"colors", std::vector<int>(c.colors().begin(), c.colors().end())},
          {"classes", c.classes()}};
}

inline Json to_json(const GraphEntropyResult& r) {
  return {{"H_bits", r.H},
          {"gap", r.gap},
          {"iterations", r.iterations},
          {"witness",
           {{"support", r.witness.support},
            {"q", r.witness.q},
            {"p", r.witness.p},
            {"value", r.witness.value}}}};
}

inline Json check(std::string_view name, bool holds) {
  return {{"name", name}, {"holds", holds}};
}

}  // namespace minent
