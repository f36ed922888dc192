#pragma once

#include <charconv>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "minent/apps.hpp"
#include "minent/errors.hpp"
#include "minent/graph.hpp"
#include "minent/intervals.hpp"
#include "minent/set_system.hpp"

// Text formats:
//   graph <n> <m>            then m lines "<u> <v>", optional "weights w_0 ... w_{n-1}"
//   setcover <n> <k>         then k lines of element ids (blank line = empty set)
//   intervals <n>            then n lines "<lo_num>/<lo_den> <hi_num>/<hi_den>"
// Lines starting with '#' are comments.

namespace minent {

namespace io_detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

inline std::vector<Token> split(std::string_view line, char sep = ' ') {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const auto is_sep = [sep](char c) {
    return sep == ' ' ? (c == ' ' || c == '\t' || c == '\r') : c == sep;
  };
  if (sep == ' ') {
    while (i < line.size()) {
      while (i < line.size() && is_sep(line[i])) ++i;
      const std::size_t start = i;
      while (i < line.size() && !is_sep(line[i])) ++i;
      if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
    }
  } else {
    std::size_t start = 0;
    for (;;) {
      std::size_t end = line.find(sep, start);
      if (end == std::string_view::npos) end = line.size();
      std::string_view cell = line.substr(start, end - start);
      std::size_t col = start + 1;
      while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) {
        cell.remove_prefix(1);
        ++col;
      }
      while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' ||
                               cell.back() == '\r')) {
        cell.remove_suffix(1);
      }
      tokens.push_back({cell, col});
      if (end == line.size()) break;
      start = end + 1;
    }
  }
  return tokens;
}

// Every line with its number; text from '#' to end of line is dropped.
inline std::vector<Line> lines_of(std::string_view text, char sep = ' ') {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    out.push_back({number, split(line, sep)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline bool blank(const Line& line) {
  if (line.tokens.empty()) return true;
  for (const Token& t : line.tokens) {
    if (!t.text.empty()) return false;
  }
  return true;
}

template <typename T>
T parse_number(const Token& tok, std::size_t line, const char* what) {
  T value{};
  const char* begin = tok.text.data();
  const char* end = begin + tok.text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(std::string("expected ") + what + ", got '" +
                         std::string(tok.text) + "'",
                     line, tok.column);
  }
  return value;
}

inline Rational parse_rational(const Token& tok, std::size_t line) {
  const auto slash = tok.text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_number<std::int64_t>(tok, line, "a rational"));
  }
  const Token num{tok.text.substr(0, slash), tok.column};
  const Token den{tok.text.substr(slash + 1), tok.column + slash + 1};
  const auto n = parse_number<std::int64_t>(num, line, "a numerator");
  const auto d = parse_number<std::int64_t>(den, line, "a denominator");
  if (d == 0) throw ParseError("zero denominator", line, den.column);
  return Rational(n, d);
}

// Advances `i` past blank lines; returns nullptr at end of input.
inline const Line* next_content(const std::vector<Line>& lines, std::size_t& i) {
  while (i < lines.size() && blank(lines[i])) ++i;
  return i < lines.size() ? &lines[i++] : nullptr;
}

inline void expect_header(const Line* line, std::string_view keyword,
                          std::size_t fields) {
  if (line == nullptr) throw ParseError("missing header", 1, 1);
  if (line->tokens.front().text != keyword) {
    throw ParseError("expected header '" + std::string(keyword) + "'",
                     line->number, line->tokens.front().column);
  }
  if (line->tokens.size() != fields + 1) {
    throw ParseError("header '" + std::string(keyword) + "' takes " +
                         std::to_string(fields) + " fields",
                     line->number, line->tokens.front().column);
  }
}

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline void reject_trailing(const std::vector<Line>& lines, std::size_t i) {
  if (const Line* extra = next_content(lines, i)) {
    throw ParseError("unexpected trailing content", extra->number,
                     extra->tokens.front().column);
  }
}

}  // namespace io_detail

inline Graph parse_graph(std::string_view text) {
  using namespace io_detail;
  const auto lines = lines_of(text);
  std::size_t i = 0;
  const Line* header = next_content(lines, i);
  expect_header(header, "graph", 2);
  const int n = parse_number<int>(header->tokens[1], header->number, "a vertex count");
  const int m = parse_number<int>(header->tokens[2], header->number, "an edge count");
  if (n < 0 || m < 0) {
    throw ParseError("negative count in header", header->number,
                     header->tokens[1].column);
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (int e = 0; e < m; ++e) {
    const Line* line = next_content(lines, i);
    if (line == nullptr) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " +
                           std::to_string(e),
                       lines.back().number, 1);
    }
    if (line->tokens.size() != 2) {
      throw ParseError("edge line needs two vertex ids", line->number,
                       line->tokens.front().column);
    }
    const int u = parse_number<int>(line->tokens[0], line->number, "a vertex id");
    const int v = parse_number<int>(line->tokens[1], line->number, "a vertex id");
    for (int k = 0; k < 2; ++k) {
      const int id = k == 0 ? u : v;
      if (id < 0 || id >= n) {
        throw ParseError("vertex id " + std::to_string(id) + " out of range",
                         line->number, line->tokens[k].column);
      }
    }
    if (u == v) throw ParseError("self-loop", line->number, line->tokens[0].column);
    const Edge key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) {
      throw ParseError("duplicate edge", line->number, line->tokens[0].column);
    }
    edges.push_back({u, v});
  }
  std::optional<std::vector<double>> weights;
  std::size_t weights_line = i;
  if (const Line* line = next_content(lines, weights_line)) {
    if (line->tokens.front().text != "weights") {
      throw ParseError("unexpected trailing content", line->number,
                       line->tokens.front().column);
    }
    if (line->tokens.size() != static_cast<std::size_t>(n) + 1) {
      throw ParseError("weights line needs " + std::to_string(n) + " values",
                       line->number, line->tokens.front().column);
    }
    weights.emplace();
    for (std::size_t k = 1; k < line->tokens.size(); ++k) {
      weights->push_back(parse_number<double>(line->tokens[k], line->number, "a weight"));
    }
    reject_trailing(lines, weights_line);
  }
  try {
    return Graph(n, std::move(edges), std::move(weights));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), header->number, 1);
  }
}

inline std::string serialize_graph(const Graph& g) {
  std::string out = "graph " + std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  if (g.weighted()) {
    out += "weights";
    for (double w : *g.weights()) out += " " + io_detail::format_double(w);
    out += "\n";
  }
  return out;
}

inline SetSystem parse_setcover(std::string_view text) {
  using namespace io_detail;
  const auto lines = lines_of(text);
  std::size_t i = 0;
  const Line* header = next_content(lines, i);
  expect_header(header, "setcover", 2);
  const int n = parse_number<int>(header->tokens[1], header->number, "a universe size");
  const int k = parse_number<int>(header->tokens[2], header->number, "a set count");
  if (n < 0 || k < 0) {
    throw ParseError("negative count in header", header->number,
                     header->tokens[1].column);
  }
  std::vector<std::vector<Element>> sets;
  for (int s = 0; s < k; ++s) {
    if (i >= lines.size()) {
      throw ParseError("expected " + std::to_string(k) + " sets, found " +
                           std::to_string(s),
                       lines.back().number, 1);
    }
    const Line& line = lines[i++];
    std::vector<Element> members;
    std::set<Element> seen;
    for (const Token& tok : line.tokens) {
      const int x = parse_number<int>(tok, line.number, "an element id");
      if (x < 0 || x >= n) {
        throw ParseError("element id " + std::to_string(x) + " out of range",
                         line.number, tok.column);
      }
      if (!seen.insert(x).second) {
        throw ParseError("element listed twice", line.number, tok.column);
      }
      members.push_back(x);
    }
    sets.push_back(std::move(members));
  }
  reject_trailing(lines, i);
  try {
    return SetSystem(n, std::move(sets));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), header->number, 1);
  }
}

inline std::string serialize_setcover(const SetSystem& s) {
  std::string out = "setcover " + std::to_string(s.universe_size()) + " " +
                    std::to_string(s.num_sets()) + "\n";
  for (int i = 0; i < s.num_sets(); ++i) {
    bool first = true;
    for (Element x : s.set(i)) {
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
    }
    out += "\n";
  }
  return out;
}

inline IntervalSet parse_intervals(std::string_view text) {
  using namespace io_detail;
  const auto lines = lines_of(text);
  std::size_t i = 0;
  const Line* header = next_content(lines, i);
  expect_header(header, "intervals", 1);
  const int n = parse_number<int>(header->tokens[1], header->number, "an interval count");
  if (n < 0) {
    throw ParseError("negative count in header", header->number,
                     header->tokens[1].column);
  }
  std::vector<Interval> intervals;
  for (int k = 0; k < n; ++k) {
    const Line* line = next_content(lines, i);
    if (line == nullptr) {
      throw ParseError("expected " + std::to_string(n) + " intervals, found " +
                           std::to_string(k),
                       lines.back().number, 1);
    }
    if (line->tokens.size() != 2) {
      throw ParseError("interval line needs two endpoints", line->number,
                       line->tokens.front().column);
    }
    const Rational lo = parse_rational(line->tokens[0], line->number);
    const Rational hi = parse_rational(line->tokens[1], line->number);
    if (!(lo < hi)) {
      throw ParseError("interval needs lo < hi", line->number,
                       line->tokens[0].column);
    }
    intervals.push_back({lo, hi});
  }
  reject_trailing(lines, i);
  return IntervalSet(std::move(intervals));
}

inline std::string serialize_intervals(const IntervalSet& iv) {
  std::string out = "intervals " + std::to_string(iv.size()) + "\n";
  for (const Interval& x : iv.intervals()) {
    out += io_detail::format_rational(x.lo) + " " +
           io_detail::format_rational(x.hi) + "\n";
  }
  return out;
}

// One genotype per line.
inline GenotypePanel parse_genotypes(std::string_view text) {
  using namespace io_detail;
  std::vector<std::string> genotypes;
  std::size_t length = 0;
  for (const Line& line : lines_of(text)) {
    if (blank(line)) continue;
    if (line.tokens.size() != 1) {
      throw ParseError("one genotype per line", line.number, line.tokens[1].column);
    }
    const Token& tok = line.tokens.front();
    const auto bad = tok.text.find_first_not_of("01?");
    if (bad != std::string_view::npos) {
      throw ParseError("genotype characters must be 0, 1 or ?", line.number,
                       tok.column + bad);
    }
    if (!genotypes.empty() && tok.text.size() != length) {
      throw ParseError("genotype length differs from the first genotype",
                       line.number, tok.column);
    }
    length = tok.text.size();
    genotypes.emplace_back(tok.text);
  }
  if (genotypes.empty()) throw ParseError("no genotypes", 1, 1);
  return GenotypePanel(std::move(genotypes));
}

// CSV: header row of y labels after a leading corner cell, then one row per
// x symbol with its probabilities.
inline JointTable parse_joint_table(std::string_view text) {
  using namespace io_detail;
  const auto lines = lines_of(text, ',');
  std::size_t i = 0;
  const Line* header = next_content(lines, i);
  if (header == nullptr || header->tokens.size() < 2) {
    throw ParseError("header needs a corner cell and at least one y label",
                     header ? header->number : 1, 1);
  }
  std::vector<std::string> y_labels;
  for (std::size_t k = 1; k < header->tokens.size(); ++k) {
    y_labels.emplace_back(header->tokens[k].text);
  }
  std::vector<std::string> x_labels;
  std::vector<std::vector<double>> probs;
  while (const Line* line = next_content(lines, i)) {
    if (line->tokens.size() != y_labels.size() + 1) {
      throw ParseError("row needs " + std::to_string(y_labels.size() + 1) +
                           " cells",
                       line->number, 1);
    }
    x_labels.emplace_back(line->tokens[0].text);
    std::vector<double> row;
    for (std::size_t k = 1; k < line->tokens.size(); ++k) {
      const double p = parse_number<double>(line->tokens[k], line->number, "a probability");
      if (!(p >= 0.0)) {
        throw ParseError("negative probability", line->number,
                         line->tokens[k].column);
      }
      row.push_back(p);
    }
    probs.push_back(std::move(row));
  }
  try {
    return JointTable(std::move(x_labels), std::move(y_labels), std::move(probs));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), header->number, 1);
  }
}

}  // namespace minent
