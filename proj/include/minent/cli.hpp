#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minent/apps.hpp"
#include "minent/coloring.hpp"
#include "minent/generators.hpp"
#include "minent/graph_entropy.hpp"
#include "minent/io.hpp"
#include "minent/orientation.hpp"
#include "minent/report.hpp"
#include "minent/setcover.hpp"

namespace minent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundFailed = 1;
inline constexpr int kExitInputError = 2;

struct CommonOptions {
  std::string input;
  bool json = false;
  std::uint64_t seed = 0;
  bool assert_bound = false;
  double tol = 1e-6;
};

namespace detail {

inline void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--input", opts.input, "Input file");
  cmd->add_flag("--json", opts.json, "Print the report as JSON");
  cmd->add_option("--seed", opts.seed, "Random seed (default 0)");
  cmd->add_flag("--assert-bound", opts.assert_bound,
                "Exit with status 1 when a guarantee check fails");
  cmd->add_option("--tol", opts.tol, "Solver tolerance")->check(CLI::PositiveNumber);
}

inline std::string read_file(const std::string& path) {
  if (path.empty()) throw ValidationError("--input is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string first_word(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  while (in >> word) {
    if (word.front() != '#') return word;
    std::string rest;
    std::getline(in, rest);
  }
  return {};
}

inline void print_human(const Json& report, std::ostream& out) {
  for (const auto& [key, value] : report.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  }
}

}  // namespace detail

// Runs one command line (without the program name). Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Minimum-entropy set cover, orientation and coloring solvers",
               "minent"};
  app.require_subcommand(1);
  CommonOptions opts;

  std::string action;
  auto action_of = [&](CLI::App* cmd, std::vector<std::string> choices) {
    cmd->add_option("action", action, "Operation")
        ->required()
        ->check(CLI::IsMember(std::move(choices)));
    detail::add_common(cmd, opts);
  };

  std::uint64_t oracle_limit = kDefaultCoverOracleLimit;
  std::uint64_t subset_budget = kDefaultSubsetBudget;
  auto* setcover = app.add_subcommand("setcover", "Minimum entropy set cover");
  action_of(setcover, {"greedy", "exact", "certify"});
  setcover->add_option("--limit", oracle_limit, "Oracle budget (assignments)");
  setcover->add_option("--subset-budget", subset_budget,
                       "Subsets checked by the dual feasibility verifier");

  EstimatorParams est;
  std::uint64_t samples = 0;
  auto* orient = app.add_subcommand("orient", "Minimum entropy orientation");
  action_of(orient, {"biased", "exact", "estimate"});
  orient->add_option("--epsilon", est.epsilon, "Additive slack")->check(CLI::PositiveNumber);
  orient->add_option("--delta", est.delta, "Failure probability")->check(CLI::Range(0.0, 1.0));
  orient->add_option("--samples", samples, "Explicit sample count");
  orient->add_flag("--one-sided", est.one_sided, "Return H + epsilon");
  orient->add_flag("--full-sweep", est.full_sweep, "Visit every vertex once");

  auto* color = app.add_subcommand("color", "Minimum entropy coloring");
  action_of(color, {"greedy", "greedy-approx", "interval", "exact"});

  double constant = kDefaultGreedyBoundConstant;
  auto* graphent = app.add_subcommand("graphent", "Graph entropy");
  action_of(graphent, {"compute", "split", "greedy-bound"});
  graphent->add_option("--constant", constant, "Additive constant of the greedy bound");

  int k = 1;
  std::string kind = "graph";
  int n = 10;
  int m = 15;
  int sets = 3;
  int degree = 3;
  int grid = 12;
  auto* gen = app.add_subcommand("gen", "Instance generators");
  action_of(gen, {"jk", "random"});
  gen->add_option("--k", k, "Size of the J_k gadget");
  gen->add_option("--kind", kind, "graph|connected|regular|bipartite|interval|setcover")
      ->check(CLI::IsMember({"graph", "connected", "regular", "bipartite",
                             "interval", "setcover"}));
  gen->add_option("--n", n, "Vertices, elements or intervals");
  gen->add_option("--m", m, "Edges");
  gen->add_option("--sets", sets, "Number of sets");
  gen->add_option("--degree", degree, "Regular degree");
  gen->add_option("--grid", grid, "Interval endpoint denominator");

  std::string color_mode = "greedy";
  auto* appcmd = app.add_subcommand("app", "Application instance builders");
  action_of(appcmd, {"haplotype", "confusability"});
  appcmd->add_option("--color", color_mode, "Coloring for the code")
      ->check(CLI::IsMember({"greedy", "exact"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const auto started = std::chrono::steady_clock::now();
  Json report;
  Json checks = Json::array();
  report["command"] = cmd->get_name() + " " + action;
  report["seed"] = opts.seed;

  try {
    std::string text;
    if (cmd != gen) {
      text = detail::read_file(opts.input);
      report["input_digest"] = fnv1a_digest(text);
    }

    if (cmd == setcover) {
      const SetSystem s = parse_setcover(text);
      const GreedyCover greedy = greedy_cover(s);
      const DualCertificate cert = dual_certificate(s, greedy.trace);
      const bool identity =
          std::abs(cert.sum_y - (cert.greedy_entropy - kLog2E)) <= kEntropyTolerance;
      if (action == "exact") {
        const CoverAssignment best = exact_cover(s, oracle_limit);
        report.update(to_json(best));
        report["greedy_entropy_bits"] = cover_entropy(greedy.assignment);
        const double diff = cover_entropy(greedy.assignment) - cover_entropy(best);
        checks.push_back(check("greedy_within_log2e",
                               diff >= -kEntropyTolerance &&
                                   diff <= kLog2E + kEntropyTolerance));
      } else {
        report.update(to_json(greedy.assignment));
        report["rounds"] = to_json(greedy.trace);
        report["certificate"] = to_json(cert);
        checks.push_back(check("dual_identity", identity));
        if (action == "certify") {
          const auto feas = verify_dual_feasibility(s, cert, subset_budget, opts.seed);
          const Json f = to_json(feas);
          report["violations"] = f["violations"];
          report["subsets_checked"] = f["checked"];
          report["exhaustive"] = f["exhaustive"];
          checks.push_back(check("dual_feasible", feas.violations.empty()));
        }
      }
    } else if (cmd == orient) {
      const Graph g = parse_graph(text);
      if (action == "estimate") {
        est.seed = opts.seed;
        if (samples > 0) est.samples = samples;
        const EntropyEstimate e = estimate_entropy(g, est);
        report["H"] = e.value;
        report["s"] = e.samples;
        report["epsilon"] = est.epsilon;
        report["delta"] = est.delta;
        report["one_sided"] = est.one_sided;
        report["full_sweep"] = est.full_sweep;
      } else {
        const Orientation biased = biased_orientation(g);
        if (action == "biased") {
          report.update(to_json(g, biased));
        } else {
          const Orientation best = exact_orientation(g);
          report.update(to_json(g, best));
          const double hb = orientation_entropy(g, biased);
          const double diff = hb - orientation_entropy(g, best);
          report["biased_entropy_bits"] = hb;
          checks.push_back(check("biased_within_one_bit",
                                 diff >= -kEntropyTolerance &&
                                     diff <= 1.0 + kEntropyTolerance));
        }
      }
    } else if (cmd == color) {
      const bool intervals = detail::first_word(text) == "intervals";
      if (action == "interval") {
        if (!intervals) throw ValidationError("color interval needs an intervals file");
        const IntervalSet iv = parse_intervals(text);
        const IntervalColoring result = interval_mec(iv);
        const Graph g = interval_graph(iv);
        report.update(to_json(g, result.coloring));
        report["layers"] = result.layers.layers;
        report["lower_bound_H"] = result.layers.lower_bound_H;
        const double h = coloring_entropy(g, result.coloring);
        const double lb = result.layers.lower_bound_H;
        checks.push_back(check("within_one_bit_of_lower_bound",
                               h >= lb - kEntropyTolerance &&
                                   h <= lb + 1.0 + kEntropyTolerance));
      } else {
        const Graph g = intervals ? interval_graph(parse_intervals(text)) : parse_graph(text);
        if (action == "exact") {
          report.update(to_json(g, exact_coloring(g)));
        } else if (action == "greedy") {
          report.update(to_json(g, greedy_coloring(g, MisOracle::kExact)));
        } else {
          report.update(to_json(g, greedy_coloring(g, MisOracle::kApprox)));
          const double beta = (g.max_degree() + 2) / 3.0;
          report["beta"] = beta;
          report["guarantee_bits"] = std::log2(beta) + kLog2E;
        }
      }
    } else if (cmd == graphent) {
      const Graph g = parse_graph(text);
      GraphEntropyOptions go;
      go.tol = opts.tol;
      if (action == "compute") {
        report.update(to_json(graph_entropy(g, go)));
      } else if (action == "split") {
        const double h = graph_entropy(g, go).H;
        const double hc = graph_entropy(g.complement(), go).H;
        const double gap = h + hc - std::log2(static_cast<double>(g.num_vertices()));
        report["H_bits"] = h;
        report["H_complement_bits"] = hc;
        report["gap_bits"] = gap;
        checks.push_back(check("splitting_identity", std::abs(gap) <= 2 * opts.tol));
      } else {
        const GreedyEntropyReport r = greedy_vs_entropy(g, constant, go);
        report["g_bits"] = r.g_bits;
        report["H_bits"] = r.H_bits;
        report["bound_rhs"] = r.bound_rhs;
        report["bound_holds"] = r.bound_holds;
        report["chromatic_bits"] =
            r.chromatic_bits ? Json(*r.chromatic_bits) : Json(nullptr);
        report["relaxation_holds"] = r.relaxation_holds;
        checks.push_back(check("greedy_entropy_bound", r.bound_holds));
        checks.push_back(check("relaxation", r.relaxation_holds));
      }
    } else if (cmd == gen) {
      std::string instance;
      if (action == "jk") {
        const JkGadget gadget = gen_jk(k);
        instance = serialize_intervals(gadget.intervals);
        report["rows"] = gadget.row;
      } else if (kind == "graph") {
        instance = serialize_graph(random_graph(n, m, opts.seed));
      } else if (kind == "connected") {
        instance = serialize_graph(random_connected_graph(n, m, opts.seed));
      } else if (kind == "regular") {
        instance = serialize_graph(random_regular(n, degree, opts.seed));
      } else if (kind == "bipartite") {
        instance = serialize_graph(random_bipartite(n / 2, n - n / 2, 0.5, opts.seed));
      } else if (kind == "interval") {
        instance = serialize_intervals(random_intervals(n, grid, opts.seed));
      } else {
        instance = serialize_setcover(random_setcover(n, sets, opts.seed));
      }
      if (!opts.json) {
        out << instance;
        return kExitOk;
      }
      report["instance"] = instance;
    } else if (cmd == appcmd) {
      if (action == "haplotype") {
        const HaplotypeInstance inst = haplotype_instance(parse_genotypes(text));
        const GreedyCover greedy = greedy_cover(inst.system);
        report.update(to_json(greedy.assignment));
        report["haplotypes"] = inst.haplotypes;
        std::vector<std::string> phasing;
        for (int i : greedy.assignment.assignment()) phasing.push_back(inst.haplotypes[i]);
        report["phasing"] = phasing;
      } else {
        const JointTable table = parse_joint_table(text);
        const Graph g = confusability_graph(table);
        const Coloring c = color_mode == "exact" ? exact_coloring(g)
                                                 : greedy_coloring(g, MisOracle::kExact);
        Json edges = Json::array();
        for (const Edge& e : g.edges()) {
          edges.push_back({table.x_labels()[e.u], table.x_labels()[e.v]});
        }
        std::vector<std::vector<std::string>> classes;
        for (const auto& cls : c.classes()) {
          auto& labels = classes.emplace_back();
          for (Vertex v : cls) labels.push_back(table.x_labels()[v]);
        }
        report["edges"] = std::move(edges);
        report["weights"] = *g.weights();
        report["classes"] = classes;
        report["rate_bits"] = code_rate(g, c);
      }
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const FeasibilityError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const BudgetExceeded& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ConvergenceError& e) {
    err << "solver error: " << e.what() << " (best " << e.best_value() << ", gap " << e.gap() << ")\n";
    return kExitInputError;
  }

  report["checks"] = checks;
  report["timing_ms"] = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  if (opts.json) {
    out << report.dump(2) << "\n";
  } else {
    detail::print_human(report, out);
  }
  if (opts.assert_bound) {
    for (const Json& c : checks) {
      if (!c["holds"].get<bool>()) return kExitBoundFailed;
    }
  }
  return kExitOk;
}

}  // namespace minent::cli
