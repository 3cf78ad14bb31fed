// Command-line front end for the BDSW-QAOA solver. Talks to the core
// exclusively through the C API in bdsw/bdsw.h.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bdsw/bdsw.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitUserError = 1;
constexpr int kExitRuntimeError = 2;

struct CliError {
  int exit_code;
  std::string message;
};

struct GraphHandle {
  bdsw_graph* ptr = nullptr;
  ~GraphHandle() { bdsw_graph_free(ptr); }
};
struct ProblemHandle {
  bdsw_problem* ptr = nullptr;
  ~ProblemHandle() { bdsw_problem_free(ptr); }
};
struct ReportHandle {
  bdsw_report* ptr = nullptr;
  ~ReportHandle() { bdsw_report_free(ptr); }
};

void check(bdsw_status status, int exit_code = kExitRuntimeError) {
  if (status != BDSW_OK) throw CliError{exit_code, bdsw_last_error()};
}

struct SolverFlags {
  long long tabu_iters = 0;
  int tenure = -1;
  double backbone_frac = 0.25;
  int backbone_k = 0;
  int window_size = 15;
  int depth = 1;
  long long shots = 10240;
  int capacity = 20;
  std::string subsolver = "qaoa";
  int cycles = 1;
  std::uint64_t seed = 0;

  void add_to(CLI::App* app) {
    app->add_option("--tabu-iters", tabu_iters,
                    "Tabu iterations (0: 20*n default)");
    app->add_option("--tenure", tenure, "Tabu tenure (-1: size-based default)");
    app->add_option("--backbone-frac", backbone_frac,
                    "Backbone fraction of n, in (0, 1]");
    app->add_option("--backbone-k", backbone_k,
                    "Backbone variable count (overrides --backbone-frac)");
    app->add_option("--window-size", window_size, "Sliding window size n_w");
    app->add_option("--depth", depth, "QAOA layer count p");
    app->add_option("--shots", shots, "Measurement shots per sub-problem");
    app->add_option("--capacity", capacity, "Simulated qubit capacity");
    app->add_option("--subsolver", subsolver, "Sub-problem solver")
        ->check(CLI::IsMember({"qaoa", "exact", "tabu-only"}));
    app->add_option("--cycles", cycles,
                    "Outer Tabu/window cycles (1 = single pass)");
    app->add_option("--seed", seed, "RNG seed (bench: base seed)");
  }

  bdsw_solver_config to_config(std::uint64_t run_seed) const {
    bdsw_solver_config config;
    bdsw_solver_config_init(&config);
    config.tabu_iterations = tabu_iters;
    config.tabu_tenure = tenure;
    config.backbone_fraction = backbone_frac;
    config.backbone_k = backbone_k;
    config.window_size = window_size;
    config.qaoa_depth = depth;
    config.qaoa_shots = shots;
    config.qubit_capacity = capacity;
    config.cycles = cycles;
    config.seed = run_seed;
    if (subsolver == "exact") {
      config.subsolver = BDSW_SUBSOLVER_EXACT;
    } else if (subsolver == "tabu-only") {
      config.subsolver = BDSW_SUBSOLVER_TABU_ONLY;
    } else {
      config.subsolver = BDSW_SUBSOLVER_QAOA;
    }
    return config;
  }
};

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw CliError{kExitUserError, "cannot open output path: " + out_path};
  }
  out << text;
}

struct RunResult {
  json report;
  double best_cost = 0.0;
  double best_cut = 0.0;
  std::optional<double> alpha;
};

/// One solver run plus the Max-Cut bookkeeping and the monotone-acceptance
/// check applied to every run.
RunResult run_once(const GraphHandle& graph, const ProblemHandle& problem,
                   const SolverFlags& flags, std::uint64_t run_seed,
                   std::optional<double> optimal) {
  bdsw_solver_config config = flags.to_config(run_seed);
  ReportHandle report;
  check(bdsw_solve(problem.ptr, &config, &report.ptr));

  char* report_json = bdsw_report_to_json(report.ptr);
  if (!report_json) throw CliError{kExitRuntimeError, bdsw_last_error()};
  RunResult result;
  result.report = json::parse(report_json);
  bdsw_string_free(report_json);

  const auto& trajectory = result.report.at("cost_trajectory");
  for (std::size_t i = 1; i < trajectory.size(); ++i) {
    if (!(trajectory[i].get<double>() < trajectory[i - 1].get<double>())) {
      throw CliError{kExitRuntimeError,
                     "monotone-acceptance violation: accepted cost trajectory "
                     "is not strictly decreasing"};
    }
  }

  const int n = bdsw_report_num_vars(report.ptr);
  std::vector<uint8_t> bits(n);
  check(bdsw_report_best_assignment(report.ptr, bits.data(), n));
  result.best_cost = bdsw_report_best_cost(report.ptr);
  check(bdsw_cut_value(graph.ptr, bits.data(), n, &result.best_cut));

  double initial_cut = 0.0;
  {
    // The Tabu incumbent cut is -initial_tabu_cost under the negated-cut
    // encoding; recompute via the ratio helper only when an optimum is given.
    initial_cut = -bdsw_report_initial_tabu_cost(report.ptr);
  }
  result.report["best_cut"] = result.best_cut;
  result.report["initial_tabu_cut"] = initial_cut;
  if (optimal) {
    double alpha = 0.0;
    check(bdsw_approximation_ratio(result.best_cut, *optimal, &alpha),
          kExitUserError);
    result.alpha = alpha;
    result.report["optimal_cut"] = *optimal;
    result.report["approximation_ratio"] = alpha;
  }
  return result;
}

void load_instance(const std::string& path, GraphHandle& graph,
                   ProblemHandle& problem) {
  if (bdsw_graph_load(path.c_str(), &graph.ptr) != BDSW_OK) {
    throw CliError{kExitUserError, bdsw_last_error()};
  }
  check(bdsw_graph_to_qubo(graph.ptr, &problem.ptr));
}

int cmd_solve(const std::string& instance, const SolverFlags& flags,
              std::optional<double> optimal, const std::string& out_path,
              const std::string& format) {
  GraphHandle graph;
  ProblemHandle problem;
  load_instance(instance, graph, problem);

  RunResult run = run_once(graph, problem, flags, flags.seed, optimal);
  run.report["instance"] = instance;
  run.report["num_edges"] = bdsw_graph_num_edges(graph.ptr);

  if (format == "csv") {
    std::ostringstream csv;
    csv << "instance,n,m,seed,best_cost,best_cut,approximation_ratio\n"
        << instance << ',' << bdsw_graph_num_vertices(graph.ptr) << ','
        << bdsw_graph_num_edges(graph.ptr) << ',' << flags.seed << ','
        << run.best_cost << ',' << run.best_cut << ',';
    if (run.alpha) csv << *run.alpha;
    csv << '\n';
    write_output(csv.str(), out_path);
  } else {
    write_output(run.report.dump(2) + "\n", out_path);
  }
  return 0;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid]
                           : 0.5 * (values[mid - 1] + values[mid]);
}

int cmd_bench(const std::vector<std::string>& instances,
              const std::vector<double>& optima, int reps,
              const SolverFlags& flags, const std::string& out_path,
              const std::string& format) {
  if (!optima.empty() && optima.size() != instances.size()) {
    throw CliError{kExitUserError,
                   "--optimal must be given once per instance or not at all"};
  }

  json summary = json::array();
  std::ostringstream csv;
  csv << "instance,n,m,reps,cost_min,cost_median,cost_max,cut_min,cut_median,"
         "cut_max,alpha_min,alpha_median,alpha_max,total_seconds\n";

  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    GraphHandle graph;
    ProblemHandle problem;
    load_instance(instances[idx], graph, problem);
    std::optional<double> optimal;
    if (!optima.empty()) optimal = optima[idx];

    std::vector<double> costs, cuts, alphas;
    double total_seconds = 0.0;
    json runs = json::array();
    for (int r = 0; r < reps; ++r) {
      RunResult run =
          run_once(graph, problem, flags, flags.seed + r, optimal);
      costs.push_back(run.best_cost);
      cuts.push_back(run.best_cut);
      if (run.alpha) alphas.push_back(*run.alpha);
      total_seconds += run.report["timings"]["total_seconds"].get<double>();
      runs.push_back({{"seed", flags.seed + r},
                      {"best_cost", run.best_cost},
                      {"best_cut", run.best_cut}});
      if (run.alpha) runs.back()["approximation_ratio"] = *run.alpha;
    }

    auto [cost_min, cost_max] = std::minmax_element(costs.begin(), costs.end());
    auto [cut_min, cut_max] = std::minmax_element(cuts.begin(), cuts.end());
    json row = {{"instance", instances[idx]},
                {"num_vertices", bdsw_graph_num_vertices(graph.ptr)},
                {"num_edges", bdsw_graph_num_edges(graph.ptr)},
                {"reps", reps},
                {"cost", {{"min", *cost_min},
                          {"median", median(costs)},
                          {"max", *cost_max}}},
                {"cut", {{"min", *cut_min},
                         {"median", median(cuts)},
                         {"max", *cut_max}}},
                {"runs", runs},
                {"total_seconds", total_seconds}};
    csv << instances[idx] << ',' << bdsw_graph_num_vertices(graph.ptr) << ','
        << bdsw_graph_num_edges(graph.ptr) << ',' << reps << ',' << *cost_min
        << ',' << median(costs) << ',' << *cost_max << ',' << *cut_min << ','
        << median(cuts) << ',' << *cut_max << ',';
    if (!alphas.empty()) {
      auto [a_min, a_max] = std::minmax_element(alphas.begin(), alphas.end());
      row["approximation_ratio"] = {{"min", *a_min},
                                    {"median", median(alphas)},
                                    {"max", *a_max}};
      csv << *a_min << ',' << median(alphas) << ',' << *a_max;
    } else {
      csv << ",,";
    }
    csv << ',' << total_seconds << '\n';
    summary.push_back(row);
  }

  if (format == "json") {
    write_output(summary.dump(2) + "\n", out_path);
  } else {
    write_output(csv.str(), out_path);
  }
  return 0;
}

int cmd_oracle(const std::string& instance) {
  GraphHandle graph;
  if (bdsw_graph_load(instance.c_str(), &graph.ptr) != BDSW_OK) {
    throw CliError{kExitUserError, bdsw_last_error()};
  }
  const int n = bdsw_graph_num_vertices(graph.ptr);
  std::vector<uint8_t> bits(n);
  double cut = 0.0;
  if (bdsw_brute_force_maxcut(graph.ptr, bits.data(), n, &cut) != BDSW_OK) {
    throw CliError{kExitUserError, bdsw_last_error()};
  }
  std::string partition;
  for (uint8_t b : bits) partition.push_back(b ? '1' : '0');
  std::cout << "max_cut=" << cut << "\npartition=" << partition << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BDSW-QAOA hybrid QUBO / Max-Cut solver"};
  app.require_subcommand(1);

  SolverFlags solve_flags, bench_flags;
  std::string solve_instance, solve_out, solve_format = "json";
  std::optional<double> solve_optimal;
  auto* solve = app.add_subcommand("solve", "Run one solve on an instance");
  solve->add_option("instance", solve_instance, "rudy-format graph file")
      ->required();
  solve_flags.add_to(solve);
  solve->add_option("--optimal", solve_optimal,
                    "Known optimal cut, enables the approximation ratio");
  solve->add_option("--out", solve_out, "Write the report here");
  solve->add_option("--format", solve_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> bench_instances;
  std::vector<double> bench_optima;
  int bench_reps = 1;
  std::string bench_out, bench_format = "csv";
  auto* bench = app.add_subcommand("bench", "Benchmark sweep over instances");
  bench->add_option("instances", bench_instances, "rudy-format graph files")
      ->required();
  bench_flags.add_to(bench);
  bench->add_option("--optimal", bench_optima,
                    "Known optimal cut per instance, in order");
  bench->add_option("--reps", bench_reps, "Repetitions per instance")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_out, "Write the table here");
  bench->add_option("--format", bench_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string oracle_instance;
  auto* oracle =
      app.add_subcommand("oracle", "Exact Max-Cut by exhaustive enumeration");
  oracle->add_option("instance", oracle_instance, "rudy-format graph file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUserError;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(solve_instance, solve_flags, solve_optimal, solve_out,
                       solve_format);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_instances, bench_optima, bench_reps, bench_flags,
                       bench_out, bench_format);
    }
    return cmd_oracle(oracle_instance);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}
