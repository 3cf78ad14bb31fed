#include "bdsw/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace bdsw {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  // splitmix64 over (seed, cycle, window) so every sub-solve gets its own
  // deterministic stream.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (a + 1) +
                    0xBF58476D1CE4E5B9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::string to_string(Subsolver s) {
  switch (s) {
    case Subsolver::kQaoa: return "qaoa";
    case Subsolver::kExact: return "exact";
    case Subsolver::kTabuOnly: return "tabu-only";
  }
  return "unknown";
}

Subsolver subsolver_from_string(const std::string& name) {
  if (name == "qaoa") return Subsolver::kQaoa;
  if (name == "exact") return Subsolver::kExact;
  if (name == "tabu-only") return Subsolver::kTabuOnly;
  throw std::invalid_argument("unknown subsolver \"" + name +
                              "\"; expected qaoa, exact, or tabu-only");
}

std::vector<double> RunReport::accepted_cost_trajectory() const {
  std::vector<double> costs{initial_tabu_cost};
  for (const WindowRecord& w : windows) {
    if (w.accepted) costs.push_back(w.global_cost_after);
  }
  return costs;
}

RunReport bdsw_solve(const QuboProblem& problem, const SolverConfig& config) {
  const int n = problem.num_variables();
  if (config.window_size < 1) {
    throw std::invalid_argument("window size must be >= 1");
  }
  if (config.window_size > config.qaoa.capacity) {
    throw std::invalid_argument("window size " +
                                std::to_string(config.window_size) +
                                " exceeds the qubit capacity " +
                                std::to_string(config.qaoa.capacity));
  }
  const int n_w = std::min(config.window_size, n);
  if (config.backbone_fraction <= 0.0 || config.backbone_fraction > 1.0) {
    throw std::invalid_argument("backbone fraction must lie in (0, 1]");
  }
  if (config.cycles < 1) throw std::invalid_argument("cycles must be >= 1");

  int k = config.backbone_k > 0
              ? config.backbone_k
              : static_cast<int>(std::lround(config.backbone_fraction * n));
  k = std::clamp(k, n_w, n);

  const auto run_start = Clock::now();
  RunReport report;
  report.num_variables = n;
  report.config = config;

  Assignment incumbent = random_assignment(n, config.seed);
  double best_cost = evaluate(problem, incumbent);

  for (int cycle = 0; cycle < config.cycles; ++cycle) {
    const auto tabu_start = Clock::now();
    TabuConfig tabu_cfg = config.tabu;
    tabu_cfg.tie_seed = mix_seed(config.seed, cycle, 0x7AB5EEDULL);
    TabuOutcome tabu = run_tabu(problem, incumbent, tabu_cfg);
    report.tabu_seconds += seconds_since(tabu_start);
    incumbent = tabu.best_assignment;
    best_cost = tabu.best_cost;
    if (cycle == 0) report.initial_tabu_cost = best_cost;

    if (config.subsolver == Subsolver::kTabuOnly) continue;

    BackboneSet backbone = select_backbone(tabu.final_flip_costs, k);
    const auto windows_start = Clock::now();
    const std::vector<Window> windows = iterate_windows(backbone, n_w);
    for (std::size_t wi = 0; wi < windows.size(); ++wi) {
      const Window& window = windows[wi];
      SubQubo sub = build_subqubo(problem, incumbent, window);

      QaoaConfig qcfg = config.qaoa;
      qcfg.seed = mix_seed(config.seed, cycle, wi);
      qcfg.exact_mode = config.subsolver == Subsolver::kExact;
      QaoaResult sub_result = solve_subqubo(sub, qcfg);

      Assignment lifted = lift_solution(
          incumbent, window, bits_of(sub_result.best_bitstring, n_w));
      const double lifted_cost = evaluate(problem, lifted);

      WindowRecord record;
      record.cycle = cycle;
      record.indices = window.positions;
      record.sub_best_energy = sub_result.best_energy;
      record.accepted = lifted_cost < best_cost;
      if (record.accepted) {
        incumbent = std::move(lifted);
        best_cost = lifted_cost;
      }
      record.global_cost_after = best_cost;
      report.windows.push_back(std::move(record));
    }
    report.window_seconds += seconds_since(windows_start);
  }

  report.best_assignment = std::move(incumbent);
  report.best_cost = best_cost;
  report.total_seconds = seconds_since(run_start);
  return report;
}

double approximation_ratio(double achieved, double optimal) {
  if (!(optimal > 0.0)) {
    throw std::invalid_argument("optimal value must be positive");
  }
  double ratio = achieved / optimal;
  if (ratio > 1.0 && ratio < 1.0 + 1e-9) ratio = 1.0;
  return std::max(ratio, 0.0);
}

std::string report_to_json(const RunReport& report) {
  nlohmann::json j;
  j["num_variables"] = report.num_variables;
  j["best_cost"] = report.best_cost;
  j["initial_tabu_cost"] = report.initial_tabu_cost;

  std::string bits;
  bits.reserve(report.best_assignment.size());
  for (auto b : report.best_assignment) bits.push_back(b ? '1' : '0');
  j["best_assignment"] = bits;
  j["cost_trajectory"] = report.accepted_cost_trajectory();

  nlohmann::json windows = nlohmann::json::array();
  for (const WindowRecord& w : report.windows) {
    windows.push_back({{"cycle", w.cycle},
                       {"indices", w.indices},
                       {"sub_best_energy", w.sub_best_energy},
                       {"accepted", w.accepted},
                       {"global_cost_after", w.global_cost_after}});
  }
  j["windows"] = windows;

  j["timings"] = {{"tabu_seconds", report.tabu_seconds},
                  {"windows_seconds", report.window_seconds},
                  {"total_seconds", report.total_seconds}};

  const SolverConfig& c = report.config;
  j["config"] = {
      {"seed", c.seed},
      {"tabu_iterations", c.tabu.iterations > 0
                              ? c.tabu.iterations
                              : default_tabu_iterations(report.num_variables)},
      {"tabu_tenure", c.tabu.tenure >= 0
                          ? c.tabu.tenure
                          : default_tabu_tenure(report.num_variables)},
      {"max_abs_move_rule", c.tabu.max_abs_move_rule},
      {"backbone_fraction", c.backbone_fraction},
      {"backbone_k", c.backbone_k},
      {"window_size", c.window_size},
      {"subsolver", to_string(c.subsolver)},
      {"cycles", c.cycles},
      {"qaoa", {{"depth", c.qaoa.depth},
                {"shots", c.qaoa.shots},
                {"capacity", c.qaoa.capacity},
                {"grid_resolution", c.qaoa.optimizer.grid_resolution}}}};
  return j.dump(2);
}

}  // namespace bdsw
