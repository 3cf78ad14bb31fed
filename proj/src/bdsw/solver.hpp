#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bdsw/qaoa.hpp"
#include "bdsw/tabu.hpp"
#include "bdsw/window.hpp"

namespace bdsw {

enum class Subsolver { kQaoa, kExact, kTabuOnly };

std::string to_string(Subsolver s);
Subsolver subsolver_from_string(const std::string& name);

struct SolverConfig {
  TabuConfig tabu;                  // iterations/tenure 0 and -1 mean auto
  double backbone_fraction = 0.25;  // in (0, 1]
  int backbone_k = 0;               // 0 derives k from the fraction
  int window_size = 15;             // clamped to n for small instances
  QaoaConfig qaoa;
  Subsolver subsolver = Subsolver::kQaoa;
  int cycles = 1;  // outer Tabu/window repetitions; 1 reproduces a single pass
  std::uint64_t seed = 0;
};

struct WindowRecord {
  int cycle = 0;
  std::vector<int> indices;
  double sub_best_energy = 0.0;
  bool accepted = false;
  double global_cost_after = 0.0;
};

struct RunReport {
  int num_variables = 0;
  Assignment best_assignment;
  double best_cost = 0.0;
  double initial_tabu_cost = 0.0;  // incumbent cost after the first Tabu pass
  std::vector<WindowRecord> windows;
  double tabu_seconds = 0.0;
  double window_seconds = 0.0;
  double total_seconds = 0.0;
  SolverConfig config;

  /// Costs after each accepted window, starting at the Tabu incumbent.
  std::vector<double> accepted_cost_trajectory() const;
};

/// Full pipeline: Tabu preprocessing, backbone ranking by |flip cost|,
/// stride-1 sliding-window sub-problems solved by the configured subsolver,
/// accept-if-strictly-better global updates.
RunReport bdsw_solve(const QuboProblem& problem, const SolverConfig& config);

/// achieved / optimal, clamped to 1 only when floating noise overshoots by
/// less than 1e-9. Requires a positive optimum.
double approximation_ratio(double achieved, double optimal);

/// JSON rendering of the report (lower_snake_case keys).
std::string report_to_json(const RunReport& report);

}  // namespace bdsw
