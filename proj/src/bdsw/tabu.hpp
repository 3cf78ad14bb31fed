#pragma once

#include <cstdint>
#include <vector>

#include "bdsw/qubo.hpp"

namespace bdsw {

struct TabuConfig {
  long long iterations = 0;  // 0 selects the size-based default 20*n
  int tenure = -1;           // negative selects min(20, ceil(n/10))
  /// Selects by max |flip cost| instead of the best signed descent move.
  bool max_abs_move_rule = false;
  /// Stream for breaking ties among equally scored moves. Degenerate
  /// (e.g. unit-weight) instances have large zero-cost plateaus; a fixed
  /// tie order confines the walk to a few variables and it never leaves
  /// the plateau, so ties are broken uniformly at random instead.
  std::uint64_t tie_seed = 0;
};

long long default_tabu_iterations(int n);
int default_tabu_tenure(int n);

struct TabuMove {
  long long iteration = 0;
  int index = 0;
  bool aspiration = false;  // move was tabu but produced a new global best
};

struct TabuOutcome {
  Assignment best_assignment;
  double best_cost = 0.0;
  std::vector<double> final_flip_costs;  // recomputed at best_assignment
  long long iterations_run = 0;
  std::vector<TabuMove> moves;
};

/// Tenure-gated single-flip descent from x0. Each iteration flips one
/// variable chosen among the non-tabu set (or a tabu variable that would set
/// a new global best), marks it tabu for `tenure` iterations, and tracks the
/// best assignment seen.
TabuOutcome run_tabu(const QuboProblem& problem, const Assignment& x0,
                     const TabuConfig& config);

/// Uniform random bit vector, deterministic for a fixed seed.
Assignment random_assignment(int n, std::uint64_t seed);

}  // namespace bdsw
