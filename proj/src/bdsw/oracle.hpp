#pragma once

#include <stdexcept>

#include "bdsw/graph.hpp"
#include "bdsw/qubo.hpp"

namespace bdsw {

/// Raised when an instance is too large for exhaustive enumeration.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest instance the exhaustive solvers accept (2^24 evaluations).
inline constexpr int kBruteForceCap = 24;

struct ExactSolution {
  Assignment best_assignment;  // lexicographically smallest among ties
  double best_cost = 0.0;
  bool is_unique = true;
};

struct ExactCut {
  Assignment partition;
  double best_cut = 0.0;
};

/// Exhaustive scan over all 2^n assignments (gray-code incremental costs).
ExactSolution brute_force_qubo(const QuboProblem& problem);

/// Exhaustive Max-Cut over all bipartitions, independent of the QUBO path.
ExactCut brute_force_maxcut(const WeightedGraph& graph);

}  // namespace bdsw
