#include "bdsw/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

namespace bdsw {

namespace {

void check_cap(int n, const char* what) {
  if (n > kBruteForceCap) {
    throw ResourceError(std::string(what) + " has " + std::to_string(n) +
                        " variables, above the exhaustive cap of " +
                        std::to_string(kBruteForceCap));
  }
}

bool lex_smaller(const Assignment& a, const Assignment& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

ExactSolution brute_force_qubo(const QuboProblem& problem) {
  const int n = problem.num_variables();
  check_cap(n, "QUBO");

  FlipState state = make_flip_state(problem, Assignment(n, 0));
  ExactSolution best{state.bits, state.cost, true};

  const std::uint64_t size = 1ULL << n;
  for (std::uint64_t c = 1; c < size; ++c) {
    apply_flip(problem, state, std::countr_zero(c));
    const double tol = 1e-9 * (1.0 + std::fabs(best.best_cost));
    if (state.cost < best.best_cost - tol) {
      best = {state.bits, state.cost, true};
    } else if (std::fabs(state.cost - best.best_cost) <= tol) {
      best.is_unique = false;
      if (lex_smaller(state.bits, best.best_assignment)) {
        best.best_assignment = state.bits;
        best.best_cost = state.cost;
      }
    }
  }
  return best;
}

ExactCut brute_force_maxcut(const WeightedGraph& graph) {
  const int n = graph.num_vertices;
  check_cap(n, "graph");

  std::vector<std::vector<std::pair<int, double>>> adjacency(n);
  for (const WeightedEdge& e : graph.edges) {
    adjacency[e.u].emplace_back(e.v, e.weight);
    adjacency[e.v].emplace_back(e.u, e.weight);
  }

  Assignment bits(n, 0);
  double cut = 0.0;
  ExactCut best{bits, 0.0};

  const std::uint64_t size = 1ULL << n;
  for (std::uint64_t c = 1; c < size; ++c) {
    const int v = std::countr_zero(c);
    for (const auto& [j, w] : adjacency[v]) {
      cut += (bits[v] != bits[j]) ? -w : w;
    }
    bits[v] ^= 1;
    const double tol = 1e-9 * (1.0 + std::fabs(best.best_cut));
    if (cut > best.best_cut + tol) {
      best = {bits, cut};
    } else if (std::fabs(cut - best.best_cut) <= tol &&
               lex_smaller(bits, best.partition)) {
      best = {bits, cut};
    }
  }
  return best;
}

}  // namespace bdsw
