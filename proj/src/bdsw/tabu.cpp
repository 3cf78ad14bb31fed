#include "bdsw/tabu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace bdsw {

long long default_tabu_iterations(int n) { return 20LL * n; }

int default_tabu_tenure(int n) {
  int tenure = std::min((n + 9) / 10, 20);
  return std::min(tenure, n - 1);  // a tenure >= n can freeze every variable
}

Assignment random_assignment(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("assignment size must be positive");
  std::mt19937_64 rng(seed);
  Assignment bits(n);
  for (int i = 0; i < n; ++i) {
    bits[i] = static_cast<std::uint8_t>(rng() & 1u);
  }
  return bits;
}

TabuOutcome run_tabu(const QuboProblem& problem, const Assignment& x0,
                     const TabuConfig& config) {
  const int n = problem.num_variables();
  const long long iterations =
      config.iterations > 0 ? config.iterations : default_tabu_iterations(n);
  const int tenure = config.tenure >= 0 ? config.tenure : default_tabu_tenure(n);
  if (tenure >= iterations) {
    throw std::invalid_argument("tabu tenure " + std::to_string(tenure) +
                                " must be smaller than the iteration count " +
                                std::to_string(iterations));
  }

  FlipState state = make_flip_state(problem, x0);
  std::vector<int> tenures(n, 0);
  std::mt19937_64 tie_rng(config.tie_seed);
  std::vector<int> tied;
  tied.reserve(n);

  TabuOutcome out;
  out.best_assignment = state.bits;
  out.best_cost = state.cost;
  out.moves.reserve(static_cast<std::size_t>(iterations));

  for (long long t = 0; t < iterations; ++t) {
    double best_score = 0.0;
    tied.clear();
    for (int i = 0; i < n; ++i) {
      const bool is_tabu = tenures[i] > 0;
      if (is_tabu && !(state.cost + state.flip_costs[i] < out.best_cost)) {
        continue;  // tabu and no aspiration
      }
      double score = config.max_abs_move_rule ? -std::fabs(state.flip_costs[i])
                                              : state.flip_costs[i];
      if (tied.empty() || score < best_score) {
        best_score = score;
        tied.clear();
        tied.push_back(i);
      } else if (score == best_score) {
        tied.push_back(i);
      }
    }
    const int chosen =
        tied.empty() ? -1
        : tied.size() == 1
            ? tied.front()
            : tied[static_cast<std::size_t>(tie_rng() % tied.size())];
    const bool chosen_tabu = chosen >= 0 && tenures[chosen] > 0;
    if (chosen < 0) {
      throw std::invalid_argument(
          "tabu tenure overflow: every variable is tabu and no move reaches a "
          "new best (tenure " +
          std::to_string(tenure) + " too large for n=" + std::to_string(n) +
          ")");
    }

    apply_flip(problem, state, chosen);
    out.moves.push_back({t, chosen, chosen_tabu});

    for (int i = 0; i < n; ++i) {
      if (i != chosen && tenures[i] > 0) --tenures[i];
    }
    tenures[chosen] = tenure;

    if (state.cost < out.best_cost) {
      out.best_cost = state.cost;
      out.best_assignment = state.bits;
    }
  }

  out.iterations_run = iterations;
  out.best_cost = evaluate(problem, out.best_assignment);
  out.final_flip_costs = all_flip_costs(problem, out.best_assignment);
  return out;
}

}  // namespace bdsw
