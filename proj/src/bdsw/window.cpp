#include "bdsw/window.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bdsw {

BackboneSet select_backbone(std::span<const double> flip_costs, int k) {
  const int n = static_cast<int>(flip_costs.size());
  if (k < 1 || k > n) {
    throw std::invalid_argument("backbone size " + std::to_string(k) +
                                " out of range [1, " + std::to_string(n) + "]");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::fabs(flip_costs[a]) > std::fabs(flip_costs[b]);
  });
  order.resize(k);
  return BackboneSet{std::move(order)};
}

std::vector<Window> iterate_windows(const BackboneSet& backbone,
                                    int window_size) {
  const int k = static_cast<int>(backbone.ordered_indices.size());
  if (window_size < 1 || window_size > k) {
    throw std::invalid_argument("window size " + std::to_string(window_size) +
                                " exceeds backbone size " + std::to_string(k));
  }
  std::vector<Window> windows;
  windows.reserve(k - window_size + 1);
  for (int start = 0; start + window_size <= k; ++start) {
    windows.push_back(Window{std::vector<int>(
        backbone.ordered_indices.begin() + start,
        backbone.ordered_indices.begin() + start + window_size)});
  }
  return windows;
}

SubQubo build_subqubo(const QuboProblem& problem, const Assignment& x_star,
                      const Window& window) {
  const int n = problem.num_variables();
  const int n_w = static_cast<int>(window.positions.size());
  if (static_cast<int>(x_star.size()) != n) {
    throw std::invalid_argument("incumbent length does not match problem");
  }

  std::vector<int> local_of(n, -1);
  for (int a = 0; a < n_w; ++a) {
    int g = window.positions[a];
    if (g < 0 || g >= n) {
      throw std::invalid_argument("window index " + std::to_string(g) +
                                  " out of range");
    }
    if (local_of[g] != -1) {
      throw std::invalid_argument("duplicate window index " +
                                  std::to_string(g));
    }
    local_of[g] = a;
  }

  std::vector<QuboTerm> terms;
  for (int a = 0; a < n_w; ++a) {
    const int g = window.positions[a];
    double linear = problem.linear(g);
    for (const auto& [j, w] : problem.neighbors(g)) {
      const int b = local_of[j];
      if (b == -1) {
        if (x_star[j]) linear += w;  // fixed neighbor folds into d_a
      } else if (a < b) {
        terms.push_back({a, b, w});
      }
    }
    if (linear != 0.0) terms.push_back({a, a, linear});
  }

  return SubQubo{QuboProblem(n_w, terms), window.positions, x_star};
}

Assignment lift_solution(const Assignment& x_global, const Window& window,
                         const Assignment& y) {
  if (y.size() != window.positions.size()) {
    throw std::invalid_argument("window solution length does not match window");
  }
  Assignment lifted = x_global;
  for (std::size_t a = 0; a < y.size(); ++a) {
    lifted[window.positions[a]] = y[a];
  }
  return lifted;
}

}  // namespace bdsw
