#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace bdsw {

struct NelderMeadOptions {
  int max_evaluations = 400;
  double tolerance = 1e-7;   // stop when the simplex value spread drops below
  double initial_step = 0.1;
};

struct NelderMeadResult {
  std::vector<double> point;
  double value = 0.0;
  int evaluations = 0;
};

/// Plain downhill simplex minimization with standard coefficients
/// (reflection 1, expansion 2, contraction 0.5, shrink 0.5). Deterministic.
inline NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, const NelderMeadOptions& opts = {}) {
  const int dim = static_cast<int>(x0.size());
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<std::vector<double>> simplex(dim + 1, x0);
  std::vector<double> values(dim + 1);
  for (int i = 0; i < dim; ++i) simplex[i + 1][i] += opts.initial_step;
  for (int i = 0; i <= dim; ++i) values[i] = eval(simplex[i]);

  std::vector<int> order(dim + 1);
  while (evals < opts.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a] < values[b]; });
    const int best = order[0];
    const int worst = order[dim];
    const int second_worst = order[dim - 1];
    if (std::fabs(values[worst] - values[best]) < opts.tolerance) break;

    std::vector<double> centroid(dim, 0.0);
    for (int i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (int d = 0; d < dim; ++d) centroid[d] += simplex[i][d];
    }
    for (double& c : centroid) c /= dim;

    auto blend = [&](double t) {
      std::vector<double> x(dim);
      for (int d = 0; d < dim; ++d) {
        x[d] = centroid[d] + t * (centroid[d] - simplex[worst][d]);
      }
      return x;
    };

    std::vector<double> reflected = blend(1.0);
    double fr = eval(reflected);
    if (fr < values[order[0]]) {
      std::vector<double> expanded = blend(2.0);
      double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = std::move(expanded);
        values[worst] = fe;
      } else {
        simplex[worst] = std::move(reflected);
        values[worst] = fr;
      }
    } else if (fr < values[second_worst]) {
      simplex[worst] = std::move(reflected);
      values[worst] = fr;
    } else {
      std::vector<double> contracted = blend(fr < values[worst] ? 0.5 : -0.5);
      double fc = eval(contracted);
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = std::move(contracted);
        values[worst] = fc;
      } else {
        for (int i = 0; i <= dim; ++i) {  // shrink toward the best vertex
          if (i == best) continue;
          for (int d = 0; d < dim; ++d) {
            simplex[i][d] = 0.5 * (simplex[i][d] + simplex[best][d]);
          }
          values[i] = eval(simplex[i]);
        }
      }
    }
  }

  int best = static_cast<int>(
      std::min_element(values.begin(), values.end()) - values.begin());
  return {simplex[best], values[best], evals};
}

}  // namespace bdsw
