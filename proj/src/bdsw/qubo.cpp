#include "bdsw/qubo.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace bdsw {

namespace {

void check_dimensions(const QuboProblem& problem, const Assignment& x) {
  if (static_cast<int>(x.size()) != problem.num_variables()) {
    throw std::invalid_argument(
        "assignment length " + std::to_string(x.size()) +
        " does not match problem size " +
        std::to_string(problem.num_variables()));
  }
}

void check_index(const QuboProblem& problem, int i) {
  if (i < 0 || i >= problem.num_variables()) {
    throw std::invalid_argument("variable index " + std::to_string(i) +
                                " out of range [0, " +
                                std::to_string(problem.num_variables()) + ")");
  }
}

}  // namespace

QuboProblem::QuboProblem(int num_variables) : n_(num_variables) {
  if (n_ < 1) {
    throw std::invalid_argument("QUBO needs at least one variable");
  }
  linear_.assign(n_, 0.0);
  adjacency_.resize(n_);
}

QuboProblem::QuboProblem(int num_variables, std::span<const QuboTerm> terms)
    : QuboProblem(num_variables) {
  std::map<std::pair<int, int>, double> accum;
  for (const QuboTerm& t : terms) {
    int i = std::min(t.i, t.j);
    int j = std::max(t.i, t.j);
    if (i < 0 || j >= n_) {
      throw std::invalid_argument("term index pair (" + std::to_string(t.i) +
                                  ", " + std::to_string(t.j) +
                                  ") out of range for n=" + std::to_string(n_));
    }
    accum[{i, j}] += t.value;
  }
  terms_.reserve(accum.size());
  for (const auto& [key, value] : accum) {
    if (value == 0.0) continue;
    auto [i, j] = key;
    terms_.push_back({i, j, value});
    if (i == j) {
      linear_[i] = value;
    } else {
      adjacency_[i].emplace_back(j, value);
      adjacency_[j].emplace_back(i, value);
    }
  }
}

double QuboProblem::coefficient(int i, int j) const {
  int a = std::min(i, j);
  int b = std::max(i, j);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{a, b},
                             [](const QuboTerm& t, const std::pair<int, int>& k) {
                               return std::pair{t.i, t.j} < k;
                             });
  if (it != terms_.end() && it->i == a && it->j == b) return it->value;
  return 0.0;
}

double evaluate(const QuboProblem& problem, const Assignment& x) {
  check_dimensions(problem, x);
  double cost = 0.0;
  for (const QuboTerm& t : problem.terms()) {
    if (t.i == t.j) {
      if (x[t.i]) cost += t.value;
    } else if (x[t.i] && x[t.j]) {
      cost += t.value;
    }
  }
  return cost;
}

double flip_cost(const QuboProblem& problem, const Assignment& x, int i) {
  check_dimensions(problem, x);
  check_index(problem, i);
  double inner = problem.linear(i);
  for (const auto& [j, w] : problem.neighbors(i)) {
    if (x[j]) inner += w;
  }
  return (1.0 - 2.0 * x[i]) * inner;
}

std::vector<double> all_flip_costs(const QuboProblem& problem,
                                   const Assignment& x) {
  check_dimensions(problem, x);
  std::vector<double> costs(problem.num_variables());
  for (int i = 0; i < problem.num_variables(); ++i) {
    double inner = problem.linear(i);
    for (const auto& [j, w] : problem.neighbors(i)) {
      if (x[j]) inner += w;
    }
    costs[i] = (1.0 - 2.0 * x[i]) * inner;
  }
  return costs;
}

FlipState make_flip_state(const QuboProblem& problem, Assignment x) {
  FlipState state;
  state.cost = evaluate(problem, x);
  state.flip_costs = all_flip_costs(problem, x);
  state.bits = std::move(x);
  return state;
}

void apply_flip(const QuboProblem& problem, FlipState& state, int i) {
  check_index(problem, i);
  const double old_bit_sign = 1.0 - 2.0 * state.bits[i];  // +1 if bit was 0
  state.cost += state.flip_costs[i];
  state.flip_costs[i] = -state.flip_costs[i];
  state.bits[i] ^= 1;
  for (const auto& [j, w] : problem.neighbors(i)) {
    state.flip_costs[j] += (1.0 - 2.0 * state.bits[j]) * w * old_bit_sign;
  }
}

IsingModel to_ising(const QuboProblem& problem) {
  const int n = problem.num_variables();
  IsingModel model;
  model.num_spins = n;
  model.fields.assign(n, 0.0);
  // Substituting x_i = (1 - z_i)/2 into f gives, per stored term:
  //   Q_ii x_i          -> Q_ii/2 - (Q_ii/2) z_i
  //   Q_ij x_i x_j      -> Q_ij/4 (1 - z_i - z_j + z_i z_j)
  for (const QuboTerm& t : problem.terms()) {
    if (t.i == t.j) {
      model.fields[t.i] -= t.value / 2.0;
      model.offset += t.value / 2.0;
    } else {
      model.couplings.push_back({t.i, t.j, t.value / 4.0});
      model.fields[t.i] -= t.value / 4.0;
      model.fields[t.j] -= t.value / 4.0;
      model.offset += t.value / 4.0;
    }
  }
  return model;
}

double ising_energy(const IsingModel& model, std::span<const int> spins) {
  if (static_cast<int>(spins.size()) != model.num_spins) {
    throw std::invalid_argument("spin vector length does not match model");
  }
  double energy = model.offset;
  for (int i = 0; i < model.num_spins; ++i) {
    energy += model.fields[i] * spins[i];
  }
  for (const QuboTerm& c : model.couplings) {
    energy += c.value * spins[c.i] * spins[c.j];
  }
  return energy;
}

}  // namespace bdsw
