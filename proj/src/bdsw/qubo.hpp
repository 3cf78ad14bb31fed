#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bdsw {

/// Binary assignment, one byte per variable, each entry 0 or 1.
using Assignment = std::vector<std::uint8_t>;

/// One coefficient of a quadratic binary polynomial. Diagonal terms (i == j)
/// are linear coefficients.
struct QuboTerm {
  int i = 0;
  int j = 0;
  double value = 0.0;
};

/// Sparse upper-triangular QUBO instance:
///   f(x) = sum_i Q_ii x_i + sum_{i<j} Q_ij x_i x_j,  x_i in {0,1}.
///
/// Coefficients for a pair are stored once with i <= j; duplicate input terms
/// are accumulated and exact zeros dropped. Immutable after construction and
/// safe to share across threads.
class QuboProblem {
 public:
  explicit QuboProblem(int num_variables);
  QuboProblem(int num_variables, std::span<const QuboTerm> terms);

  int num_variables() const { return n_; }

  /// Canonical term list, sorted by (i, j) with i <= j, no zeros.
  const std::vector<QuboTerm>& terms() const { return terms_; }

  /// Q coefficient for the unordered pair {i, j}; 0 if absent.
  double coefficient(int i, int j) const;

  double linear(int i) const { return linear_[i]; }

  /// Off-diagonal neighbors of variable i as (j, Q'_ij) pairs.
  std::span<const std::pair<int, double>> neighbors(int i) const {
    return adjacency_[i];
  }

 private:
  int n_;
  std::vector<QuboTerm> terms_;
  std::vector<double> linear_;
  std::vector<std::vector<std::pair<int, double>>> adjacency_;
};

/// Ising form of a QUBO under x_i = (1 - z_i) / 2:
///   H(z) = sum_{i<j} J_ij z_i z_j + sum_i h_i z_i + offset,  z_i in {-1,+1}.
struct IsingModel {
  int num_spins = 0;
  std::vector<QuboTerm> couplings;  // i < j, J_ij
  std::vector<double> fields;       // h_i
  double offset = 0.0;
};

double evaluate(const QuboProblem& problem, const Assignment& x);

/// Cost change from toggling bit i: evaluate(flip(x, i)) - evaluate(x).
double flip_cost(const QuboProblem& problem, const Assignment& x, int i);

std::vector<double> all_flip_costs(const QuboProblem& problem,
                                   const Assignment& x);

/// Mutable search state kept consistent under apply_flip:
/// cost == evaluate(bits) and flip_costs == all_flip_costs(bits).
struct FlipState {
  Assignment bits;
  double cost = 0.0;
  std::vector<double> flip_costs;
};

FlipState make_flip_state(const QuboProblem& problem, Assignment x);

/// Toggles bit i, updating cost and the flip costs of i's neighbors in O(deg).
void apply_flip(const QuboProblem& problem, FlipState& state, int i);

/// Exact Ising equivalent: H(z(x)) == f(x) for every assignment x.
IsingModel to_ising(const QuboProblem& problem);

/// Energy of the spin configuration z (entries +1/-1).
double ising_energy(const IsingModel& model, std::span<const int> spins);

/// Spin image of a binary value under x = (1 - z) / 2.
inline int spin_of(std::uint8_t bit) { return bit ? -1 : +1; }

}  // namespace bdsw
