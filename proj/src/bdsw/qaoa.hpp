#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "bdsw/window.hpp"

namespace bdsw {

/// Raised when a sub-problem exceeds the simulator's qubit capacity.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Diagonal cost Hamiltonian over n qubits. Entry b holds the cost of the
/// assignment whose bit i equals bit i of the integer b.
struct CostDiagonal {
  int n_qubits = 0;
  std::vector<double> energies;  // size 2^n_qubits
};

struct QaoaParams {
  std::vector<double> gammas;  // radians, one per layer
  std::vector<double> betas;
};

struct QaoaOptConfig {
  int grid_resolution = 16;  // coarse grid per angle at depth 1
  int multistarts = 8;       // random simplex starts for depth >= 2
  int max_evaluations = 200; // per simplex descent
  std::uint64_t seed = 0;
};

struct QaoaConfig {
  int depth = 1;
  long long shots = 10240;
  int capacity = 20;           // max simulated qubits
  bool exact_mode = false;     // return the diagonal argmin instead of sampling
  std::uint64_t seed = 0;
  QaoaOptConfig optimizer;
};

struct QaoaResult {
  QaoaParams params_opt;
  double expectation = 0.0;                  // F_p at the optimum
  std::map<std::uint64_t, long long> samples;  // basis index -> count
  std::uint64_t best_bitstring = 0;
  double best_energy = 0.0;
};

using Statevector = std::vector<std::complex<double>>;

CostDiagonal build_cost_diagonal(const SubQubo& sub, int capacity = 20);

/// Applies p alternating layers of cost-phase and transverse-field mixing to
/// the uniform superposition.
Statevector evolve(const CostDiagonal& diagonal, const QaoaParams& params);

/// <psi| H_C |psi> = sum_b |amp_b|^2 E_b.
double expectation(const Statevector& state, const CostDiagonal& diagonal);

/// Grid scan plus simplex refinement; minimizes the expectation.
QaoaParams optimize_params(const CostDiagonal& diagonal, int depth,
                           const QaoaOptConfig& config);

/// Multinomial measurement of |amp|^2, deterministic per seed.
std::map<std::uint64_t, long long> sample(const Statevector& state,
                                          long long shots, std::uint64_t seed);

/// Full pipeline for one sub-problem: diagonal, parameter optimization,
/// sampling, best-of-shots extraction.
QaoaResult solve_subqubo(const SubQubo& sub, const QaoaConfig& config);

/// Window-local assignment encoded by a basis index.
Assignment bits_of(std::uint64_t basis_index, int n_qubits);

}  // namespace bdsw
