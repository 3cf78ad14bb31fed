#include "bdsw/qaoa.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "bdsw/nelder_mead.hpp"

namespace bdsw {

namespace {

constexpr std::complex<double> kMinusI{0.0, -1.0};

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> flatten(const QaoaParams& params) {
  std::vector<double> x(params.gammas);
  x.insert(x.end(), params.betas.begin(), params.betas.end());
  return x;
}

QaoaParams unflatten(const std::vector<double>& x) {
  const std::size_t p = x.size() / 2;
  return {{x.begin(), x.begin() + p}, {x.begin() + p, x.end()}};
}

}  // namespace

Assignment bits_of(std::uint64_t basis_index, int n_qubits) {
  Assignment bits(n_qubits);
  for (int i = 0; i < n_qubits; ++i) {
    bits[i] = static_cast<std::uint8_t>((basis_index >> i) & 1u);
  }
  return bits;
}

CostDiagonal build_cost_diagonal(const SubQubo& sub, int capacity) {
  const int n = sub.inner.num_variables();
  if (n > capacity) {
    throw CapacityError("sub-problem has " + std::to_string(n) +
                        " variables but the simulator capacity is " +
                        std::to_string(capacity) + " qubits");
  }
  const std::uint64_t size = 1ULL << n;
  CostDiagonal diagonal{n, std::vector<double>(size)};

  // Gray-code walk: each step flips one bit, so the running cost is updated
  // incrementally from the flip-cost vector.
  FlipState state = make_flip_state(sub.inner, Assignment(n, 0));
  diagonal.energies[0] = state.cost;
  for (std::uint64_t c = 1; c < size; ++c) {
    apply_flip(sub.inner, state, std::countr_zero(c));
    diagonal.energies[c ^ (c >> 1)] = state.cost;
  }
  return diagonal;
}

Statevector evolve(const CostDiagonal& diagonal, const QaoaParams& params) {
  if (params.gammas.size() != params.betas.size() || params.gammas.empty()) {
    throw std::invalid_argument("gamma and beta vectors must share a length >= 1");
  }
  const int n = diagonal.n_qubits;
  const std::uint64_t size = 1ULL << n;
  Statevector state(size, std::complex<double>(1.0 / std::sqrt(double(size)), 0.0));

  for (std::size_t layer = 0; layer < params.gammas.size(); ++layer) {
    const double gamma = params.gammas[layer];
    for (std::uint64_t b = 0; b < size; ++b) {
      state[b] *= std::polar(1.0, -gamma * diagonal.energies[b]);
    }
    const double c = std::cos(params.betas[layer]);
    const std::complex<double> ms = kMinusI * std::sin(params.betas[layer]);
    for (int q = 0; q < n; ++q) {
      const std::uint64_t bit = 1ULL << q;
      for (std::uint64_t b = 0; b < size; ++b) {
        if (b & bit) continue;
        const std::complex<double> a0 = state[b];
        const std::complex<double> a1 = state[b | bit];
        state[b] = c * a0 + ms * a1;
        state[b | bit] = ms * a0 + c * a1;
      }
    }
  }
  return state;
}

double expectation(const Statevector& state, const CostDiagonal& diagonal) {
  if (state.size() != diagonal.energies.size()) {
    throw std::invalid_argument("statevector size does not match diagonal");
  }
  double value = 0.0;
  for (std::size_t b = 0; b < state.size(); ++b) {
    value += std::norm(state[b]) * diagonal.energies[b];
  }
  return value;
}

QaoaParams optimize_params(const CostDiagonal& diagonal, int depth,
                           const QaoaOptConfig& config) {
  if (depth < 1) throw std::invalid_argument("QAOA depth must be >= 1");

  auto objective = [&](const std::vector<double>& x) {
    return expectation(evolve(diagonal, unflatten(x)), diagonal);
  };

  std::vector<std::vector<double>> starts;
  if (depth == 1) {
    const int res = std::max(config.grid_resolution, 1);
    std::vector<double> best{0.0, 0.0};
    double best_value = objective(best);
    for (int gi = 0; gi < res; ++gi) {
      for (int bi = 0; bi < res; ++bi) {
        std::vector<double> x{std::numbers::pi * gi / res,
                              std::numbers::pi * bi / res};
        double v = objective(x);
        if (v < best_value) {
          best_value = v;
          best = x;
        }
      }
    }
    starts.push_back(best);
  } else {
    starts.emplace_back(2 * depth, 0.0);
    std::mt19937_64 rng(config.seed);
    for (int s = 0; s < config.multistarts; ++s) {
      std::vector<double> x(2 * depth);
      for (double& v : x) v = std::numbers::pi * uniform_unit(rng);
      starts.push_back(std::move(x));
    }
  }

  std::vector<double> best_point = starts.front();
  double best_value = objective(best_point);
  NelderMeadOptions nm;
  nm.max_evaluations = config.max_evaluations;
  for (const auto& start : starts) {
    NelderMeadResult r = nelder_mead(objective, start, nm);
    if (r.value < best_value) {
      best_value = r.value;
      best_point = r.point;
    }
  }
  return unflatten(best_point);
}

std::map<std::uint64_t, long long> sample(const Statevector& state,
                                          long long shots,
                                          std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shot count must be >= 1");
  std::vector<double> cdf(state.size());
  double total = 0.0;
  for (std::size_t b = 0; b < state.size(); ++b) {
    total += std::norm(state[b]);
    cdf[b] = total;
  }
  std::map<std::uint64_t, long long> counts;
  std::mt19937_64 rng(seed);
  for (long long s = 0; s < shots; ++s) {
    const double u = uniform_unit(rng) * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::uint64_t b = static_cast<std::uint64_t>(
        std::min<std::ptrdiff_t>(it - cdf.begin(), cdf.size() - 1));
    ++counts[b];
  }
  return counts;
}

QaoaResult solve_subqubo(const SubQubo& sub, const QaoaConfig& config) {
  CostDiagonal diagonal = build_cost_diagonal(sub, config.capacity);
  QaoaResult result;

  if (config.exact_mode) {
    auto it = std::min_element(diagonal.energies.begin(), diagonal.energies.end());
    result.best_bitstring =
        static_cast<std::uint64_t>(it - diagonal.energies.begin());
    result.best_energy = *it;
    result.expectation = *it;
    return result;
  }

  QaoaOptConfig opt = config.optimizer;
  opt.seed = config.seed;
  result.params_opt = optimize_params(diagonal, config.depth, opt);
  Statevector state = evolve(diagonal, result.params_opt);
  result.expectation = expectation(state, diagonal);
  result.samples = sample(state, config.shots, config.seed);

  bool first = true;
  for (const auto& [bitstring, count] : result.samples) {
    const double energy = diagonal.energies[bitstring];
    if (first || energy < result.best_energy) {
      result.best_bitstring = bitstring;
      result.best_energy = energy;
      first = false;
    }
  }
  return result;
}

}  // namespace bdsw
