#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bdsw/graph.hpp"
#include "bdsw/qubo.hpp"

namespace testutil {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline bdsw::QuboProblem random_qubo(int n, double density,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<bdsw::QuboTerm> terms;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (i != j && uniform(rng, 0.0, 1.0) > density) continue;
      terms.push_back({i, j, uniform(rng, -5.0, 5.0)});
    }
  }
  return bdsw::QuboProblem(n, terms);
}

inline bdsw::WeightedGraph random_graph(int n, double edge_probability,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  bdsw::WeightedGraph graph;
  graph.num_vertices = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform(rng, 0.0, 1.0) > edge_probability) continue;
      int w = 1 + static_cast<int>(rng() % 10);
      graph.edges.push_back({u, v, static_cast<double>(w)});
    }
  }
  return graph;
}

inline bdsw::Assignment random_bits(int n, std::mt19937_64& rng) {
  bdsw::Assignment bits(n);
  for (int i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>(rng() & 1u);
  return bits;
}

/// Independent oracle: dense O(n^2) evaluation of the quadratic form.
inline double naive_evaluate(const bdsw::QuboProblem& problem,
                             const bdsw::Assignment& x) {
  const int n = problem.num_variables();
  double cost = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double q = problem.coefficient(i, j);
      if (q == 0.0) continue;
      cost += (i == j) ? q * x[i] : q * x[i] * x[j];
    }
  }
  return cost;
}

/// Assignment encoded by the bits of `index` (bit i -> variable i).
inline bdsw::Assignment assignment_of(std::uint64_t index, int n) {
  bdsw::Assignment bits(n);
  for (int i = 0; i < n; ++i) {
    bits[i] = static_cast<std::uint8_t>((index >> i) & 1u);
  }
  return bits;
}

}  // namespace testutil
