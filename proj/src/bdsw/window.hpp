#pragma once

#include <span>
#include <vector>

#include "bdsw/qubo.hpp"

namespace bdsw {

/// Global variable indices ordered by descending |flip cost|.
struct BackboneSet {
  std::vector<int> ordered_indices;
};

/// Contiguous slice of a backbone set, optimized jointly while everything
/// outside stays fixed.
struct Window {
  std::vector<int> positions;
};

/// Window-restricted problem. Couplings to fixed variables are absorbed into
/// the linear terms; the constant contribution of fully-fixed pairs is
/// dropped, so only energy differences are meaningful.
struct SubQubo {
  QuboProblem inner;
  std::vector<int> index_map;  // window-local index -> global index
  Assignment base_assignment;  // global incumbent the d_i terms came from
};

/// Top-k indices by |flip cost|, descending; ties broken by lowest index.
BackboneSet select_backbone(std::span<const double> flip_costs, int k);

/// Stride-1 windows over the backbone: exactly k - window_size + 1 of them.
std::vector<Window> iterate_windows(const BackboneSet& backbone,
                                    int window_size);

SubQubo build_subqubo(const QuboProblem& problem, const Assignment& x_star,
                      const Window& window);

/// Copy of x_global with the window positions overwritten by y.
Assignment lift_solution(const Assignment& x_global, const Window& window,
                         const Assignment& y);

}  // namespace bdsw
