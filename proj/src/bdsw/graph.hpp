#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bdsw/qubo.hpp"

namespace bdsw {

struct WeightedEdge {
  int u = 0;  // u < v
  int v = 0;
  double weight = 0.0;
};

/// Undirected weighted graph, 0-indexed, no duplicate edges.
struct WeightedGraph {
  int num_vertices = 0;
  std::vector<WeightedEdge> edges;
};

/// Raised on malformed graph input; message names the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the rudy / G-set text format: a header line "n m" followed by m
/// lines "u v w" with 1-indexed endpoints.
WeightedGraph parse_rudy(std::istream& in);
WeightedGraph parse_rudy(std::string_view text);
WeightedGraph load_rudy_file(const std::string& path);

/// Writes a graph back in the same format (1-indexed).
std::string format_rudy(const WeightedGraph& graph);

/// Minimization encoding of Max-Cut: evaluate(Q, x) == -cut_value(g, x)
/// for every assignment. Q_ii = -sum of incident weights, Q_ij = 2 w_ij.
QuboProblem maxcut_to_qubo(const WeightedGraph& graph);

/// Total weight of edges crossing the partition induced by x.
double cut_value(const WeightedGraph& graph, const Assignment& x);

}  // namespace bdsw
