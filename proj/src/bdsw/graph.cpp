#include "bdsw/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace bdsw {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

WeightedGraph parse_rudy(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = 0;
  long long m = -1;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream header(line);
    if (!(header >> n >> m)) fail(line_no, "expected header \"n m\"");
    std::string rest;
    if (header >> rest) fail(line_no, "trailing tokens after header");
    break;
  }
  if (m < 0) throw ParseError("empty input, no \"n m\" header found");
  if (n < 1) fail(line_no, "vertex count must be positive");

  WeightedGraph graph;
  graph.num_vertices = n;
  graph.edges.reserve(static_cast<std::size_t>(m));
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream edge_line(line);
    int u = 0, v = 0;
    double w = 0.0;
    if (!(edge_line >> u >> v >> w)) fail(line_no, "expected \"u v w\"");
    std::string rest;
    if (edge_line >> rest) fail(line_no, "trailing tokens after edge");
    if (u < 1 || u > n || v < 1 || v > n) {
      fail(line_no, "vertex out of range [1, " + std::to_string(n) + "]");
    }
    if (u == v) fail(line_no, "self loop on vertex " + std::to_string(u));
    int a = std::min(u, v) - 1;
    int b = std::max(u, v) - 1;
    if (!seen.insert({a, b}).second) {
      fail(line_no, "duplicate edge (" + std::to_string(a + 1) + ", " +
                        std::to_string(b + 1) + ")");
    }
    graph.edges.push_back({a, b, w});
  }

  if (static_cast<long long>(graph.edges.size()) != m) {
    throw ParseError("header announced " + std::to_string(m) +
                     " edges but file holds " +
                     std::to_string(graph.edges.size()));
  }
  return graph;
}

WeightedGraph parse_rudy(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_rudy(in);
}

WeightedGraph load_rudy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  return parse_rudy(in);
}

std::string format_rudy(const WeightedGraph& graph) {
  std::ostringstream out;
  out << graph.num_vertices << ' ' << graph.edges.size() << '\n';
  for (const WeightedEdge& e : graph.edges) {
    out << (e.u + 1) << ' ' << (e.v + 1) << ' ' << e.weight << '\n';
  }
  return out.str();
}

QuboProblem maxcut_to_qubo(const WeightedGraph& graph) {
  std::vector<QuboTerm> terms;
  terms.reserve(graph.edges.size() * 3);
  for (const WeightedEdge& e : graph.edges) {
    terms.push_back({e.u, e.u, -e.weight});
    terms.push_back({e.v, e.v, -e.weight});
    terms.push_back({e.u, e.v, 2.0 * e.weight});
  }
  return QuboProblem(graph.num_vertices, terms);
}

double cut_value(const WeightedGraph& graph, const Assignment& x) {
  if (static_cast<int>(x.size()) != graph.num_vertices) {
    throw std::invalid_argument("assignment length does not match vertex count");
  }
  double cut = 0.0;
  for (const WeightedEdge& e : graph.edges) {
    if (x[e.u] != x[e.v]) cut += e.weight;
  }
  return cut;
}

}  // namespace bdsw
