#include "bdsw/bdsw.h"

#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "bdsw/graph.hpp"
#include "bdsw/oracle.hpp"
#include "bdsw/qaoa.hpp"
#include "bdsw/solver.hpp"

struct bdsw_graph {
  bdsw::WeightedGraph graph;
};

struct bdsw_problem {
  bdsw::QuboProblem problem;
};

struct bdsw_report {
  bdsw::RunReport report;
};

namespace {

thread_local std::string g_last_error;

bdsw_status set_error(bdsw_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

/// Runs `body`, translating C++ exceptions into status codes.
template <typename Fn>
bdsw_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const bdsw::ParseError& e) {
    return set_error(BDSW_ERR_PARSE, e.what());
  } catch (const bdsw::CapacityError& e) {
    return set_error(BDSW_ERR_CAPACITY, e.what());
  } catch (const bdsw::ResourceError& e) {
    return set_error(BDSW_ERR_CAPACITY, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(BDSW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(BDSW_ERR_INTERNAL, e.what());
  }
}

bdsw_status require(bool ok, const char* message) {
  return ok ? BDSW_OK : set_error(BDSW_ERR_INVALID_ARGUMENT, message);
}

bdsw_status copy_bits(const bdsw::Assignment& source, uint8_t* bits, int len) {
  if (bits == nullptr || len != static_cast<int>(source.size())) {
    return set_error(BDSW_ERR_INVALID_ARGUMENT,
                     "output buffer length does not match variable count");
  }
  std::memcpy(bits, source.data(), source.size());
  return BDSW_OK;
}

bdsw::SolverConfig convert(const bdsw_solver_config& c) {
  bdsw::SolverConfig config;
  config.tabu.iterations = c.tabu_iterations;
  config.tabu.tenure = c.tabu_tenure;
  config.tabu.max_abs_move_rule = c.tabu_max_abs_rule != 0;
  config.backbone_fraction = c.backbone_fraction;
  config.backbone_k = c.backbone_k;
  config.window_size = c.window_size;
  config.qaoa.depth = c.qaoa_depth;
  config.qaoa.shots = c.qaoa_shots;
  config.qaoa.capacity = c.qubit_capacity;
  config.qaoa.optimizer.grid_resolution = c.grid_resolution;
  config.cycles = c.cycles;
  config.seed = c.seed;
  switch (c.subsolver) {
    case BDSW_SUBSOLVER_QAOA: config.subsolver = bdsw::Subsolver::kQaoa; break;
    case BDSW_SUBSOLVER_EXACT: config.subsolver = bdsw::Subsolver::kExact; break;
    case BDSW_SUBSOLVER_TABU_ONLY:
      config.subsolver = bdsw::Subsolver::kTabuOnly;
      break;
    default:
      throw std::invalid_argument("unknown subsolver code " +
                                  std::to_string(c.subsolver));
  }
  return config;
}

}  // namespace

extern "C" {

const char* bdsw_last_error(void) { return g_last_error.c_str(); }

bdsw_status bdsw_graph_load(const char* path, bdsw_graph** out) {
  if (auto s = require(path && out, "null argument"); s != BDSW_OK) return s;
  return guarded([&] {
    *out = new bdsw_graph{bdsw::load_rudy_file(path)};
    return BDSW_OK;
  });
}

bdsw_status bdsw_graph_parse(const char* text, bdsw_graph** out) {
  if (auto s = require(text && out, "null argument"); s != BDSW_OK) return s;
  return guarded([&] {
    *out = new bdsw_graph{bdsw::parse_rudy(std::string_view(text))};
    return BDSW_OK;
  });
}

int bdsw_graph_num_vertices(const bdsw_graph* graph) {
  return graph ? graph->graph.num_vertices : 0;
}

long long bdsw_graph_num_edges(const bdsw_graph* graph) {
  return graph ? static_cast<long long>(graph->graph.edges.size()) : 0;
}

void bdsw_graph_free(bdsw_graph* graph) { delete graph; }

bdsw_status bdsw_graph_to_qubo(const bdsw_graph* graph, bdsw_problem** out) {
  if (auto s = require(graph && out, "null argument"); s != BDSW_OK) return s;
  return guarded([&] {
    *out = new bdsw_problem{bdsw::maxcut_to_qubo(graph->graph)};
    return BDSW_OK;
  });
}

bdsw_status bdsw_problem_create(int num_variables, const int* is, const int* js,
                                const double* values, long long num_terms,
                                bdsw_problem** out) {
  if (auto s = require(out && (num_terms == 0 || (is && js && values)),
                       "null argument");
      s != BDSW_OK) {
    return s;
  }
  return guarded([&] {
    std::vector<bdsw::QuboTerm> terms(static_cast<std::size_t>(num_terms));
    for (long long t = 0; t < num_terms; ++t) {
      terms[t] = {is[t], js[t], values[t]};
    }
    *out = new bdsw_problem{bdsw::QuboProblem(num_variables, terms)};
    return BDSW_OK;
  });
}

int bdsw_problem_num_vars(const bdsw_problem* problem) {
  return problem ? problem->problem.num_variables() : 0;
}

bdsw_status bdsw_problem_evaluate(const bdsw_problem* problem,
                                  const uint8_t* bits, int len,
                                  double* out_cost) {
  if (auto s = require(problem && bits && out_cost, "null argument");
      s != BDSW_OK) {
    return s;
  }
  return guarded([&] {
    bdsw::Assignment x(bits, bits + len);
    *out_cost = bdsw::evaluate(problem->problem, x);
    return BDSW_OK;
  });
}

void bdsw_problem_free(bdsw_problem* problem) { delete problem; }

bdsw_status bdsw_cut_value(const bdsw_graph* graph, const uint8_t* bits,
                           int len, double* out_cut) {
  if (auto s = require(graph && bits && out_cut, "null argument");
      s != BDSW_OK) {
    return s;
  }
  return guarded([&] {
    bdsw::Assignment x(bits, bits + len);
    *out_cut = bdsw::cut_value(graph->graph, x);
    return BDSW_OK;
  });
}

void bdsw_solver_config_init(bdsw_solver_config* config) {
  if (!config) return;
  *config = bdsw_solver_config{};
  config->tabu_iterations = 0;
  config->tabu_tenure = -1;
  config->backbone_fraction = 0.25;
  config->window_size = 15;
  config->qaoa_depth = 1;
  config->qaoa_shots = 10240;
  config->qubit_capacity = 20;
  config->grid_resolution = 16;
  config->subsolver = BDSW_SUBSOLVER_QAOA;
  config->cycles = 1;
}

bdsw_status bdsw_solve(const bdsw_problem* problem,
                       const bdsw_solver_config* config, bdsw_report** out) {
  if (auto s = require(problem && config && out, "null argument");
      s != BDSW_OK) {
    return s;
  }
  return guarded([&] {
    *out = new bdsw_report{bdsw::bdsw_solve(problem->problem, convert(*config))};
    return BDSW_OK;
  });
}

double bdsw_report_best_cost(const bdsw_report* report) {
  return report ? report->report.best_cost : 0.0;
}

double bdsw_report_initial_tabu_cost(const bdsw_report* report) {
  return report ? report->report.initial_tabu_cost : 0.0;
}

int bdsw_report_num_vars(const bdsw_report* report) {
  return report ? report->report.num_variables : 0;
}

bdsw_status bdsw_report_best_assignment(const bdsw_report* report,
                                        uint8_t* bits, int len) {
  if (auto s = require(report != nullptr, "null report"); s != BDSW_OK) return s;
  return copy_bits(report->report.best_assignment, bits, len);
}

char* bdsw_report_to_json(const bdsw_report* report) {
  if (!report) return nullptr;
  try {
    std::string json = bdsw::report_to_json(report->report);
    char* buffer = new char[json.size() + 1];
    std::memcpy(buffer, json.c_str(), json.size() + 1);
    return buffer;
  } catch (const std::exception& e) {
    set_error(BDSW_ERR_INTERNAL, e.what());
    return nullptr;
  }
}

void bdsw_report_free(bdsw_report* report) { delete report; }

void bdsw_string_free(char* text) { delete[] text; }

bdsw_status bdsw_approximation_ratio(double achieved, double optimal,
                                     double* out_ratio) {
  if (auto s = require(out_ratio != nullptr, "null output"); s != BDSW_OK) {
    return s;
  }
  return guarded([&] {
    *out_ratio = bdsw::approximation_ratio(achieved, optimal);
    return BDSW_OK;
  });
}

bdsw_status bdsw_brute_force_qubo(const bdsw_problem* problem, uint8_t* bits,
                                  int len, double* out_cost,
                                  int* out_is_unique) {
  if (auto s = require(problem && out_cost, "null argument"); s != BDSW_OK) {
    return s;
  }
  return guarded([&] {
    bdsw::ExactSolution solution = bdsw::brute_force_qubo(problem->problem);
    if (bits) {
      if (auto s = copy_bits(solution.best_assignment, bits, len); s != BDSW_OK) {
        return s;
      }
    }
    *out_cost = solution.best_cost;
    if (out_is_unique) *out_is_unique = solution.is_unique ? 1 : 0;
    return BDSW_OK;
  });
}

bdsw_status bdsw_brute_force_maxcut(const bdsw_graph* graph, uint8_t* bits,
                                    int len, double* out_cut) {
  if (auto s = require(graph && out_cut, "null argument"); s != BDSW_OK) {
    return s;
  }
  return guarded([&] {
    bdsw::ExactCut cut = bdsw::brute_force_maxcut(graph->graph);
    if (bits) {
      if (auto s = copy_bits(cut.partition, bits, len); s != BDSW_OK) return s;
    }
    *out_cut = cut.best_cut;
    return BDSW_OK;
  });
}

}  // extern "C"
