// Exercises the extern-C surface exactly as an external client would:
// only bdsw/bdsw.h, opaque handles, and status codes.
#include "bdsw/bdsw.h"

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

namespace {
const char* kTriangle = "3 3\n1 2 1\n2 3 1\n1 3 1\n";
}

TEST_CASE("graph parse, encode, solve, report round trip") {
  bdsw_graph* graph = nullptr;
  REQUIRE(bdsw_graph_parse(kTriangle, &graph) == BDSW_OK);
  CHECK(bdsw_graph_num_vertices(graph) == 3);
  CHECK(bdsw_graph_num_edges(graph) == 3);

  bdsw_problem* problem = nullptr;
  REQUIRE(bdsw_graph_to_qubo(graph, &problem) == BDSW_OK);
  CHECK(bdsw_problem_num_vars(problem) == 3);

  bdsw_solver_config config;
  bdsw_solver_config_init(&config);
  config.window_size = 2;
  config.backbone_fraction = 1.0;
  config.subsolver = BDSW_SUBSOLVER_EXACT;
  config.seed = 7;

  bdsw_report* report = nullptr;
  REQUIRE(bdsw_solve(problem, &config, &report) == BDSW_OK);
  CHECK(bdsw_report_best_cost(report) == -2.0);
  CHECK(bdsw_report_num_vars(report) == 3);

  std::vector<uint8_t> bits(3);
  REQUIRE(bdsw_report_best_assignment(report, bits.data(), 3) == BDSW_OK);
  double cut = 0.0;
  REQUIRE(bdsw_cut_value(graph, bits.data(), 3, &cut) == BDSW_OK);
  CHECK(cut == 2.0);

  char* json = bdsw_report_to_json(report);
  REQUIRE(json != nullptr);
  std::string text(json);
  bdsw_string_free(json);
  CHECK(text.find("\"cost_trajectory\"") != std::string::npos);
  CHECK(text.find("\"config\"") != std::string::npos);

  bdsw_report_free(report);
  bdsw_problem_free(problem);
  bdsw_graph_free(graph);
}

TEST_CASE("parse failures set a status and an error message") {
  bdsw_graph* graph = nullptr;
  CHECK(bdsw_graph_parse("2 1\n1 5 1\n", &graph) == BDSW_ERR_PARSE);
  CHECK(std::strlen(bdsw_last_error()) > 0);
  CHECK(bdsw_graph_load("/nonexistent/file.rudy", &graph) == BDSW_ERR_PARSE);
  CHECK(std::string(bdsw_last_error()).find("/nonexistent/file.rudy") !=
        std::string::npos);
  CHECK(bdsw_graph_parse(nullptr, &graph) == BDSW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("problem construction and evaluation through the C API") {
  const int is[] = {0, 0, 1};
  const int js[] = {0, 1, 1};
  const double values[] = {1.0, 2.0, 3.0};
  bdsw_problem* problem = nullptr;
  REQUIRE(bdsw_problem_create(2, is, js, values, 3, &problem) == BDSW_OK);

  const uint8_t ones[] = {1, 1};
  double cost = 0.0;
  REQUIRE(bdsw_problem_evaluate(problem, ones, 2, &cost) == BDSW_OK);
  CHECK(cost == 6.0);

  double best = 0.0;
  int unique = 0;
  uint8_t bits[2] = {9, 9};
  REQUIRE(bdsw_brute_force_qubo(problem, bits, 2, &best, &unique) == BDSW_OK);
  CHECK(best == 0.0);
  CHECK(bits[0] == 0);
  CHECK(bits[1] == 0);

  bdsw_problem_free(problem);
}

TEST_CASE("exhaustive Max-Cut and the approximation ratio helper") {
  bdsw_graph* graph = nullptr;
  REQUIRE(bdsw_graph_parse(kTriangle, &graph) == BDSW_OK);
  uint8_t bits[3];
  double cut = 0.0;
  REQUIRE(bdsw_brute_force_maxcut(graph, bits, 3, &cut) == BDSW_OK);
  CHECK(cut == 2.0);
  bdsw_graph_free(graph);

  double ratio = 0.0;
  REQUIRE(bdsw_approximation_ratio(2988.0, 3064.0, &ratio) == BDSW_OK);
  CHECK(ratio > 0.975);
  CHECK(ratio < 0.976);
  CHECK(bdsw_approximation_ratio(1.0, 0.0, &ratio) ==
        BDSW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("capacity violations surface as BDSW_ERR_CAPACITY") {
  bdsw_problem* problem = nullptr;
  REQUIRE(bdsw_problem_create(25, nullptr, nullptr, nullptr, 0, &problem) ==
          BDSW_OK);
  double best = 0.0;
  CHECK(bdsw_brute_force_qubo(problem, nullptr, 0, &best, nullptr) ==
        BDSW_ERR_CAPACITY);
  bdsw_problem_free(problem);
}
