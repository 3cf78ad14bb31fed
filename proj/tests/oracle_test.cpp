#include "bdsw/oracle.hpp"

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

using namespace bdsw;

TEST_CASE("brute_force_qubo worked examples") {
  ExactSolution single =
      brute_force_qubo(QuboProblem(1, std::vector<QuboTerm>{{0, 0, -1.0}}));
  CHECK(single.best_assignment == Assignment{1});
  CHECK(single.best_cost == -1.0);
  CHECK(single.is_unique);

  ExactSolution triangle = brute_force_qubo(
      maxcut_to_qubo(parse_rudy("3 3\n1 2 1\n2 3 1\n1 3 1\n")));
  CHECK(triangle.best_cost == -2.0);
  CHECK_FALSE(triangle.is_unique);  // six optimal bipartitions

  ExactSolution empty = brute_force_qubo(QuboProblem(3));
  CHECK(empty.best_assignment == Assignment{0, 0, 0});
  CHECK(empty.best_cost == 0.0);
  CHECK_FALSE(empty.is_unique);
}

TEST_CASE("brute_force_qubo matches a naive scan on random problems") {
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 9;
    auto q = testutil::random_qubo(n, 0.5, 7000 + trial);
    ExactSolution fast = brute_force_qubo(q);
    double best = testutil::naive_evaluate(q, testutil::assignment_of(0, n));
    for (std::uint64_t b = 1; b < (1ULL << n); ++b) {
      best = std::min(best,
                      testutil::naive_evaluate(q, testutil::assignment_of(b, n)));
    }
    CHECK(fast.best_cost == doctest::Approx(best).epsilon(1e-9));
    CHECK(evaluate(q, fast.best_assignment) ==
          doctest::Approx(fast.best_cost).epsilon(1e-12));
  }
}

TEST_CASE("brute_force_qubo refuses instances over the cap") {
  CHECK_THROWS_AS(brute_force_qubo(QuboProblem(25)), ResourceError);
}

TEST_CASE("brute_force_maxcut worked examples") {
  CHECK(brute_force_maxcut(parse_rudy("2 1\n1 2 1\n")).best_cut == 1.0);
  CHECK(brute_force_maxcut(parse_rudy("3 3\n1 2 1\n2 3 1\n1 3 1\n")).best_cut ==
        2.0);
  CHECK(brute_force_maxcut(parse_rudy("4 4\n1 2 1\n2 3 1\n3 4 1\n1 4 1\n"))
            .best_cut == 4.0);
}

TEST_CASE("witness partition achieves the reported cut") {
  for (int trial = 0; trial < 10; ++trial) {
    WeightedGraph g = testutil::random_graph(10, 0.4, 8000 + trial);
    ExactCut cut = brute_force_maxcut(g);
    CHECK(cut_value(g, cut.partition) ==
          doctest::Approx(cut.best_cut).epsilon(1e-12));
  }
}

TEST_CASE("cross-oracle consistency: maxcut == -qubo optimum") {
  for (int trial = 0; trial < 10; ++trial) {
    WeightedGraph g = testutil::random_graph(11, 0.5, 9000 + trial);
    ExactCut direct = brute_force_maxcut(g);
    ExactSolution encoded = brute_force_qubo(maxcut_to_qubo(g));
    CHECK(direct.best_cut == doctest::Approx(-encoded.best_cost).epsilon(1e-9));
  }
}
