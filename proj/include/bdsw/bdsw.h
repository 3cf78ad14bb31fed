/* C interface for the BDSW-QAOA hybrid QUBO solver.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return BDSW_OK on success; on failure bdsw_last_error() holds a
 * human-readable message for the calling thread.
 */
#ifndef BDSW_BDSW_H
#define BDSW_BDSW_H

#include <stdint.h>

#if defined(_WIN32)
#  define BDSW_API __declspec(dllexport)
#else
#  define BDSW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bdsw_status {
  BDSW_OK = 0,
  BDSW_ERR_INVALID_ARGUMENT = 1,
  BDSW_ERR_PARSE = 2,
  BDSW_ERR_IO = 3,
  BDSW_ERR_CAPACITY = 4,
  BDSW_ERR_INTERNAL = 5
} bdsw_status;

typedef struct bdsw_graph bdsw_graph;
typedef struct bdsw_problem bdsw_problem;
typedef struct bdsw_report bdsw_report;

/* Message from the most recent failing call on this thread. */
BDSW_API const char* bdsw_last_error(void);

/* ---- Graph loading and Max-Cut encoding ---- */

BDSW_API bdsw_status bdsw_graph_load(const char* path, bdsw_graph** out);
BDSW_API bdsw_status bdsw_graph_parse(const char* text, bdsw_graph** out);
BDSW_API int bdsw_graph_num_vertices(const bdsw_graph* graph);
BDSW_API long long bdsw_graph_num_edges(const bdsw_graph* graph);
BDSW_API void bdsw_graph_free(bdsw_graph* graph);

/* Minimization QUBO with evaluate(Q, x) == -cut(g, x). */
BDSW_API bdsw_status bdsw_graph_to_qubo(const bdsw_graph* graph,
                                        bdsw_problem** out);

/* QUBO built from explicit upper-triangular terms (i <= j, diagonal = linear). */
BDSW_API bdsw_status bdsw_problem_create(int num_variables, const int* is,
                                         const int* js, const double* values,
                                         long long num_terms,
                                         bdsw_problem** out);
BDSW_API int bdsw_problem_num_vars(const bdsw_problem* problem);
BDSW_API bdsw_status bdsw_problem_evaluate(const bdsw_problem* problem,
                                           const uint8_t* bits, int len,
                                           double* out_cost);
BDSW_API void bdsw_problem_free(bdsw_problem* problem);

BDSW_API bdsw_status bdsw_cut_value(const bdsw_graph* graph,
                                    const uint8_t* bits, int len,
                                    double* out_cut);

/* ---- Solver ---- */

typedef enum bdsw_subsolver {
  BDSW_SUBSOLVER_QAOA = 0,
  BDSW_SUBSOLVER_EXACT = 1,
  BDSW_SUBSOLVER_TABU_ONLY = 2
} bdsw_subsolver;

typedef struct bdsw_solver_config {
  long long tabu_iterations; /* 0: default 20*n */
  int tabu_tenure;           /* <0: default min(20, ceil(n/10)) */
  int tabu_max_abs_rule;     /* nonzero: select by max |flip cost| */
  double backbone_fraction;  /* (0, 1], default 0.25 */
  int backbone_k;            /* 0: derive from fraction */
  int window_size;           /* default 15 */
  int qaoa_depth;            /* default 1 */
  long long qaoa_shots;      /* default 10240 */
  int qubit_capacity;        /* default 20 */
  int grid_resolution;       /* default 16 */
  int subsolver;             /* bdsw_subsolver, default QAOA */
  int cycles;                /* default 1 */
  uint64_t seed;
} bdsw_solver_config;

BDSW_API void bdsw_solver_config_init(bdsw_solver_config* config);

BDSW_API bdsw_status bdsw_solve(const bdsw_problem* problem,
                                const bdsw_solver_config* config,
                                bdsw_report** out);

BDSW_API double bdsw_report_best_cost(const bdsw_report* report);
BDSW_API double bdsw_report_initial_tabu_cost(const bdsw_report* report);
BDSW_API int bdsw_report_num_vars(const bdsw_report* report);
BDSW_API bdsw_status bdsw_report_best_assignment(const bdsw_report* report,
                                                 uint8_t* bits, int len);
/* JSON rendering of the full report; release with bdsw_string_free. */
BDSW_API char* bdsw_report_to_json(const bdsw_report* report);
BDSW_API void bdsw_report_free(bdsw_report* report);
BDSW_API void bdsw_string_free(char* text);

/* achieved / optimal, clamped at 1 only against <1e-9 floating overshoot. */
BDSW_API bdsw_status bdsw_approximation_ratio(double achieved, double optimal,
                                              double* out_ratio);

/* ---- Exhaustive oracles (n <= 24) ---- */

BDSW_API bdsw_status bdsw_brute_force_qubo(const bdsw_problem* problem,
                                           uint8_t* bits, int len,
                                           double* out_cost,
                                           int* out_is_unique);
BDSW_API bdsw_status bdsw_brute_force_maxcut(const bdsw_graph* graph,
                                             uint8_t* bits, int len,
                                             double* out_cut);

#ifdef __cplusplus
}
#endif

#endif /* BDSW_BDSW_H */
