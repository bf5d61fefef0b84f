/*
 * C interface to libjaco: Jaco graph construction, structural invariants
 * and exact chromatic-sum analysis.
 *
 * Conventions:
 *  - Every fallible call returns a jaco_status. On failure the outputs are
 *    left untouched and jaco_last_error() describes what went wrong on the
 *    calling thread.
 *  - Objects behind opaque handles are created by *_build / *_create /
 *    *_compute calls and released with the matching *_free. Passing NULL to
 *    a *_free function is a no-op.
 *  - Vertex indices and colours are 1-based.
 *  - Handles are immutable after creation except jaco_simple_graph (edges)
 *    and jaco_stream (cursor); distinct handles may be used from different
 *    threads concurrently.
 */
#ifndef JACO_JACO_H
#define JACO_JACO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define JACO_API __declspec(dllexport)
#else
#define JACO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jaco_status {
  JACO_OK = 0,
  JACO_ERR_PARSE = 1,
  JACO_ERR_OVERFLOW = 2,
  JACO_ERR_INVALID_ORDER = 3,
  JACO_ERR_INDEX_OUT_OF_RANGE = 4,
  JACO_ERR_ARC_BUDGET = 5,
  JACO_ERR_SEARCH_BUDGET = 6,
  JACO_ERR_UNREACHABLE = 7,
  JACO_ERR_HOPE_NOT_COMPLETE = 8,
  JACO_ERR_INVALID_BRAID = 9,
  JACO_ERR_ORDER_TOO_LARGE = 10,
  JACO_ERR_BUDGET = 11,
  JACO_ERR_INVALID_ARGUMENT = 12,
  JACO_ERR_OUT_OF_MEMORY = 13,
  JACO_ERR_INTERNAL = 14
} jaco_status;

JACO_API const char* jaco_version(void);
JACO_API const char* jaco_status_name(jaco_status status);

/* Message for the most recent failure on this thread ("" if none). */
JACO_API const char* jaco_last_error(void);

/* Byte offset of the most recent JACO_ERR_PARSE on this thread. */
JACO_API size_t jaco_last_error_offset(void);

/* ---------------------------------------------------------------------- */
/* Incidence polynomials f(x) = a*x^2 + b*x + c                           */

typedef struct jaco_poly {
  uint64_t a;
  uint64_t b;
  uint64_t c;
} jaco_poly;

typedef enum jaco_family {
  JACO_FAMILY_CONSTANT = 0,
  JACO_FAMILY_LINEAR = 1,
  JACO_FAMILY_QUADRATIC = 2
} jaco_family;

/* Exact rational in lowest terms, den > 0. */
typedef struct jaco_rational {
  int64_t num;
  int64_t den;
} jaco_rational;

JACO_API jaco_status jaco_poly_parse(const char* text, jaco_poly* out);

/* Writes the canonical form (`a*x^2+b*x+c`, zero terms elided) and a NUL.
 * *len receives the length without the NUL even when cap is too small, in
 * which case JACO_ERR_INVALID_ARGUMENT is returned. buf may be NULL when
 * cap is 0. */
JACO_API jaco_status jaco_poly_format(jaco_poly p, char* buf, size_t cap,
                                      size_t* len);

JACO_API jaco_status jaco_poly_evaluate(jaco_poly p, uint64_t x,
                                        uint64_t* out);
JACO_API jaco_family jaco_poly_classify(jaco_poly p);

/* a(2i-1) + b for i >= 2. */
JACO_API jaco_status jaco_poly_difference_bound(jaco_poly p, uint64_t i,
                                                uint64_t* out);

/* f(1) + 1: the largest order with a complete underlying graph. */
JACO_API jaco_status jaco_poly_completeness_threshold(jaco_poly p,
                                                      uint64_t* out);

typedef struct jaco_max_degree_location {
  uint64_t order;           /* smallest k with Delta(J_k) = f(f(1)) */
  uint64_t prime_vertex;    /* f(1) */
  uint64_t max_degree;      /* f(f(1)) */
  uint64_t published_order; /* printed closed form f(f(1)) - f(1) + 1 */
} jaco_max_degree_location;

/* Requires a >= 1. */
JACO_API jaco_status jaco_poly_locate_max_degree(
    jaco_poly p, jaco_max_degree_location* out);

/* ---------------------------------------------------------------------- */
/* Jaco graphs J_n(f)                                                     */

typedef struct jaco_graph jaco_graph;

typedef struct jaco_vertex {
  uint64_t index;
  uint64_t in_degree;
  uint64_t reach; /* i + f(i) - in_degree */
} jaco_vertex;

JACO_API jaco_status jaco_graph_build(jaco_poly p, uint64_t n,
                                      jaco_graph** out);
JACO_API void jaco_graph_free(jaco_graph* g);

JACO_API uint64_t jaco_graph_order(const jaco_graph* g);
JACO_API jaco_poly jaco_graph_incidence(const jaco_graph* g);
JACO_API jaco_status jaco_graph_vertex(const jaco_graph* g, uint64_t i,
                                       jaco_vertex* out);

/* f(i) - d^-(v_i): out-degree of v_i in the root graph. */
JACO_API jaco_status jaco_graph_out_degree_root(const jaco_graph* g,
                                                uint64_t i, uint64_t* out);

JACO_API jaco_status jaco_graph_arc_count(const jaco_graph* g,
                                          uint64_t* out);

/* Lexicographically sorted arcs as (i, j) pairs, 2*count integers. With
 * pairs == NULL only *count is set. Fails with JACO_ERR_ARC_BUDGET when
 * the graph has more than `budget` arcs (0 selects the default, 10^7). */
JACO_API jaco_status jaco_graph_arcs(const jaco_graph* g, uint64_t budget,
                                     uint64_t* pairs, size_t cap_pairs,
                                     size_t* count);

/* Underlying degrees; `out` must hold jaco_graph_order(g) values. */
JACO_API jaco_status jaco_graph_underlying_degrees(const jaco_graph* g,
                                                   uint64_t* out, size_t cap);

/* Minimum number of arcs from v_1 to v_n; JACO_ERR_UNREACHABLE otherwise. */
JACO_API jaco_status jaco_graph_v1_distance(const jaco_graph* g,
                                            uint64_t* out);

/* Vertices above the prime Jaconian vertex; first > last when empty. */
JACO_API jaco_status jaco_graph_hope_range(const jaco_graph* g,
                                           uint64_t* first, uint64_t* last);

/* Connected components as (first, last) index pairs, 2*count integers.
 * With ranges == NULL only *count is set. */
JACO_API jaco_status jaco_graph_components(const jaco_graph* g,
                                           uint64_t* ranges, size_t cap_pairs,
                                           size_t* count);

typedef struct jaco_invariants jaco_invariants;

JACO_API jaco_status jaco_graph_invariants(const jaco_graph* g,
                                           jaco_invariants** out);
JACO_API void jaco_invariants_free(jaco_invariants* inv);

JACO_API uint64_t jaco_invariants_max_degree(const jaco_invariants* inv);
JACO_API uint64_t jaco_invariants_min_degree(const jaco_invariants* inv);
JACO_API uint64_t jaco_invariants_prime_jaconian(const jaco_invariants* inv);
JACO_API size_t jaco_invariants_jaconian_count(const jaco_invariants* inv);
/* k-th (0-based) member of the Jaconian set, ascending; 0 if k is out of
 * range. */
JACO_API uint64_t jaco_invariants_jaconian_at(const jaco_invariants* inv,
                                              size_t k);
JACO_API void jaco_invariants_hope_range(const jaco_invariants* inv,
                                         uint64_t* first, uint64_t* last);
JACO_API jaco_status jaco_invariants_v1_distance(const jaco_invariants* inv,
                                                 uint64_t* out);

/* ---------------------------------------------------------------------- */
/* Root graph stream                                                      */

typedef struct jaco_stream jaco_stream;

JACO_API jaco_status jaco_stream_open(jaco_poly p, jaco_stream** out);
/* Yields v_1, v_2, ...; JACO_ERR_OVERFLOW ends the stream for good. */
JACO_API jaco_status jaco_stream_next(jaco_stream* s, jaco_vertex* out);
JACO_API void jaco_stream_free(jaco_stream* s);

/* ---------------------------------------------------------------------- */
/* Simple graphs and colourings                                           */

typedef struct jaco_simple_graph jaco_simple_graph;
typedef struct jaco_colouring jaco_colouring;

JACO_API jaco_status jaco_simple_graph_create(uint64_t order,
                                              jaco_simple_graph** out);
JACO_API jaco_status jaco_simple_graph_complete(uint64_t order,
                                                jaco_simple_graph** out);
/* arc_budget 0 selects the default. */
JACO_API jaco_status jaco_simple_graph_underlying(const jaco_graph* g,
                                                  uint64_t arc_budget,
                                                  jaco_simple_graph** out);
/* Braided string of `blocks` cliques; `overlaps` holds blocks-1 values. */
JACO_API jaco_status jaco_simple_graph_braided(const uint64_t* orders,
                                               size_t blocks,
                                               const uint64_t* overlaps,
                                               jaco_simple_graph** out);
JACO_API void jaco_simple_graph_free(jaco_simple_graph* g);

JACO_API jaco_status jaco_simple_graph_add_edge(jaco_simple_graph* g,
                                                uint64_t u, uint64_t v);
JACO_API uint64_t jaco_simple_graph_order(const jaco_simple_graph* g);
JACO_API uint64_t jaco_simple_graph_edge_count(const jaco_simple_graph* g);
/* Edges (u < v) sorted, 2*count integers; pairs == NULL sets only *count. */
JACO_API jaco_status jaco_simple_graph_edges(const jaco_simple_graph* g,
                                             uint64_t* pairs,
                                             size_t cap_pairs, size_t* count);

/* node_budget 0 selects the default search budget. */
JACO_API jaco_status jaco_chromatic_number(const jaco_simple_graph* g,
                                           uint64_t node_budget,
                                           uint32_t* out);
JACO_API jaco_status jaco_min_sum_colouring(const jaco_simple_graph* g,
                                            uint64_t node_budget,
                                            jaco_colouring** out);
JACO_API jaco_status jaco_greedy_min_sum(const jaco_simple_graph* g,
                                         uint64_t node_budget,
                                         jaco_colouring** out);
JACO_API jaco_status jaco_colouring_from_assignment(
    const jaco_simple_graph* g, const uint32_t* colours, size_t n,
    jaco_colouring** out);
JACO_API jaco_status jaco_colouring_reverse(const jaco_colouring* s,
                                            jaco_colouring** out);
JACO_API void jaco_colouring_free(jaco_colouring* s);

JACO_API uint32_t jaco_colouring_k(const jaco_colouring* s);
JACO_API uint64_t jaco_colouring_order(const jaco_colouring* s);
/* 0 when v is out of range. */
JACO_API uint32_t jaco_colouring_colour_of(const jaco_colouring* s,
                                           uint64_t v);
/* theta(c_c); 0 when c is out of range. */
JACO_API uint64_t jaco_colouring_weight(const jaco_colouring* s, uint32_t c);
JACO_API uint64_t jaco_colouring_sum(const jaco_colouring* s);
JACO_API void jaco_colouring_stats(const jaco_colouring* s,
                                   jaco_rational* mean,
                                   jaco_rational* variance);

typedef struct jaco_chroma_report {
  uint64_t order;
  uint32_t chi;
  uint64_t chi_minus;
  uint64_t chi_plus;
  jaco_rational mu_minus;
  jaco_rational mu_plus;
  jaco_rational var_minus;
  jaco_rational var_plus;
} jaco_chroma_report;

/* The canonical minimum colouring is returned through min_colouring when it
 * is not NULL; the maximum colouring is its reverse. */
JACO_API jaco_status jaco_chroma_report_compute(const jaco_simple_graph* g,
                                                uint64_t node_budget,
                                                jaco_chroma_report* out,
                                                jaco_colouring** min_colouring);

/* ---------------------------------------------------------------------- */
/* Braided complete graphs                                                */

JACO_API jaco_status jaco_braided_mu_min(uint64_t n, uint64_t m, uint64_t l,
                                         jaco_rational* out);
JACO_API jaco_status jaco_braided_mu_max(uint64_t n, uint64_t m, uint64_t l,
                                         jaco_rational* out);
/* The originally printed (inconsistent) maximum-mean expression. */
JACO_API jaco_status jaco_braided_mu_max_published(uint64_t n, uint64_t m,
                                                   uint64_t l,
                                                   jaco_rational* out);
JACO_API jaco_status jaco_complete_graph_stats(uint64_t n, uint64_t* sum,
                                               jaco_rational* mean,
                                               jaco_rational* variance);

/* ---------------------------------------------------------------------- */
/* Reference values for f(x) = x^2 as printed (unreduced)                */

typedef struct jaco_published_table1_row {
  uint64_t i;
  uint64_t in_degree;
  uint64_t out_degree_root;
  uint64_t jaconian[16];
  size_t jaconian_count;
  uint64_t max_degree;
  uint64_t dist_v1;
} jaco_published_table1_row;

typedef struct jaco_published_table3_row {
  uint64_t i;
  uint64_t chi_minus;
  uint64_t chi_plus;
  jaco_rational mu_minus;
  jaco_rational mu_plus;
  jaco_rational var_minus;
  jaco_rational var_plus;
} jaco_published_table3_row;

JACO_API size_t jaco_published_table1_rows(void);
JACO_API jaco_status jaco_published_table1_get(
    uint64_t i, jaco_published_table1_row* out);
JACO_API size_t jaco_published_table3_rows(void);
JACO_API jaco_status jaco_published_table3_get(
    uint64_t i, jaco_published_table3_row* out);
JACO_API jaco_rational jaco_published_braided_var_plus(void);

/* ---------------------------------------------------------------------- */
/* Property verification                                                  */

typedef struct jaco_verify_options {
  const jaco_poly* polys; /* NULL or empty: default grid */
  size_t poly_count;
  uint64_t max_order;           /* structural properties, default 200 */
  uint64_t colouring_max_order; /* colouring oracles, default 12 */
  const char* const* properties; /* ids or aliases; NULL: all */
  size_t property_count;
} jaco_verify_options;

typedef struct jaco_property_result {
  const char* id;
  const char* alias;
  const char* description;
  int informational;
  uint64_t checked;
  uint64_t failures;
  const char* first_failure;
} jaco_property_result;

typedef struct jaco_verify_report jaco_verify_report;

JACO_API void jaco_verify_options_init(jaco_verify_options* opts);
JACO_API jaco_status jaco_verify_run(const jaco_verify_options* opts,
                                     jaco_verify_report** out);
JACO_API void jaco_verify_report_free(jaco_verify_report* r);
JACO_API int jaco_verify_report_passed(const jaco_verify_report* r);
JACO_API size_t jaco_verify_report_count(const jaco_verify_report* r);
/* Strings stay valid until the report is freed. */
JACO_API jaco_status jaco_verify_report_get(const jaco_verify_report* r,
                                            size_t k,
                                            jaco_property_result* out);

#ifdef __cplusplus
}
#endif

#endif /* JACO_JACO_H */
