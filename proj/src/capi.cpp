#include "jaco/jaco.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "jaco/braided.hpp"
#include "jaco/builder.hpp"
#include "jaco/chroma.hpp"
#include "jaco/error.hpp"
#include "jaco/incidence.hpp"
#include "jaco/invariants.hpp"
#include "jaco/published.hpp"
#include "jaco/verify.hpp"

struct jaco_graph {
  jaco::JacoGraph graph;
};

struct jaco_invariants {
  jaco::InvariantReport report;
};

struct jaco_stream {
  jaco::RootStream stream;
};

struct jaco_simple_graph {
  jaco::SimpleGraph graph;
};

struct jaco_colouring {
  jaco::ProperColouring colouring;
};

struct jaco_verify_report {
  jaco::VerifyReport report;
};

namespace {

struct ErrorState {
  std::string message;
  std::size_t offset = 0;
};

ErrorState& error_state() {
  thread_local ErrorState state;
  return state;
}

jaco_status fail(jaco_status status, const char* message) {
  try {
    error_state().message = message;
  } catch (...) {
  }
  return status;
}

jaco_status translate_current_exception() {
  try {
    throw;
  } catch (const jaco::ParseError& e) {
    error_state().offset = e.offset();
    return fail(JACO_ERR_PARSE, e.what());
  } catch (const jaco::Error& e) {
    return fail(static_cast<jaco_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(JACO_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(JACO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(JACO_ERR_INTERNAL, "unknown error");
  }
}

// Runs `body`; exceptions become status codes and the thread-local message.
template <typename Body>
jaco_status guarded(Body&& body) {
  try {
    body();
    return JACO_OK;
  } catch (...) {
    return translate_current_exception();
  }
}

#define JACO_REQUIRE(cond)                                              \
  do {                                                                  \
    if (!(cond)) {                                                      \
      return fail(JACO_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
    }                                                                   \
  } while (0)

jaco::IncidencePolynomial to_cpp(jaco_poly p) { return {p.a, p.b, p.c}; }
jaco_poly to_c(const jaco::IncidencePolynomial& p) { return {p.a, p.b, p.c}; }
jaco_rational to_c(const jaco::Rational& r) {
  return {r.numerator(), r.denominator()};
}
jaco_vertex to_c(const jaco::VertexRecord& r) {
  return {r.index, r.in_degree, r.reach};
}

jaco::SearchOptions search_options(std::uint64_t node_budget) {
  jaco::SearchOptions opts;
  if (node_budget != 0) opts.node_budget = node_budget;
  return opts;
}

// Copies pairs into a caller buffer following the NULL-means-count rule.
template <typename Pairs>
jaco_status write_pairs(const Pairs& pairs, std::uint64_t* out,
                        std::size_t cap_pairs, std::size_t* count) {
  *count = pairs.size();
  if (out == nullptr) return JACO_OK;
  if (cap_pairs < pairs.size()) {
    return fail(JACO_ERR_INVALID_ARGUMENT, "output buffer too small");
  }
  std::size_t k = 0;
  for (const auto& [x, y] : pairs) {
    out[k++] = x;
    out[k++] = y;
  }
  return JACO_OK;
}

}  // namespace

extern "C" {

const char* jaco_version(void) { return "1.0.0"; }

const char* jaco_status_name(jaco_status status) {
  switch (status) {
    case JACO_OK: return "ok";
    case JACO_ERR_PARSE: return "parse error";
    case JACO_ERR_OVERFLOW: return "overflow";
    case JACO_ERR_INVALID_ORDER: return "invalid order";
    case JACO_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
    case JACO_ERR_ARC_BUDGET: return "arc budget exceeded";
    case JACO_ERR_SEARCH_BUDGET: return "search budget exceeded";
    case JACO_ERR_UNREACHABLE: return "unreachable";
    case JACO_ERR_HOPE_NOT_COMPLETE: return "hope subgraph not complete";
    case JACO_ERR_INVALID_BRAID: return "invalid braid";
    case JACO_ERR_ORDER_TOO_LARGE: return "order too large";
    case JACO_ERR_BUDGET: return "budget exceeded";
    case JACO_ERR_INVALID_ARGUMENT: return "invalid argument";
    case JACO_ERR_OUT_OF_MEMORY: return "out of memory";
    case JACO_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* jaco_last_error(void) { return error_state().message.c_str(); }

size_t jaco_last_error_offset(void) { return error_state().offset; }

/* -- polynomials -------------------------------------------------------- */

jaco_status jaco_poly_parse(const char* text, jaco_poly* out) {
  JACO_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] { *out = to_c(jaco::parse(text)); });
}

jaco_status jaco_poly_format(jaco_poly p, char* buf, size_t cap, size_t* len) {
  JACO_REQUIRE(len != nullptr && (buf != nullptr || cap == 0));
  return guarded([&] {
    const std::string text = jaco::format(to_cpp(p));
    *len = text.size();
    if (cap < text.size() + 1) {
      throw jaco::Error(jaco::ErrorCode::InvalidArgument,
                        "format buffer too small");
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
  });
}

jaco_status jaco_poly_evaluate(jaco_poly p, uint64_t x, uint64_t* out) {
  JACO_REQUIRE(out != nullptr);
  return guarded([&] { *out = jaco::evaluate(to_cpp(p), x); });
}

jaco_family jaco_poly_classify(jaco_poly p) {
  return static_cast<jaco_family>(jaco::classify(to_cpp(p)));
}

jaco_status jaco_poly_difference_bound(jaco_poly p, uint64_t i, uint64_t* out) {
  JACO_REQUIRE(out != nullptr);
  return guarded([&] { *out = jaco::forward_difference_bound(to_cpp(p), i); });
}

jaco_status jaco_poly_completeness_threshold(jaco_poly p, uint64_t* out) {
  JACO_REQUIRE(out != nullptr);
  return guarded([&] { *out = jaco::completeness_threshold(to_cpp(p)); });
}

jaco_status jaco_poly_locate_max_degree(jaco_poly p,
                                        jaco_max_degree_location* out) {
  JACO_REQUIRE(out != nullptr);
  return guarded([&] {
    const auto loc = jaco::smallest_with_max_degree(to_cpp(p));
    *out = {loc.order, loc.prime_vertex, loc.max_degree, loc.published_order};
  });
}

/* -- graphs ------------------------------------------------------------- */

jaco_status jaco_graph_build(jaco_poly p, uint64_t n, jaco_graph** out) {
  JACO_REQUIRE(out != nullptr);
  return guarded([&] { *out = new jaco_graph{jaco::build(to_cpp(p), n)}; });
}

void jaco_graph_free(jaco_graph* g) { delete g; }

uint64_t jaco_graph_order(const jaco_graph* g) {
  return g == nullptr ? 0 : g->graph.order();
}

jaco_poly jaco_graph_incidence(const jaco_graph* g) {
  return g == nullptr ? jaco_poly{0, 0, 0} : to_c(g->graph.incidence());
}

jaco_status jaco_graph_vertex(const jaco_graph* g, uint64_t i,
                              jaco_vertex* out) {
  JACO_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] { *out = to_c(g->graph.vertex(i)); });
}

jaco_status jaco_graph_out_degree_root(const jaco_graph* g, uint64_t i,
                                       uint64_t* out) {
  JACO_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] { *out = g->graph.out_degree_root(i); });
}

jaco_status jaco_graph_arc_count(const jaco_graph* g, uint64_t* out) {
  JACO_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] { *out = jaco::arc_count(g->graph); });
}

jaco_status jaco_graph_arcs(const jaco_graph* g, uint64_t budget,
                            uint64_t* pairs, size_t cap_pairs, size_t* count) {
  JACO_REQUIRE(g != nullptr && count != nullptr);
  jaco_status status = JACO_OK;
  const jaco_status caught = guarded([&] {
    const auto list =
        jaco::arcs(g->graph, budget == 0 ? jaco::kDefaultArcBudget : budget);
    status = write_pairs(list, pairs, cap_pairs, count);
  });
  return caught != JACO_OK ? caught : status;
}

jaco_status jaco_graph_underlying_degrees(const jaco_graph* g, uint64_t* out,
                                          size_t cap) {
  JACO_REQUIRE(g != nullptr && out != nullptr && cap >= g->graph.order());
  return guarded([&] {
    const auto degrees = jaco::underlying_degrees(g->graph);
    std::copy(degrees.begin(), degrees.end(), out);
  });
}

jaco_status jaco_graph_v1_distance(const jaco_graph* g, uint64_t* out) {
  JACO_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] { *out = jaco::v1_distance(g->graph); });
}

jaco_status jaco_graph_hope_range(const jaco_graph* g, uint64_t* first,
                                  uint64_t* last) {
  JACO_REQUIRE(g != nullptr && first != nullptr && last != nullptr);
  return guarded([&] {
    const auto range = jaco::hope_subgraph(g->graph);
    *first = range.first;
    *last = range.last;
  });
}

jaco_status jaco_graph_components(const jaco_graph* g, uint64_t* ranges,
                                  size_t cap_pairs, size_t* count) {
  JACO_REQUIRE(g != nullptr && count != nullptr);
  jaco_status status = JACO_OK;
  const jaco_status caught = guarded([&] {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (const auto& r : jaco::component_decomposition(g->graph)) {
      pairs.emplace_back(r.first, r.last);
    }
    status = write_pairs(pairs, ranges, cap_pairs, count);
  });
  return caught != JACO_OK ? caught : status;
}

jaco_status jaco_graph_invariants(const jaco_graph* g, jaco_invariants** out) {
  JACO_REQUIRE(g != nullptr && out != nullptr);
  return guarded(
      [&] { *out = new jaco_invariants{jaco::invariant_report(g->graph)}; });
}

void jaco_invariants_free(jaco_invariants* inv) { delete inv; }

uint64_t jaco_invariants_max_degree(const jaco_invariants* inv) {
  return inv == nullptr ? 0 : inv->report.max_degree;
}

uint64_t jaco_invariants_min_degree(const jaco_invariants* inv) {
  return inv == nullptr ? 0 : inv->report.min_degree;
}

uint64_t jaco_invariants_prime_jaconian(const jaco_invariants* inv) {
  return inv == nullptr ? 0 : inv->report.prime_jaconian;
}

size_t jaco_invariants_jaconian_count(const jaco_invariants* inv) {
  return inv == nullptr ? 0 : inv->report.jaconian_set.size();
}

uint64_t jaco_invariants_jaconian_at(const jaco_invariants* inv, size_t k) {
  if (inv == nullptr || k >= inv->report.jaconian_set.size()) return 0;
  return inv->report.jaconian_set[k];
}

void jaco_invariants_hope_range(const jaco_invariants* inv, uint64_t* first,
                                uint64_t* last) {
  if (inv == nullptr || first == nullptr || last == nullptr) return;
  *first = inv->report.hope_range.first;
  *last = inv->report.hope_range.last;
}

jaco_status jaco_invariants_v1_distance(const jaco_invariants* inv,
                                        uint64_t* out) {
  JACO_REQUIRE(inv != nullptr && out != nullptr);
  if (!inv->report.v1_distance) {
    return fail(JACO_ERR_UNREACHABLE, "v_n is not reachable from v_1");
  }
  *out = *inv->report.v1_distance;
  return JACO_OK;
}

/* -- root stream -------------------------------------------------------- */

jaco_status jaco_stream_open(jaco_poly p, jaco_stream** out) {
  JACO_REQUIRE(out != nullptr);
  return guarded([&] { *out = new jaco_stream{jaco::RootStream(to_cpp(p))}; });
}

jaco_status jaco_stream_next(jaco_stream* s, jaco_vertex* out) {
  JACO_REQUIRE(s != nullptr && out != nullptr);
  return guarded([&] { *out = to_c(s->stream.next()); });
}

void jaco_stream_free(jaco_stream* s) { delete s; }

/* -- simple graphs and colourings --------------------------------------- */

jaco_status jaco_simple_graph_create(uint64_t order, jaco_simple_graph** out) {
  JACO_REQUIRE(out != nullptr);
  return guarded(
      [&] { *out = new jaco_simple_graph{jaco::SimpleGraph(order)}; });
}

jaco_status jaco_simple_graph_complete(uint64_t order,
                                       jaco_simple_graph** out) {
  JACO_REQUIRE(out != nullptr);
  return guarded([&] {
    *out = new jaco_simple_graph{jaco::SimpleGraph::complete(order)};
  });
}

jaco_status jaco_simple_graph_underlying(const jaco_graph* g,
                                         uint64_t arc_budget,
                                         jaco_simple_graph** out) {
  JACO_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] {
    *out = new jaco_simple_graph{jaco::SimpleGraph::underlying(
        g->graph, arc_budget == 0 ? jaco::kDefaultArcBudget : arc_budget)};
  });
}

jaco_status jaco_simple_graph_braided(const uint64_t* orders, size_t blocks,
                                      const uint64_t* overlaps,
                                      jaco_simple_graph** out) {
  JACO_REQUIRE(orders != nullptr && blocks > 0 && out != nullptr);
  JACO_REQUIRE(overlaps != nullptr || blocks == 1);
  return guarded([&] {
    jaco::BraidedString s;
    s.orders.assign(orders, orders + blocks);
    if (blocks > 1) s.overlaps.assign(overlaps, overlaps + blocks - 1);
    *out = new jaco_simple_graph{jaco::realize(s)};
  });
}

void jaco_simple_graph_free(jaco_simple_graph* g) { delete g; }

jaco_status jaco_simple_graph_add_edge(jaco_simple_graph* g, uint64_t u,
                                       uint64_t v) {
  JACO_REQUIRE(g != nullptr);
  JACO_REQUIRE(u <= UINT32_MAX && v <= UINT32_MAX);
  return guarded([&] {
    g->graph.add_edge(static_cast<jaco::SimpleGraph::Vertex>(u),
                      static_cast<jaco::SimpleGraph::Vertex>(v));
  });
}

uint64_t jaco_simple_graph_order(const jaco_simple_graph* g) {
  return g == nullptr ? 0 : g->graph.order();
}

uint64_t jaco_simple_graph_edge_count(const jaco_simple_graph* g) {
  return g == nullptr ? 0 : g->graph.edge_count();
}

jaco_status jaco_simple_graph_edges(const jaco_simple_graph* g,
                                    uint64_t* pairs, size_t cap_pairs,
                                    size_t* count) {
  JACO_REQUIRE(g != nullptr && count != nullptr);
  jaco_status status = JACO_OK;
  const jaco_status caught = guarded(
      [&] { status = write_pairs(g->graph.edges(), pairs, cap_pairs, count); });
  return caught != JACO_OK ? caught : status;
}

jaco_status jaco_chromatic_number(const jaco_simple_graph* g,
                                  uint64_t node_budget, uint32_t* out) {
  JACO_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] {
    *out = jaco::chromatic_number(g->graph, search_options(node_budget));
  });
}

jaco_status jaco_min_sum_colouring(const jaco_simple_graph* g,
                                   uint64_t node_budget, jaco_colouring** out) {
  JACO_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] {
    *out = new jaco_colouring{
        jaco::min_sum_colouring(g->graph, search_options(node_budget))};
  });
}

jaco_status jaco_greedy_min_sum(const jaco_simple_graph* g,
                                uint64_t node_budget, jaco_colouring** out) {
  JACO_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] {
    *out = new jaco_colouring{
        jaco::greedy_min_sum(g->graph, search_options(node_budget))};
  });
}

jaco_status jaco_colouring_from_assignment(const jaco_simple_graph* g,
                                           const uint32_t* colours, size_t n,
                                           jaco_colouring** out) {
  JACO_REQUIRE(g != nullptr && colours != nullptr && out != nullptr);
  return guarded([&] {
    *out = new jaco_colouring{jaco::ProperColouring::from_assignment(
        g->graph, std::vector<std::uint32_t>(colours, colours + n))};
  });
}

jaco_status jaco_colouring_reverse(const jaco_colouring* s,
                                   jaco_colouring** out) {
  JACO_REQUIRE(s != nullptr && out != nullptr);
  return guarded(
      [&] { *out = new jaco_colouring{jaco::reverse_colouring(s->colouring)}; });
}

void jaco_colouring_free(jaco_colouring* s) { delete s; }

uint32_t jaco_colouring_k(const jaco_colouring* s) {
  return s == nullptr ? 0 : s->colouring.k();
}

uint64_t jaco_colouring_order(const jaco_colouring* s) {
  return s == nullptr ? 0 : s->colouring.order();
}

uint32_t jaco_colouring_colour_of(const jaco_colouring* s, uint64_t v) {
  if (s == nullptr || v == 0 || v > s->colouring.order()) return 0;
  return s->colouring.assignment()[v - 1];
}

uint64_t jaco_colouring_weight(const jaco_colouring* s, uint32_t c) {
  if (s == nullptr || c == 0 || c > s->colouring.k()) return 0;
  return s->colouring.weights()[c - 1];
}

uint64_t jaco_colouring_sum(const jaco_colouring* s) {
  return s == nullptr ? 0 : jaco::colour_sum(s->colouring);
}

void jaco_colouring_stats(const jaco_colouring* s, jaco_rational* mean,
                          jaco_rational* variance) {
  if (s == nullptr || s->colouring.k() == 0) return;
  const auto stats = jaco::chromatic_stats(s->colouring);
  if (mean != nullptr) *mean = to_c(stats.mean);
  if (variance != nullptr) *variance = to_c(stats.variance);
}

jaco_status jaco_chroma_report_compute(const jaco_simple_graph* g,
                                       uint64_t node_budget,
                                       jaco_chroma_report* out,
                                       jaco_colouring** min_colouring) {
  JACO_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] {
    auto r = jaco::chroma_report(g->graph, search_options(node_budget));
    jaco_colouring* colouring =
        min_colouring != nullptr ? new jaco_colouring{r.min_colouring} : nullptr;
    *out = {r.order,           r.chi,
            r.chi_minus,       r.chi_plus,
            to_c(r.mu_minus),  to_c(r.mu_plus),
            to_c(r.var_minus), to_c(r.var_plus)};
    if (min_colouring != nullptr) *min_colouring = colouring;
  });
}

/* -- braided ------------------------------------------------------------ */

jaco_status jaco_braided_mu_min(uint64_t n, uint64_t m, uint64_t l,
                                jaco_rational* out) {
  JACO_REQUIRE(out != nullptr);
  return guarded([&] { *out = to_c(jaco::mu_min_two_block(n, m, l)); });
}

jaco_status jaco_braided_mu_max(uint64_t n, uint64_t m, uint64_t l,
                                jaco_rational* out) {
  JACO_REQUIRE(out != nullptr);
  return guarded([&] { *out = to_c(jaco::mu_max_two_block(n, m, l)); });
}

jaco_status jaco_braided_mu_max_published(uint64_t n, uint64_t m, uint64_t l,
                                          jaco_rational* out) {
  JACO_REQUIRE(out != nullptr);
  return guarded(
      [&] { *out = to_c(jaco::mu_max_two_block_as_published(n, m, l)); });
}

jaco_status jaco_complete_graph_stats(uint64_t n, uint64_t* sum,
                                      jaco_rational* mean,
                                      jaco_rational* variance) {
  JACO_REQUIRE(sum != nullptr && mean != nullptr && variance != nullptr);
  return guarded([&] {
    const auto stats = jaco::complete_graph_stats(n);
    *sum = stats.sum;
    *mean = to_c(stats.mean);
    *variance = to_c(stats.variance);
  });
}

/* -- published values --------------------------------------------------- */

size_t jaco_published_table1_rows(void) {
  return jaco::published::table1().size();
}

jaco_status jaco_published_table1_get(uint64_t i,
                                      jaco_published_table1_row* out) {
  JACO_REQUIRE(out != nullptr);
  const auto rows = jaco::published::table1();
  if (i == 0 || i > rows.size()) {
    return fail(JACO_ERR_INDEX_OUT_OF_RANGE, "no such published row");
  }
  const auto& r = rows[i - 1];
  *out = {};
  out->i = r.i;
  out->in_degree = r.in_degree;
  out->out_degree_root = r.out_degree_root;
  out->jaconian_count = r.jaconian_set.size();
  std::copy(r.jaconian_set.begin(), r.jaconian_set.end(), out->jaconian);
  out->max_degree = r.max_degree;
  out->dist_v1 = r.dist_v1;
  return JACO_OK;
}

size_t jaco_published_table3_rows(void) {
  return jaco::published::table3().size();
}

jaco_status jaco_published_table3_get(uint64_t i,
                                      jaco_published_table3_row* out) {
  JACO_REQUIRE(out != nullptr);
  const auto rows = jaco::published::table3();
  if (i == 0 || i > rows.size()) {
    return fail(JACO_ERR_INDEX_OUT_OF_RANGE, "no such published row");
  }
  const auto& r = rows[i - 1];
  auto raw = [](const jaco::published::Fraction& f) {
    return jaco_rational{f.num, f.den};
  };
  *out = {r.i,
          r.chi_minus,
          r.chi_plus,
          raw(r.mu_minus),
          raw(r.mu_plus),
          raw(r.var_minus),
          raw(r.var_plus)};
  return JACO_OK;
}

jaco_rational jaco_published_braided_var_plus(void) {
  return {jaco::published::kBraidedExampleVarPlus.num,
          jaco::published::kBraidedExampleVarPlus.den};
}

/* -- verification ------------------------------------------------------- */

void jaco_verify_options_init(jaco_verify_options* opts) {
  if (opts == nullptr) return;
  const jaco::VerifyConfig defaults;
  *opts = {};
  opts->max_order = defaults.max_order;
  opts->colouring_max_order = defaults.colouring_max_order;
}

jaco_status jaco_verify_run(const jaco_verify_options* opts,
                            jaco_verify_report** out) {
  JACO_REQUIRE(opts != nullptr && out != nullptr);
  JACO_REQUIRE(opts->polys != nullptr || opts->poly_count == 0);
  JACO_REQUIRE(opts->properties != nullptr || opts->property_count == 0);
  return guarded([&] {
    jaco::VerifyConfig config;
    for (size_t k = 0; k < opts->poly_count; ++k) {
      config.polynomials.push_back(to_cpp(opts->polys[k]));
    }
    config.max_order = opts->max_order;
    config.colouring_max_order = opts->colouring_max_order;
    for (size_t k = 0; k < opts->property_count; ++k) {
      config.properties.emplace_back(opts->properties[k]);
    }
    *out = new jaco_verify_report{jaco::run_verification(config)};
  });
}

void jaco_verify_report_free(jaco_verify_report* r) { delete r; }

int jaco_verify_report_passed(const jaco_verify_report* r) {
  return r != nullptr && r->report.passed() ? 1 : 0;
}

size_t jaco_verify_report_count(const jaco_verify_report* r) {
  return r == nullptr ? 0 : r->report.results.size();
}

jaco_status jaco_verify_report_get(const jaco_verify_report* r, size_t k,
                                   jaco_property_result* out) {
  JACO_REQUIRE(r != nullptr && out != nullptr);
  if (k >= r->report.results.size()) {
    return fail(JACO_ERR_INDEX_OUT_OF_RANGE, "no such property result");
  }
  const auto& res = r->report.results[k];
  *out = {res.info.id.c_str(),
          res.info.alias.c_str(),
          res.info.description.c_str(),
          res.info.informational ? 1 : 0,
          res.checked,
          res.failures,
          res.first_failure.c_str()};
  return JACO_OK;
}

}  // extern "C"
