#include <doctest.h>

#include <cstdint>
#include <vector>

#include "jaco/builder.hpp"
#include "jaco/chroma.hpp"
#include "jaco/error.hpp"
#include "jaco/oracle.hpp"

using jaco::ProperColouring;
using jaco::Rational;
using jaco::SimpleGraph;
using U64s = std::vector<std::uint64_t>;

namespace {

SimpleGraph path(std::size_t n) {
  SimpleGraph g(n);
  for (SimpleGraph::Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph cycle(std::size_t n) {
  SimpleGraph g = path(n);
  g.add_edge(1, static_cast<SimpleGraph::Vertex>(n));
  return g;
}

U64s weights(const ProperColouring& s) { return {s.weights().begin(), s.weights().end()}; }

}  // namespace

TEST_CASE("simple graph basics") {
  SimpleGraph g(4);
  g.add_edge(1, 2);
  g.add_edge(2, 1);
  g.add_edge(3, 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(1, 3));
  CHECK_THROWS_AS(g.add_edge(2, 2), jaco::Error);
  CHECK_THROWS_AS(g.add_edge(0, 2), jaco::Error);
  CHECK_THROWS_AS(g.add_edge(1, 5), jaco::Error);
  CHECK(SimpleGraph::complete(5).edge_count() == 10);
  CHECK(SimpleGraph::edgeless(3).edge_count() == 0);
}

TEST_CASE("from_assignment validates") {
  const auto g = path(3);
  const auto s = ProperColouring::from_assignment(g, {1, 2, 1});
  CHECK(s.k() == 2);
  CHECK(weights(s) == U64s{2, 1});
  CHECK(s.colour_class(1) == std::vector<SimpleGraph::Vertex>{1, 3});
  CHECK_THROWS_AS(ProperColouring::from_assignment(g, {1, 1, 2}), jaco::Error);
  CHECK_THROWS_AS(ProperColouring::from_assignment(g, {1, 3, 1}), jaco::Error);
  CHECK_THROWS_AS(ProperColouring::from_assignment(g, {1, 2}), jaco::Error);
  CHECK_THROWS_AS(ProperColouring::from_assignment(g, {0, 2, 1}), jaco::Error);
}

TEST_CASE("chromatic numbers") {
  CHECK(jaco::chromatic_number(SimpleGraph::complete(6)) == 6);
  CHECK(jaco::chromatic_number(SimpleGraph::edgeless(4)) == 1);
  CHECK(jaco::chromatic_number(path(5)) == 2);
  CHECK(jaco::chromatic_number(cycle(5)) == 3);
  CHECK(jaco::chromatic_number(cycle(6)) == 2);
  CHECK(jaco::chromatic_number(SimpleGraph::underlying(jaco::build({1, 0, 0}, 6))) == 4);
}

TEST_CASE("minimum-sum colourings") {
  const auto p3 = jaco::min_sum_colouring(path(3));
  CHECK(jaco::colour_sum(p3) == 4);
  CHECK(weights(p3) == U64s{2, 1});

  const auto j6 = jaco::min_sum_colouring(SimpleGraph::underlying(jaco::build({1, 0, 0}, 6)));
  CHECK(weights(j6) == U64s{2, 2, 1, 1});
  CHECK(jaco::colour_sum(j6) == 13);

  // Exactly chi colours: the star K_{1,3} with 2 colours has sum 1*3 + 2*1.
  SimpleGraph star(4);
  for (SimpleGraph::Vertex v = 2; v <= 4; ++v) star.add_edge(1, v);
  CHECK(jaco::colour_sum(jaco::min_sum_colouring(star)) == 5);
}

TEST_CASE("reverse colouring maps colour c to k+1-c") {
  const auto g = SimpleGraph::underlying(jaco::build({1, 0, 0}, 9));
  const auto s = jaco::min_sum_colouring(g);
  const auto r = jaco::reverse_colouring(s);
  CHECK(r.k() == s.k());
  for (SimpleGraph::Vertex v = 1; v <= 9; ++v) {
    CHECK(r.colour_of(v) == s.k() + 1 - s.colour_of(v));
  }
  CHECK(jaco::colour_sum(s) + jaco::colour_sum(r) == (s.k() + 1) * 9);
  CHECK(jaco::reverse_colouring(r) == s);
}

TEST_CASE("chromatic statistics") {
  const auto j6 = jaco::chromatic_stats(U64s{2, 2, 1, 1});
  CHECK(j6.mean == Rational(13, 6));
  CHECK(j6.variance == Rational(41, 36));
  const auto k5 = jaco::chromatic_stats(U64s{1, 1, 1, 1, 1});
  CHECK(k5.mean == Rational(3));
  CHECK(k5.variance == Rational(2));
}

TEST_CASE("chroma report of J9(x^2)") {
  const auto r = jaco::chroma_report(SimpleGraph::underlying(jaco::build({1, 0, 0}, 9)));
  CHECK(r.chi == 7);
  CHECK(r.chi_minus == 31);
  CHECK(r.chi_plus == 41);
  CHECK(r.mu_minus == Rational(31, 9));
  CHECK(r.mu_plus == Rational(41, 9));
  CHECK(r.var_minus == Rational(344, 81));
  CHECK(r.var_plus == Rational(344, 81));
  CHECK(r.weights_min == U64s{2, 2, 1, 1, 1, 1, 1});
  CHECK(r.weights_max == U64s{1, 1, 1, 1, 1, 2, 2});
}

TEST_CASE("exact solver agrees with the exhaustive oracle on small graphs") {
  std::vector<SimpleGraph> graphs{path(7), cycle(7), cycle(8), SimpleGraph::complete(4),
                                  SimpleGraph::edgeless(5)};
  // Petersen-like dense graph without interval structure.
  SimpleGraph w(8);
  const int pairs[][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 7},
                          {3, 8}, {6, 8}, {7, 6}, {4, 7}, {5, 8}};
  for (const auto& e : pairs) {
    w.add_edge(static_cast<SimpleGraph::Vertex>(e[0]), static_cast<SimpleGraph::Vertex>(e[1]));
  }
  graphs.push_back(w);
  for (std::uint64_t n = 1; n <= 12; ++n) {
    graphs.push_back(SimpleGraph::underlying(jaco::build({1, 0, 1}, n)));
  }
  for (const auto& g : graphs) {
    const auto s = jaco::min_sum_colouring(g);
    const auto o = jaco::oracle::exhaustive_min_sum(g);
    CHECK(s.k() == o.chi);
    CHECK(jaco::colour_sum(s) == o.sum);
    CHECK(weights(s) == o.weights);
    CHECK(jaco::colour_sum(jaco::reverse_colouring(s)) == o.max_sum);
  }
}

TEST_CASE("greedy colouring of J6(x^2)") {
  const auto g = SimpleGraph::underlying(jaco::build({1, 0, 0}, 6));
  const auto s = jaco::greedy_min_sum(g);
  CHECK(s.colour_class(1) == std::vector<SimpleGraph::Vertex>{1, 3});
  CHECK(s.colour_class(2) == std::vector<SimpleGraph::Vertex>{2, 6});
  CHECK(s.colour_class(3) == std::vector<SimpleGraph::Vertex>{4});
  CHECK(s.colour_class(4) == std::vector<SimpleGraph::Vertex>{5});
}

TEST_CASE("search budget is enforced") {
  SimpleGraph big(70);
  for (SimpleGraph::Vertex v = 1; v < 70; v += 2) big.add_edge(v, v + 1);
  big.add_edge(1, 3);
  big.add_edge(3, 70);
  big.add_edge(70, 1);
  try {
    jaco::min_sum_colouring(big);
    FAIL("oversized search accepted");
  } catch (const jaco::Error& e) {
    CHECK(e.code() == jaco::ErrorCode::SearchBudgetExceeded);
  }
  try {
    jaco::min_sum_colouring(SimpleGraph::underlying(jaco::build({1, 0, 0}, 60)),
                            jaco::SearchOptions{100});
    FAIL("tiny budget accepted");
  } catch (const jaco::Error& e) {
    CHECK(e.code() == jaco::ErrorCode::SearchBudgetExceeded);
  }
}
