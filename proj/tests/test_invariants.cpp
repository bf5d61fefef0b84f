#include <doctest.h>

#include <cstdint>
#include <vector>

#include "jaco/builder.hpp"
#include "jaco/error.hpp"
#include "jaco/invariants.hpp"
#include "jaco/oracle.hpp"

using jaco::IndexRange;
using U64s = std::vector<std::uint64_t>;

TEST_CASE("underlying degrees of J6(x^2)") {
  CHECK(jaco::underlying_degrees(jaco::build({1, 0, 0}, 6)) == U64s{1, 4, 4, 4, 4, 3});
}

TEST_CASE("Jaconian sets from the x^2 table") {
  const auto r1 = jaco::invariant_report(jaco::build({1, 0, 0}, 1));
  CHECK(r1.jaconian_set == U64s{1});
  CHECK(r1.max_degree == 0);
  CHECK(r1.v1_distance == 0);
  CHECK(r1.hope_range.empty());

  const auto r7 = jaco::invariant_report(jaco::build({1, 0, 0}, 7));
  CHECK(r7.jaconian_set == U64s{3, 4, 5});
  CHECK(r7.max_degree == 5);
  CHECK(r7.prime_jaconian == 3);

  const auto r28 = jaco::invariant_report(jaco::build({1, 0, 0}, 28));
  CHECK(r28.jaconian_set == U64s{5, 6, 7, 8, 9, 10, 11});
  CHECK(r28.max_degree == 25);
}

TEST_CASE("Hope subgraph") {
  CHECK(jaco::hope_subgraph(jaco::build({1, 0, 0}, 6)) == IndexRange{3, 6});
  CHECK(jaco::hope_subgraph(jaco::build({1, 0, 0}, 12)) == IndexRange{5, 12});
  CHECK(jaco::hope_subgraph(jaco::build({1, 0, 0}, 1)).empty());
  try {
    jaco::hope_subgraph(jaco::build({0, 0, 0}, 3));
    FAIL("edgeless graph has a complete Hope subgraph");
  } catch (const jaco::Error& e) {
    CHECK(e.code() == jaco::ErrorCode::HopeNotComplete);
  }
  // The report never asserts; it just records the range.
  CHECK(jaco::invariant_report(jaco::build({0, 0, 0}, 3)).hope_range == IndexRange{2, 3});
}

TEST_CASE("v1 distance is the shortest directed path") {
  CHECK(jaco::v1_distance(jaco::build({1, 0, 0}, 1)) == 0);
  CHECK(jaco::v1_distance(jaco::build({1, 0, 0}, 2)) == 1);
  CHECK(jaco::v1_distance(jaco::build({1, 0, 0}, 6)) == 3);
  CHECK(jaco::v1_distance(jaco::build({1, 0, 0}, 35)) == 4);
  try {
    jaco::v1_distance(jaco::build({0, 0, 3}, 8));
    FAIL("v8 reachable across components");
  } catch (const jaco::Error& e) {
    CHECK(e.code() == jaco::ErrorCode::Unreachable);
  }
  CHECK_FALSE(jaco::invariant_report(jaco::build({0, 0, 3}, 8)).v1_distance.has_value());

  for (const jaco::IncidencePolynomial p : {jaco::IncidencePolynomial{1, 0, 0},
                                            {2, 1, 0}, {0, 1, 0}, {1, 1, 1}}) {
    for (std::uint64_t n = 1; n <= 80; ++n) {
      const auto edges = jaco::oracle::arcs_by_definition(p, n);
      const auto d = jaco::v1_distance(jaco::build(p, n));
      CHECK(d == jaco::oracle::bfs_distance(n, edges, true));
      CHECK(d == jaco::oracle::bfs_distance(n, edges, false));
    }
  }
}

TEST_CASE("completeness threshold") {
  CHECK(jaco::completeness_threshold({1, 0, 0}) == 2);
  CHECK(jaco::completeness_threshold({1, 0, 1}) == 3);
  for (std::uint64_t n = 1; n <= 4; ++n) {
    const auto r = jaco::invariant_report(jaco::build({1, 1, 1}, n));
    CHECK(r.max_degree == n - 1);
    CHECK(r.jaconian_set.size() == n);
  }
  CHECK(jaco::invariant_report(jaco::build({1, 1, 1}, 5)).min_degree < 4);
}

TEST_CASE("max-degree locator") {
  const auto a = jaco::smallest_with_max_degree({1, 0, 0});
  CHECK(a.order == 2);
  CHECK(a.prime_vertex == 1);
  CHECK(a.max_degree == 1);

  const auto b = jaco::smallest_with_max_degree({1, 0, 1});
  CHECK(b.order == 6);
  CHECK(b.prime_vertex == 2);
  CHECK(b.max_degree == 5);
  CHECK(b.published_order == 4);

  const auto c = jaco::smallest_with_max_degree({1, 1, 0});
  CHECK(c.order == 7);
  CHECK(c.prime_vertex == 2);
  CHECK(c.max_degree == 6);

  CHECK_THROWS_AS(jaco::smallest_with_max_degree({0, 1, 0}), jaco::Error);
  for (std::uint64_t a2 = 1; a2 <= 3; ++a2) {
    for (std::uint64_t b2 = 0; b2 <= 2; ++b2) {
      for (std::uint64_t c2 = 0; c2 <= 2; ++c2) {
        const jaco::IncidencePolynomial p{a2, b2, c2};
        const auto loc = jaco::smallest_with_max_degree(p);
        CHECK(loc.order == jaco::oracle::sweep_smallest_max_degree(p, loc.max_degree));
      }
    }
  }
}

TEST_CASE("component decomposition") {
  CHECK(jaco::component_decomposition(jaco::build({0, 0, 3}, 8)) ==
        std::vector<IndexRange>{{1, 4}, {5, 8}});
  CHECK(jaco::component_decomposition(jaco::build({0, 0, 3}, 6)) ==
        std::vector<IndexRange>{{1, 4}, {5, 6}});
  CHECK(jaco::component_decomposition(jaco::build({1, 0, 0}, 35)) ==
        std::vector<IndexRange>{{1, 35}});
  CHECK(jaco::component_decomposition(jaco::build({0, 0, 0}, 4)) ==
        std::vector<IndexRange>{{1, 1}, {2, 2}, {3, 3}, {4, 4}});
}
