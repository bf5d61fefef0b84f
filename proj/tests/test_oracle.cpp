#include <doctest.h>

#include <cstdint>
#include <vector>

#include "jaco/chroma.hpp"
#include "jaco/error.hpp"
#include "jaco/oracle.hpp"

using jaco::Arc;
using jaco::SimpleGraph;

TEST_CASE("definitional arcs") {
  CHECK(jaco::oracle::arcs_by_definition({1, 0, 0}, 3) == std::vector<Arc>{{1, 2}, {2, 3}});
  CHECK(jaco::oracle::arcs_by_definition({1, 0, 0}, 6).size() == 10);
  CHECK_THROWS_AS(jaco::oracle::arcs_by_definition({1, 0, 0}, 20000), jaco::Error);
}

TEST_CASE("exhaustive min-sum on tiny graphs") {
  SimpleGraph p3(3);
  p3.add_edge(1, 2);
  p3.add_edge(2, 3);
  const auto r = jaco::oracle::exhaustive_min_sum(p3);
  CHECK(r.chi == 2);
  CHECK(r.sum == 4);
  CHECK(r.weights == std::vector<std::uint64_t>{2, 1});
  CHECK(r.max_sum == 5);

  const auto k4 = jaco::oracle::exhaustive_min_sum(SimpleGraph::complete(4));
  CHECK(k4.sum == 10);
  CHECK(k4.max_sum == 10);
  CHECK_THROWS_AS(jaco::oracle::exhaustive_min_sum(SimpleGraph::edgeless(13)), jaco::Error);
}

TEST_CASE("sweep and bfs helpers") {
  CHECK(jaco::oracle::sweep_smallest_max_degree({1, 0, 1}, 5) == 6);
  CHECK_THROWS_AS(jaco::oracle::sweep_smallest_max_degree({1, 0, 0}, 1000000, 50),
                  jaco::Error);
  const std::vector<Arc> edges{{1, 2}, {2, 3}, {1, 3}};
  CHECK(jaco::oracle::bfs_distance(3, edges, true) == 1);
  CHECK(jaco::oracle::bfs_distance(4, edges, true) == UINT64_MAX);
}
