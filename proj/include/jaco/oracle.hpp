#pragma once

// Brute-force reference computations. These share no code with the fast
// paths and are only used by tests and `verify`.

#include <cstdint>
#include <vector>

#include "jaco/builder.hpp"
#include "jaco/chroma.hpp"

namespace jaco::oracle {

inline constexpr std::uint64_t kMaxDefinitionOrder = 10'000;
inline constexpr std::size_t kMaxExhaustiveOrder = 12;

/// Arc set of J_n(f) from the arc predicate alone: in-degrees by forward
/// simulation over an adjacency matrix, then every pair re-checked against
/// [a i^2 + (b+1) i + c] - d^-(v_i) >= j. Throws Error(OrderTooLarge).
std::vector<Arc> arcs_by_definition(const IncidencePolynomial& p,
                                    std::uint64_t n);

struct ExhaustiveResult {
  std::uint32_t chi = 0;
  std::uint64_t sum = 0;
  std::vector<std::uint64_t> weights;  // lexicographically greatest optimum
  std::uint64_t max_sum = 0;           // best sum with the reverse ranking
};

/// Enumerates every partition of V(G) into independent sets, finds chi as
/// the smallest feasible class count and the best colour sum over all
/// chi-partitions, in both directions. Throws Error(OrderTooLarge) above 12 vertices.
ExhaustiveResult exhaustive_min_sum(const SimpleGraph& g);

/// Builds J_1, J_2, ... from arcs_by_definition until the maximum
/// underlying degree equals `target`. Throws Error(BudgetExceeded) past
/// `max_order`.
std::uint64_t sweep_smallest_max_degree(const IncidencePolynomial& p,
                                        std::uint64_t target,
                                        std::uint64_t max_order = 2'000);

/// Breadth-first search from v1 over an explicit undirected edge list;
/// returns the hop count to v_n or UINT64_MAX when unreachable.
std::uint64_t bfs_distance(std::uint64_t n, const std::vector<Arc>& edges,
                           bool directed);

}  // namespace jaco::oracle
