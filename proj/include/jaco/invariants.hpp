#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jaco/builder.hpp"

namespace jaco {

/// Inclusive index range first..last; empty when first > last.
struct IndexRange {
  std::uint64_t first = 1;
  std::uint64_t last = 0;

  bool empty() const noexcept { return first > last; }
  std::uint64_t size() const noexcept { return empty() ? 0 : last - first + 1; }

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct InvariantReport {
  std::uint64_t max_degree = 0;
  std::uint64_t min_degree = 0;
  std::vector<std::uint64_t> jaconian_set;  // ascending
  std::uint64_t prime_jaconian = 1;
  IndexRange hope_range;
  std::optional<std::uint64_t> v1_distance;  // nullopt when v_n is unreachable
};

/// Degrees in the underlying simple graph: d^-(v_i) + min(reach(i), n) - i.
std::vector<std::uint64_t> underlying_degrees(const JacoGraph& g);

/// Max/min degree, Jaconian set, prime Jaconian vertex, Hope range and
/// v1-distance in one pass.
InvariantReport invariant_report(const JacoGraph& g);

/// Vertices above the prime Jaconian vertex. Throws Error(HopeNotComplete)
/// if that range does not induce a complete subgraph.
IndexRange hope_subgraph(const JacoGraph& g);

/// Minimum number of arcs on a directed path v_1 -> v_n, found by widening
/// the reachable index window one hop at a time. Throws Error(Unreachable).
std::uint64_t v1_distance(const JacoGraph& g);

/// f(1) + 1: J_n(f) has a complete underlying graph iff n <= this.
std::uint64_t completeness_threshold(const IncidencePolynomial& p);

struct MaxDegreeLocation {
  std::uint64_t order = 0;         // smallest k with Delta(J_k) = f(f(1))
  std::uint64_t prime_vertex = 0;  // f(1)
  std::uint64_t max_degree = 0;    // f(f(1))
  // The closed form f(f(1)) - f(1) + 1 printed alongside the original
  // statement; kept so callers can show where it disagrees.
  std::uint64_t published_order = 0;
};

/// Locates the smallest J_k whose maximum degree is f(f(1)). The answer
/// k = f(f(1)) + 1 is confirmed by building J_k and J_{k-1}. Requires a >= 1.
MaxDegreeLocation smallest_with_max_degree(const IncidencePolynomial& p);

/// Connected components of the underlying graph, ascending. Every component
/// is a contiguous index block because arcs never skip over a cut.
std::vector<IndexRange> component_decomposition(const JacoGraph& g);

}  // namespace jaco
