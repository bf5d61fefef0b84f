#include "jaco/invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "jaco/error.hpp"

namespace jaco {

std::vector<std::uint64_t> underlying_degrees(const JacoGraph& g) {
  std::vector<std::uint64_t> out;
  out.reserve(g.order());
  for (const auto& r : g.records()) {
    out.push_back(r.in_degree + g.out_degree(r.index));
  }
  return out;
}

IndexRange hope_subgraph(const JacoGraph& g) {
  const auto degrees = underlying_degrees(g);
  const auto max_it = std::max_element(degrees.begin(), degrees.end());
  const auto prime = static_cast<std::uint64_t>(max_it - degrees.begin()) + 1;
  const IndexRange range{prime + 1, g.order()};
  // Reaches need not be monotone in general, so check every vertex.
  for (std::uint64_t i = range.first; i < range.last; ++i) {
    if (g.vertex(i).reach < g.order()) {
      throw Error(ErrorCode::HopeNotComplete,
                  "v" + std::to_string(i) + " does not reach v" +
                      std::to_string(g.order()));
    }
  }
  return range;
}

std::uint64_t v1_distance(const JacoGraph& g) {
  const std::uint64_t n = g.order();
  std::uint64_t hops = 0;
  // Vertices in (done, frontier] are reachable in exactly `hops` arcs.
  std::uint64_t done = 0;
  std::uint64_t frontier = 1;
  while (frontier < n) {
    std::uint64_t next = frontier;
    for (std::uint64_t i = done + 1; i <= frontier; ++i) {
      next = std::max(next, g.truncated_reach(i));
    }
    if (next == frontier) {
      throw Error(ErrorCode::Unreachable,
                  "v" + std::to_string(n) + " is not reachable from v1");
    }
    done = frontier;
    frontier = next;
    ++hops;
  }
  return hops;
}

InvariantReport invariant_report(const JacoGraph& g) {
  InvariantReport report;
  const auto degrees = underlying_degrees(g);
  report.max_degree = *std::max_element(degrees.begin(), degrees.end());
  report.min_degree = *std::min_element(degrees.begin(), degrees.end());
  for (std::uint64_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] == report.max_degree) report.jaconian_set.push_back(i + 1);
  }
  report.prime_jaconian = report.jaconian_set.front();
  report.hope_range = {report.prime_jaconian + 1, g.order()};
  try {
    report.v1_distance = v1_distance(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Unreachable) throw;
  }
  return report;
}

std::uint64_t completeness_threshold(const IncidencePolynomial& p) {
  return checked::add(evaluate(p, 1), 1);
}

MaxDegreeLocation smallest_with_max_degree(const IncidencePolynomial& p) {
  if (classify(p) != FamilyClass::Quadratic) {
    throw Error(ErrorCode::InvalidArgument,
                "the maximum-degree locator requires a >= 1");
  }
  MaxDegreeLocation loc;
  const std::uint64_t f1 = evaluate(p, 1);
  loc.max_degree = evaluate(p, f1);
  loc.prime_vertex = f1;
  loc.order = checked::add(loc.max_degree, 1);
  loc.published_order = loc.max_degree - f1 + 1;

  const auto at_k = invariant_report(build(p, loc.order));
  if (at_k.max_degree != loc.max_degree || at_k.prime_jaconian != f1) {
    throw std::logic_error("maximum-degree locator disagrees with J_k");
  }
  if (loc.order > 1 &&
      invariant_report(build(p, loc.order - 1)).max_degree >= loc.max_degree) {
    throw std::logic_error("maximum-degree locator is not minimal");
  }
  return loc;
}

std::vector<IndexRange> component_decomposition(const JacoGraph& g) {
  std::vector<IndexRange> out;
  std::uint64_t start = 1;
  std::uint64_t furthest = 0;
  for (const auto& r : g.records()) {
    furthest = std::max(furthest, g.truncated_reach(r.index));
    if (furthest == r.index) {
      out.push_back({start, r.index});
      start = r.index + 1;
    }
  }
  return out;
}

}  // namespace jaco
