#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "jaco/incidence.hpp"

namespace jaco {

/// Per-vertex data of a Jaco graph. `reach` is the largest index the vertex
/// sends an arc to in the root graph: i + f(i) - d^-(v_i).
struct VertexRecord {
  std::uint64_t index = 0;
  std::uint64_t in_degree = 0;
  std::uint64_t reach = 0;

  friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

using Arc = std::pair<std::uint64_t, std::uint64_t>;

inline constexpr std::uint64_t kDefaultArcBudget = 10'000'000;

/// Finite Jaco graph J_n(f) in interval-compressed form: the arc (i, j)
/// exists iff i < j <= min(reach(i), n). Arcs are never stored.
class JacoGraph {
 public:
  JacoGraph(IncidencePolynomial incidence, std::vector<VertexRecord> records);

  const IncidencePolynomial& incidence() const noexcept { return incidence_; }
  std::uint64_t order() const noexcept { return records_.size(); }
  std::span<const VertexRecord> records() const noexcept { return records_; }

  /// 1-based access; throws Error(IndexOutOfRange).
  const VertexRecord& vertex(std::uint64_t i) const;

  /// Out-degree of v_i in the root graph, f(i) - d^-(v_i).
  std::uint64_t out_degree_root(std::uint64_t i) const;

  /// Out-degree of v_i in J_n, min(reach(i), n) - i.
  std::uint64_t out_degree(std::uint64_t i) const;

  /// Last index v_i has an arc to inside J_n (i itself if none).
  std::uint64_t truncated_reach(std::uint64_t i) const;

  bool has_arc(std::uint64_t i, std::uint64_t j) const;

 private:
  IncidencePolynomial incidence_;
  std::vector<VertexRecord> records_;
};

/// Ascending-index construction: d^-(v_i) is fixed by lower-indexed
/// vertices before v_i's out-arcs are laid down. O(n) time and memory.
JacoGraph build(const IncidencePolynomial& p, std::uint64_t n);

/// Total number of arcs of J_n.
std::uint64_t arc_count(const JacoGraph& g);

/// Materialized arc list in lexicographic order; throws
/// Error(ArcBudgetExceeded) when the graph has more than `budget` arcs.
std::vector<Arc> arcs(const JacoGraph& g,
                      std::uint64_t budget = kDefaultArcBudget);

/// Unbounded stream of vertex records of the root graph J_inf(f).
/// Memory is proportional to the number of arcs crossing the current index.
/// On overflow, next() throws Error(Overflow) and the stream stays failed.
class RootStream {
 public:
  explicit RootStream(IncidencePolynomial p);

  VertexRecord next();

  bool failed() const noexcept { return failed_; }
  std::uint64_t position() const noexcept { return next_index_ - 1; }

 private:
  IncidencePolynomial incidence_;
  std::uint64_t next_index_ = 1;
  bool failed_ = false;
  // Reaches of earlier vertices that still send arcs at or beyond
  // next_index_; size equals the next in-degree.
  std::priority_queue<std::uint64_t, std::vector<std::uint64_t>,
                      std::greater<>>
      open_reaches_;
};

}  // namespace jaco
