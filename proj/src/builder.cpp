#include "jaco/builder.hpp"

#include <algorithm>
#include <string>

#include "jaco/error.hpp"

namespace jaco {

namespace {

std::uint64_t reach_of(const IncidencePolynomial& p, std::uint64_t i,
                       std::uint64_t in_degree) {
  const std::uint64_t budget = checked::add(i, evaluate(p, i));
  // in_degree <= f(i) holds for every polynomial incidence; clamp anyway so
  // the out-degree can never go negative.
  return std::max(i, budget - std::min(budget, in_degree));
}

}  // namespace

JacoGraph::JacoGraph(IncidencePolynomial incidence,
                     std::vector<VertexRecord> records)
    : incidence_(incidence), records_(std::move(records)) {}

const VertexRecord& JacoGraph::vertex(std::uint64_t i) const {
  if (i == 0 || i > records_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex index " + std::to_string(i) + " outside 1.." +
                    std::to_string(records_.size()));
  }
  return records_[i - 1];
}

std::uint64_t JacoGraph::out_degree_root(std::uint64_t i) const {
  return vertex(i).reach - i;
}

std::uint64_t JacoGraph::truncated_reach(std::uint64_t i) const {
  return std::min(vertex(i).reach, order());
}

std::uint64_t JacoGraph::out_degree(std::uint64_t i) const {
  return truncated_reach(i) - i;
}

bool JacoGraph::has_arc(std::uint64_t i, std::uint64_t j) const {
  return i < j && j <= order() && j <= vertex(i).reach;
}

JacoGraph build(const IncidencePolynomial& p, std::uint64_t n) {
  if (n == 0) {
    throw Error(ErrorCode::InvalidOrder, "graph order must be >= 1");
  }
  // f is non-decreasing, so this bounds every reach; fail before allocating.
  checked::add(n, evaluate(p, n));
  std::vector<VertexRecord> records;
  records.reserve(n);
  // delta[k] is the change in the number of open arc intervals at index k.
  std::vector<std::int64_t> delta(n + 2, 0);
  std::int64_t open = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    open += delta[i];
    const auto in_degree = static_cast<std::uint64_t>(open);
    const std::uint64_t reach = reach_of(p, i, in_degree);
    const std::uint64_t last = std::min(reach, n);
    if (last > i) {
      ++delta[i + 1];
      --delta[last + 1];
    }
    records.push_back({i, in_degree, reach});
  }
  return JacoGraph(p, std::move(records));
}

std::uint64_t arc_count(const JacoGraph& g) {
  std::uint64_t total = 0;
  for (const auto& r : g.records()) {
    total = checked::add(total, std::min(r.reach, g.order()) - r.index);
  }
  return total;
}

std::vector<Arc> arcs(const JacoGraph& g, std::uint64_t budget) {
  const std::uint64_t total = arc_count(g);
  if (total > budget) {
    throw Error(ErrorCode::ArcBudgetExceeded,
                std::to_string(total) + " arcs exceed the budget of " +
                    std::to_string(budget));
  }
  std::vector<Arc> out;
  out.reserve(total);
  for (const auto& r : g.records()) {
    const std::uint64_t last = std::min(r.reach, g.order());
    for (std::uint64_t j = r.index + 1; j <= last; ++j) {
      out.emplace_back(r.index, j);
    }
  }
  return out;
}

RootStream::RootStream(IncidencePolynomial p) : incidence_(p) {}

VertexRecord RootStream::next() {
  if (failed_) {
    throw Error(ErrorCode::Overflow, "root stream terminated by overflow");
  }
  const std::uint64_t i = next_index_;
  while (!open_reaches_.empty() && open_reaches_.top() < i) {
    open_reaches_.pop();
  }
  const std::uint64_t in_degree = open_reaches_.size();
  std::uint64_t reach = 0;
  try {
    reach = reach_of(incidence_, i, in_degree);
    checked::add(i, 1);
  } catch (const Error&) {
    failed_ = true;
    throw;
  }
  if (reach > i) open_reaches_.push(reach);
  ++next_index_;
  return {i, in_degree, reach};
}

}  // namespace jaco
