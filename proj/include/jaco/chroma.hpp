#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jaco/builder.hpp"
#include "jaco/rational.hpp"

namespace jaco {

/// Undirected simple graph on vertices 1..order.
class SimpleGraph {
 public:
  using Vertex = std::uint32_t;

  explicit SimpleGraph(std::size_t order);

  static SimpleGraph complete(std::size_t order);
  static SimpleGraph edgeless(std::size_t order);
  /// Underlying graph of J_n; throws Error(ArcBudgetExceeded) past `budget`.
  static SimpleGraph underlying(const JacoGraph& g,
                                std::uint64_t budget = kDefaultArcBudget);

  /// Idempotent. Loops and out-of-range endpoints are rejected.
  void add_edge(Vertex u, Vertex v);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbours(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Non-empty when every vertex i is adjacent to exactly the higher
  /// indices i+1..r_i and r is non-decreasing. The graph is then a proper
  /// interval graph whose maximum clique is max(r_i - i + 1).
  std::optional<std::vector<Vertex>> interval_certificate() const;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;  // each list sorted
  std::size_t edges_ = 0;
};

/// Vertex -> colour map with colours 1..k and no empty class.
class ProperColouring {
 public:
  ProperColouring() = default;

  /// Validates properness and that the colours used are exactly 1..k.
  static ProperColouring from_assignment(const SimpleGraph& g,
                                         std::vector<std::uint32_t> colours);

  std::uint32_t k() const noexcept {
    return static_cast<std::uint32_t>(weights_.size());
  }
  std::size_t order() const noexcept { return assignment_.size(); }
  std::uint32_t colour_of(SimpleGraph::Vertex v) const;
  std::span<const std::uint32_t> assignment() const noexcept {
    return assignment_;
  }
  /// theta(c_1), ..., theta(c_k).
  std::span<const std::uint64_t> weights() const noexcept { return weights_; }

  /// Members of colour class c, ascending.
  std::vector<SimpleGraph::Vertex> colour_class(std::uint32_t c) const;

  friend bool operator==(const ProperColouring&,
                         const ProperColouring&) = default;

 private:
  friend ProperColouring reverse_colouring(const ProperColouring& s);
  explicit ProperColouring(std::vector<std::uint32_t> colours);

  std::vector<std::uint32_t> assignment_;  // index v-1
  std::vector<std::uint64_t> weights_;
};

struct SearchOptions {
  /// Branching steps allowed before Error(SearchBudgetExceeded).
  std::uint64_t node_budget = 10'000'000;
};

/// chi(G). Uses the interval certificate when present, otherwise an exact
/// backtracking search (order <= 64).
std::uint32_t chromatic_number(const SimpleGraph& g, SearchOptions opts = {});

/// Proper colouring with exactly chi(G) colours minimising sum i*theta(c_i).
/// Among optima the weight vector is lexicographically greatest, then the
/// assignment (colour of v1, v2, ...) is lexicographically smallest.
ProperColouring min_sum_colouring(const SimpleGraph& g, SearchOptions opts = {});

/// Repeatedly removes the lexicographically smallest maximum independent
/// set of what remains and gives it the next colour. Not optimal in
/// general and may use more than chi colours.
ProperColouring greedy_min_sum(const SimpleGraph& g, SearchOptions opts = {});

/// Colour c becomes k - c + 1.
ProperColouring reverse_colouring(const ProperColouring& s);

/// omega(S) = sum i*theta(c_i).
std::uint64_t colour_sum(std::span<const std::uint64_t> weights);
inline std::uint64_t colour_sum(const ProperColouring& s) {
  return colour_sum(s.weights());
}

struct ChromaticStats {
  Rational mean;
  Rational variance;
};

/// Mean and variance of the colour index under the pmf theta(c_i)/|V|.
ChromaticStats chromatic_stats(std::span<const std::uint64_t> weights);
inline ChromaticStats chromatic_stats(const ProperColouring& s) {
  return chromatic_stats(s.weights());
}

struct ChromaticReport {
  std::size_t order = 0;
  std::uint32_t chi = 0;
  std::uint64_t chi_minus = 0;
  std::uint64_t chi_plus = 0;
  std::vector<std::uint64_t> weights_min;
  std::vector<std::uint64_t> weights_max;
  Rational mu_minus;
  Rational mu_plus;
  Rational var_minus;
  Rational var_plus;
  ProperColouring min_colouring;
};

/// Minimum-sum colouring plus everything derived from it. The maximum sum
/// comes from reversing the minimum colouring: reversal is a bijection on
/// chi-colourings taking sum s to (chi + 1)|V| - s.
ChromaticReport chroma_report(const SimpleGraph& g, SearchOptions opts = {});

}  // namespace jaco
