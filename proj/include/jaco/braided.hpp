#pragma once

#include <cstdint>
#include <vector>

#include "jaco/chroma.hpp"
#include "jaco/rational.hpp"

namespace jaco {

/// String of complete graphs K_{n_1} +_{l_1} K_{n_2} +_{l_2} ... where
/// consecutive blocks share a clique of l_j vertices and the shared cliques
/// are pairwise disjoint. l_j = 0 is accepted and gives a disjoint union.
struct BraidedString {
  std::vector<std::uint64_t> orders;
  std::vector<std::uint64_t> overlaps;
};

/// Throws Error(InvalidBraid) naming the offending position.
void validate(const BraidedString& s);

std::uint64_t vertex_count(const BraidedString& s);

/// Block-major numbering: block j occupies a contiguous index run and its
/// last l_j vertices are the first l_j vertices of block j+1.
SimpleGraph realize(const BraidedString& s);

/// Minimum-sum chromatic mean of K_n +_l K_m (arguments may come in either
/// order).
Rational mu_min_two_block(std::uint64_t n, std::uint64_t m, std::uint64_t l);

/// Maximum-sum chromatic mean of K_n +_l K_m:
/// [n(n+1) + (m-l)(2n-m+l+1)] / [2(n+m-l)] with m <= n.
Rational mu_max_two_block(std::uint64_t n, std::uint64_t m, std::uint64_t l);

/// The originally published maximum-mean expression
/// [(n-l)(n-l+1) + 4l(n-l) + 2l(l+1)] / [2(n+m-l)]. It does not match the
/// engine (46/9 instead of 41/9 for K_7 +_3 K_5) and is kept for display.
Rational mu_max_two_block_as_published(std::uint64_t n, std::uint64_t m,
                                       std::uint64_t l);

struct CompleteGraphStats {
  std::uint64_t sum = 0;
  Rational mean;
  Rational variance;
};

/// (n(n+1)/2, (n+1)/2, (n^2-1)/12) for K_n, n >= 1.
CompleteGraphStats complete_graph_stats(std::uint64_t n);

}  // namespace jaco
