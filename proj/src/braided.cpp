#include "jaco/braided.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "jaco/error.hpp"

namespace jaco {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidBraid, what);
}

struct TwoBlock {
  std::int64_t n, m, l;
};

TwoBlock normalize(std::uint64_t n, std::uint64_t m, std::uint64_t l) {
  if (m > n) std::swap(n, m);
  validate(BraidedString{{n, m}, {l}});
  return {static_cast<std::int64_t>(n), static_cast<std::int64_t>(m),
          static_cast<std::int64_t>(l)};
}

}  // namespace

void validate(const BraidedString& s) {
  if (s.orders.empty()) invalid("a braided string needs at least one block");
  if (s.overlaps.size() + 1 != s.orders.size()) {
    invalid("expected " + std::to_string(s.orders.size() - 1) +
            " overlaps, got " + std::to_string(s.overlaps.size()));
  }
  for (std::size_t j = 0; j < s.orders.size(); ++j) {
    if (s.orders[j] == 0) {
      invalid("block " + std::to_string(j + 1) + " has order 0");
    }
  }
  for (std::size_t j = 0; j < s.overlaps.size(); ++j) {
    if (s.overlaps[j] > std::min(s.orders[j], s.orders[j + 1])) {
      invalid("overlap " + std::to_string(j + 1) +
              " exceeds the order of an adjacent block");
    }
  }
  for (std::size_t j = 1; j + 1 < s.orders.size(); ++j) {
    if (s.overlaps[j - 1] + s.overlaps[j] > s.orders[j]) {
      invalid("overlaps " + std::to_string(j) + " and " +
              std::to_string(j + 1) + " intersect inside block " +
              std::to_string(j + 1));
    }
  }
}

std::uint64_t vertex_count(const BraidedString& s) {
  validate(s);
  std::uint64_t total = 0;
  for (auto n : s.orders) total += n;
  for (auto l : s.overlaps) total -= l;
  return total;
}

SimpleGraph realize(const BraidedString& s) {
  SimpleGraph g(vertex_count(s));
  std::uint64_t start = 1;
  for (std::size_t j = 0; j < s.orders.size(); ++j) {
    const std::uint64_t last = start + s.orders[j] - 1;
    for (std::uint64_t u = start; u <= last; ++u) {
      for (std::uint64_t v = u + 1; v <= last; ++v) {
        g.add_edge(static_cast<SimpleGraph::Vertex>(u),
                   static_cast<SimpleGraph::Vertex>(v));
      }
    }
    if (j < s.overlaps.size()) start = last + 1 - s.overlaps[j];
  }
  return g;
}

Rational mu_min_two_block(std::uint64_t n0, std::uint64_t m0, std::uint64_t l0) {
  const auto [n, m, l] = normalize(n0, m0, l0);
  return Rational(2 * (m - l) * (n + 1) + (n - m + l) * (n - m + l + 1),
                  2 * (n + m - l));
}

Rational mu_max_two_block(std::uint64_t n0, std::uint64_t m0, std::uint64_t l0) {
  const auto [n, m, l] = normalize(n0, m0, l0);
  return Rational(n * (n + 1) + (m - l) * (2 * n - m + l + 1), 2 * (n + m - l));
}

Rational mu_max_two_block_as_published(std::uint64_t n0, std::uint64_t m0,
                                       std::uint64_t l0) {
  const auto [n, m, l] = normalize(n0, m0, l0);
  return Rational((n - l) * (n - l + 1) + 4 * l * (n - l) + 2 * l * (l + 1),
                  2 * (n + m - l));
}

CompleteGraphStats complete_graph_stats(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidOrder, "K_n needs n >= 1");
  const auto k = static_cast<std::int64_t>(n);
  return {n * (n + 1) / 2, Rational(k + 1, 2), Rational(k * k - 1, 12)};
}

}  // namespace jaco
