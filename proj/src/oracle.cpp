#include "jaco/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "jaco/error.hpp"

namespace jaco::oracle {

std::vector<Arc> arcs_by_definition(const IncidencePolynomial& p,
                                    std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidOrder, "graph order must be >= 1");
  if (n > kMaxDefinitionOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "definitional oracle is limited to n <= 10000");
  }
  const auto a = static_cast<__int128>(p.a);
  const auto b = static_cast<__int128>(p.b);
  const auto c = static_cast<__int128>(p.c);
  std::vector<std::vector<bool>> arc(n + 1, std::vector<bool>(n + 1, false));

  auto in_degree = [&](std::uint64_t j) {
    std::uint64_t d = 0;
    for (std::uint64_t i = 1; i < j; ++i) d += arc[i][j] ? 1 : 0;
    return d;
  };
  auto predicate = [&](std::uint64_t i, std::uint64_t j, std::uint64_t din) {
    const auto x = static_cast<__int128>(i);
    return a * x * x + (b + 1) * x + c - static_cast<__int128>(din) >=
           static_cast<__int128>(j);
  };

  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t din = in_degree(i);
    for (std::uint64_t j = i + 1; j <= n; ++j) arc[i][j] = predicate(i, j, din);
  }

  std::vector<Arc> out;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t din = in_degree(i);
    for (std::uint64_t j = i + 1; j <= n; ++j) {
      if (arc[i][j] != predicate(i, j, din)) {
        throw std::logic_error("arc predicate not self-consistent at (" +
                               std::to_string(i) + "," + std::to_string(j) +
                               ")");
      }
      if (arc[i][j]) out.emplace_back(i, j);
    }
  }
  return out;
}

ExhaustiveResult exhaustive_min_sum(const SimpleGraph& g) {
  const std::size_t n = g.order();
  if (n > kMaxExhaustiveOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "exhaustive colouring is limited to 12 vertices");
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) {
        adj[u][v] = g.adjacent(static_cast<SimpleGraph::Vertex>(u + 1),
                               static_cast<SimpleGraph::Vertex>(v + 1));
      }
    }
  }

  // Restricted growth strings: label[v] <= 1 + max(label[0..v)).
  for (std::uint32_t k = 1; k <= n; ++k) {
    ExhaustiveResult result;
    bool found = false;
    std::vector<std::uint32_t> label(n, 0);
    auto visit = [&]() {
      std::uint32_t blocks = 0;
      for (auto x : label) blocks = std::max(blocks, x + 1);
      if (blocks != k) return;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (adj[u][v] && label[u] == label[v]) return;
        }
      }
      std::vector<std::uint64_t> sizes(k, 0);
      for (auto x : label) ++sizes[x];
      // Rearrangement: the cheapest colour order puts the largest class on
      // colour 1.
      std::sort(sizes.begin(), sizes.end(), std::greater<>());
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < k; ++i) sum += (i + 1) * sizes[i];
      std::uint64_t reversed = 0;
      for (std::size_t i = 0; i < k; ++i) reversed += (k - i) * sizes[i];
      if (!found || sum < result.sum ||
          (sum == result.sum && sizes > result.weights)) {
        result.sum = sum;
        result.weights = sizes;
      }
      result.max_sum = std::max(result.max_sum, reversed);
      found = true;
    };
    auto rec = [&](auto&& self, std::size_t v, std::uint32_t max_label) -> void {
      if (v == n) {
        visit();
        return;
      }
      for (std::uint32_t x = 0; x <= max_label + 1 && x < k; ++x) {
        bool clash = false;
        for (std::size_t u = 0; u < v && !clash; ++u) {
          clash = adj[u][v] && label[u] == x;
        }
        if (clash) continue;
        label[v] = x;
        self(self, v + 1, std::max(max_label, x));
      }
    };
    if (n == 0) return result;
    label[0] = 0;
    rec(rec, 1, 0);
    if (found) {
      result.chi = k;
      return result;
    }
  }
  throw std::logic_error("no proper colouring found");
}

std::uint64_t sweep_smallest_max_degree(const IncidencePolynomial& p,
                                        std::uint64_t target,
                                        std::uint64_t max_order) {
  for (std::uint64_t k = 1; k <= max_order; ++k) {
    std::vector<std::uint64_t> degree(k + 1, 0);
    for (const auto& [i, j] : arcs_by_definition(p, k)) {
      ++degree[i];
      ++degree[j];
    }
    if (*std::max_element(degree.begin() + 1, degree.end()) == target) return k;
  }
  throw Error(ErrorCode::BudgetExceeded,
              "no order up to " + std::to_string(max_order) +
                  " attains the target maximum degree");
}

std::uint64_t bfs_distance(std::uint64_t n, const std::vector<Arc>& edges,
                           bool directed) {
  std::vector<std::vector<std::uint64_t>> next(n + 1);
  for (const auto& [u, v] : edges) {
    next[u].push_back(v);
    if (!directed) next[v].push_back(u);
  }
  std::vector<std::uint64_t> dist(n + 1, UINT64_MAX);
  std::deque<std::uint64_t> queue{1};
  dist[1] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto v : next[u]) {
      if (dist[v] == UINT64_MAX) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist[n];
}

}  // namespace jaco::oracle
