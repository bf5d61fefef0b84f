#include "jaco/chroma.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "jaco/error.hpp"

namespace jaco {

using Vertex = SimpleGraph::Vertex;

SimpleGraph::SimpleGraph(std::size_t order) : adjacency_(order) {
  if (order == 0) {
    throw Error(ErrorCode::InvalidOrder, "graph order must be >= 1");
  }
}

SimpleGraph SimpleGraph::complete(std::size_t order) {
  SimpleGraph g(order);
  for (Vertex u = 1; u <= order; ++u) {
    for (Vertex v = u + 1; v <= order; ++v) g.add_edge(u, v);
  }
  return g;
}

SimpleGraph SimpleGraph::edgeless(std::size_t order) { return SimpleGraph(order); }

SimpleGraph SimpleGraph::underlying(const JacoGraph& g, std::uint64_t budget) {
  SimpleGraph out(g.order());
  for (const auto& [i, j] : arcs(g, budget)) {
    out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return out;
}

void SimpleGraph::check_vertex(Vertex v) const {
  if (v == 0 || v > order()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(v) + " outside 1.." +
                    std::to_string(order()));
  }
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw Error(ErrorCode::InvalidArgument,
                "loop at vertex " + std::to_string(u));
  }
  auto insert = [](std::vector<Vertex>& list, Vertex x) {
    const auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) return false;
    list.insert(it, x);
    return true;
  };
  if (insert(adjacency_[u - 1], v)) {
    insert(adjacency_[v - 1], u);
    ++edges_;
  }
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adjacency_[u - 1];
  return std::binary_search(list.begin(), list.end(), v);
}

std::span<const Vertex> SimpleGraph::neighbours(Vertex v) const {
  check_vertex(v);
  return adjacency_[v - 1];
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (Vertex u = 1; u <= order(); ++u) {
    for (Vertex v : adjacency_[u - 1]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<std::vector<Vertex>> SimpleGraph::interval_certificate() const {
  std::vector<Vertex> reach(order());
  Vertex previous = 0;
  for (Vertex i = 1; i <= order(); ++i) {
    const auto& list = adjacency_[i - 1];
    auto it = std::upper_bound(list.begin(), list.end(), i);
    Vertex r = i;
    for (; it != list.end(); ++it) {
      if (*it != r + 1) return std::nullopt;
      r = *it;
    }
    if (r < previous) return std::nullopt;
    reach[i - 1] = previous = r;
  }
  return reach;
}

ProperColouring::ProperColouring(std::vector<std::uint32_t> colours)
    : assignment_(std::move(colours)) {
  for (std::uint32_t c : assignment_) {
    if (c == 0) {
      throw Error(ErrorCode::InvalidArgument, "colours are numbered from 1");
    }
    if (c > weights_.size()) weights_.resize(c, 0);
    ++weights_[c - 1];
  }
  for (std::size_t c = 0; c < weights_.size(); ++c) {
    if (weights_[c] == 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "colour " + std::to_string(c + 1) + " is unused");
    }
  }
}

ProperColouring ProperColouring::from_assignment(
    const SimpleGraph& g, std::vector<std::uint32_t> colours) {
  if (colours.size() != g.order()) {
    throw Error(ErrorCode::InvalidArgument,
                "assignment length does not match the graph order");
  }
  for (const auto& [u, v] : g.edges()) {
    if (colours[u - 1] == colours[v - 1]) {
      throw Error(ErrorCode::InvalidArgument,
                  "adjacent vertices " + std::to_string(u) + " and " +
                      std::to_string(v) + " share a colour");
    }
  }
  return ProperColouring(std::move(colours));
}

std::uint32_t ProperColouring::colour_of(Vertex v) const {
  if (v == 0 || v > assignment_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex outside the colouring");
  }
  return assignment_[v - 1];
}

std::vector<Vertex> ProperColouring::colour_class(std::uint32_t c) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] == c) out.push_back(static_cast<Vertex>(i + 1));
  }
  return out;
}

ProperColouring reverse_colouring(const ProperColouring& s) {
  const std::uint32_t k = s.k();
  std::vector<std::uint32_t> colours(s.assignment().begin(),
                                     s.assignment().end());
  for (auto& c : colours) c = k - c + 1;
  return ProperColouring(std::move(colours));
}

std::uint64_t colour_sum(std::span<const std::uint64_t> weights) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) sum += (i + 1) * weights[i];
  return sum;
}

ChromaticStats chromatic_stats(std::span<const std::uint64_t> weights) {
  std::int64_t total = 0;
  std::int64_t first = 0;
  std::int64_t second = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto idx = static_cast<std::int64_t>(i + 1);
    const auto w = static_cast<std::int64_t>(weights[i]);
    total += w;
    first += idx * w;
    second += idx * idx * w;
  }
  if (total == 0) {
    throw Error(ErrorCode::InvalidArgument, "empty colouring");
  }
  const Rational mean(first, total);
  return {mean, Rational(second, total) - mean * mean};
}

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaxSearchOrder = 64;

Mask bit(std::size_t v) { return Mask{1} << v; }

// Zero-based bitmask view of a graph for the exponential searches.
struct BitGraph {
  std::size_t n = 0;
  std::vector<Mask> nbr;
};

BitGraph to_bits(const SimpleGraph& g, const char* what) {
  if (g.order() > kMaxSearchOrder) {
    throw Error(ErrorCode::SearchBudgetExceeded,
                std::string(what) + " supports at most 64 vertices without an "
                                    "interval certificate");
  }
  BitGraph out{g.order(), std::vector<Mask>(g.order(), 0)};
  for (const auto& [u, v] : g.edges()) {
    out.nbr[u - 1] |= bit(v - 1);
    out.nbr[v - 1] |= bit(u - 1);
  }
  return out;
}

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : left_(limit) {}
  void spend() {
    if (left_ == 0) {
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "search node budget exhausted");
    }
    --left_;
  }

 private:
  std::uint64_t left_;
};

std::vector<std::uint32_t> first_fit(const BitGraph& g) {
  std::vector<std::uint32_t> colour(g.n, 0);
  for (std::size_t v = 0; v < g.n; ++v) {
    std::vector<bool> taken(g.n + 2, false);
    for (std::size_t u = 0; u < v; ++u) {
      if (g.nbr[v] & bit(u)) taken[colour[u]] = true;
    }
    std::uint32_t c = 1;
    while (taken[c]) ++c;
    colour[v] = c;
  }
  return colour;
}

// Can g be properly coloured with k colours? Vertices in index order, new
// colours opened in order so each partition is visited once.
bool k_colourable(const BitGraph& g, std::uint32_t k, Budget& budget) {
  std::vector<Mask> classes;
  auto rec = [&](auto&& self, std::size_t v) -> bool {
    budget.spend();
    if (v == g.n) return true;
    for (auto& cls : classes) {
      if ((cls & g.nbr[v]) == 0) {
        cls |= bit(v);
        if (self(self, v + 1)) return true;
        cls &= ~bit(v);
      }
    }
    if (classes.size() < k) {
      classes.push_back(bit(v));
      if (self(self, v + 1)) return true;
      classes.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

std::uint32_t max_of(const std::vector<std::uint32_t>& v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

}  // namespace

std::uint32_t chromatic_number(const SimpleGraph& g, SearchOptions opts) {
  if (const auto reach = g.interval_certificate()) {
    std::uint32_t best = 1;
    for (Vertex i = 1; i <= g.order(); ++i) {
      best = std::max(best, (*reach)[i - 1] - i + 1);
    }
    return best;
  }
  const BitGraph bits = to_bits(g, "chromatic number search");
  const std::uint32_t upper = max_of(first_fit(bits));
  Budget budget(opts.node_budget);
  std::uint32_t k = g.edge_count() > 0 ? 2 : 1;
  for (; k < upper; ++k) {
    if (k_colourable(bits, k, budget)) return k;
  }
  return upper;
}

namespace {

// Cost of a partition once its classes are ranked by non-increasing size.
std::uint64_t ranked_cost(std::vector<std::uint64_t>& sizes) {
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return colour_sum(sizes);
}

class MinSumSearch {
 public:
  MinSumSearch(const BitGraph& g, std::uint32_t chi, std::uint64_t budget)
      : g_(g), chi_(chi), budget_(budget) {}

  std::vector<std::uint32_t> run() {
    seed_upper_bound();
    rec(0);
    return best_assignment_;
  }

 private:
  void seed_upper_bound() {
    // Any chi-colouring bounds the optimum; colour greedily into chi
    // classes when first-fit manages it, otherwise start unbounded.
    const auto ff = first_fit(g_);
    if (max_of(ff) == chi_) {
      std::vector<std::uint64_t> sizes(chi_, 0);
      for (auto c : ff) ++sizes[c - 1];
      best_cost_ = ranked_cost(sizes);
    }
  }

  std::uint64_t lower_bound(std::size_t next_vertex) const {
    std::vector<std::uint64_t> sizes(sizes_);
    std::uint64_t bound = ranked_cost(sizes);
    const std::uint64_t used = classes_.size();
    const std::uint64_t remaining = g_.n - next_vertex;
    for (std::uint64_t t = used + 1; t <= chi_; ++t) bound += t;
    return bound + (remaining - (chi_ - used));
  }

  void rec(std::size_t v) {
    budget_.spend();
    if (g_.n - v < chi_ - classes_.size()) return;
    if (lower_bound(v) > best_cost_) return;
    if (v == g_.n) {
      consider_leaf();
      return;
    }
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if ((classes_[c] & g_.nbr[v]) == 0) {
        classes_[c] |= bit(v);
        ++sizes_[c];
        rec(v + 1);
        --sizes_[c];
        classes_[c] &= ~bit(v);
      }
    }
    if (classes_.size() < chi_) {
      classes_.push_back(bit(v));
      sizes_.push_back(1);
      rec(v + 1);
      sizes_.pop_back();
      classes_.pop_back();
    }
  }

  void consider_leaf() {
    // Classes were opened in order of their smallest vertex, so a stable
    // sort by size gives equal-sized classes to colours in that order.
    std::vector<std::size_t> rank(classes_.size());
    std::iota(rank.begin(), rank.end(), 0);
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t x, std::size_t y) {
      return sizes_[x] > sizes_[y];
    });
    std::vector<std::uint64_t> weights;
    std::vector<std::uint32_t> assignment(g_.n, 0);
    for (std::size_t r = 0; r < rank.size(); ++r) {
      weights.push_back(sizes_[rank[r]]);
      Mask m = classes_[rank[r]];
      while (m) {
        assignment[std::countr_zero(m)] = static_cast<std::uint32_t>(r + 1);
        m &= m - 1;
      }
    }
    const std::uint64_t cost = colour_sum(weights);
    const bool better =
        best_assignment_.empty() || cost < best_cost_ ||
        (cost == best_cost_ &&
         (weights > best_weights_ ||
          (weights == best_weights_ && assignment < best_assignment_)));
    if (better) {
      best_cost_ = cost;
      best_weights_ = std::move(weights);
      best_assignment_ = std::move(assignment);
    }
  }

  const BitGraph& g_;
  std::uint32_t chi_;
  Budget budget_;
  std::vector<Mask> classes_;
  std::vector<std::uint64_t> sizes_;
  std::uint64_t best_cost_ = UINT64_MAX;
  std::vector<std::uint64_t> best_weights_;
  std::vector<std::uint32_t> best_assignment_;
};

// Lexicographically smallest maximum independent set inside `allowed`.
// Include-before-exclude DFS meets sets in lexicographic order, so the
// first set of each new record size is the smallest of that size.
Mask lex_max_independent_set(const BitGraph& g, Mask allowed, Budget& budget) {
  Mask best = 0;
  int best_size = -1;
  auto rec = [&](auto&& self, Mask chosen, int size, Mask candidates) -> void {
    budget.spend();
    if (size + std::popcount(candidates) <= best_size) return;
    if (candidates == 0) {
      best = chosen;
      best_size = size;
      return;
    }
    const int v = std::countr_zero(candidates);
    const Mask rest = candidates & ~bit(v);
    self(self, chosen | bit(v), size + 1, rest & ~g.nbr[v]);
    self(self, chosen, size, rest);
  };
  rec(rec, 0, 0, allowed);
  return best;
}

}  // namespace

ProperColouring min_sum_colouring(const SimpleGraph& g, SearchOptions opts) {
  const std::uint32_t chi = chromatic_number(g, opts);
  const BitGraph bits = to_bits(g, "minimum-sum colouring");
  MinSumSearch search(bits, chi, opts.node_budget);
  return ProperColouring::from_assignment(g, search.run());
}

ProperColouring greedy_min_sum(const SimpleGraph& g, SearchOptions opts) {
  const BitGraph bits = to_bits(g, "greedy colouring");
  Budget budget(opts.node_budget);
  std::vector<std::uint32_t> colours(g.order(), 0);
  Mask left = g.order() == 64 ? ~Mask{0} : bit(g.order()) - 1;
  for (std::uint32_t c = 1; left != 0; ++c) {
    Mask chosen = lex_max_independent_set(bits, left, budget);
    left &= ~chosen;
    while (chosen) {
      colours[std::countr_zero(chosen)] = c;
      chosen &= chosen - 1;
    }
  }
  return ProperColouring::from_assignment(g, std::move(colours));
}

ChromaticReport chroma_report(const SimpleGraph& g, SearchOptions opts) {
  ChromaticReport r;
  r.order = g.order();
  r.min_colouring = min_sum_colouring(g, opts);
  r.chi = r.min_colouring.k();
  r.weights_min.assign(r.min_colouring.weights().begin(),
                       r.min_colouring.weights().end());
  r.weights_max.assign(r.weights_min.rbegin(), r.weights_min.rend());
  r.chi_minus = colour_sum(r.weights_min);
  r.chi_plus = (static_cast<std::uint64_t>(r.chi) + 1) * r.order - r.chi_minus;
  const auto low = chromatic_stats(r.weights_min);
  const auto high = chromatic_stats(r.weights_max);
  r.mu_minus = low.mean;
  r.var_minus = low.variance;
  r.mu_plus = high.mean;
  r.var_plus = high.variance;
  return r;
}

}  // namespace jaco
