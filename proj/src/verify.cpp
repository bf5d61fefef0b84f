#include "jaco/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "jaco/braided.hpp"
#include "jaco/builder.hpp"
#include "jaco/chroma.hpp"
#include "jaco/error.hpp"
#include "jaco/invariants.hpp"
#include "jaco/oracle.hpp"

namespace jaco {

namespace {

const IncidencePolynomial kSquare{1, 0, 0};

constexpr std::uint64_t kSquareColouringOrder = 20;
constexpr std::uint64_t kCompleteGraphOrder = 50;
constexpr std::uint64_t kBraidedVertexLimit = 12;

const std::vector<PropertyInfo>& catalogue() {
  static const std::vector<PropertyInfo> props = {
      {"definitional-replay", "2.1.2",
       "builder arcs equal the pairwise arc predicate", false},
      {"truncation-coherence", "truncation",
       "J_n records are a prefix of J_N; out-degree is min(reach,n)-i", false},
      {"completeness-threshold", "2.3.2",
       "J_n complete with Delta=n-1 iff n <= f(1)+1", false},
      {"degree-jump-bound", "2.3.6",
       "|d(v_i)-d(v_{i-1})| <= a(2i-1)+b (a >= 1)", false},
      {"in-degree-steps", "2.4.2",
       "consecutive in-degrees differ by 0 or 1 (a >= 1)", false},
      {"out-degree-distinct", "2.4.4",
       "consecutive root out-degrees differ (a >= 1)", false},
      {"jaconian-plateau", "2.4.1",
       "equal consecutive in-degrees change |J| (f = x^2)", false},
      {"prime-degree-prefix", "2.2.1",
       "d(prime)=f(prime) implies d(v_m)=f(m) below it (a >= 1)", false},
      {"max-degree-monotone", "2.2.2", "Delta(J_k) <= Delta(J_n) for k <= n",
       false},
      {"min-degree-bound", "2.2.3", "0 <= delta(J_n) <= f(1)", false},
      {"in-degree-equals-degree", "2.2.4",
       "d^-(v_k) in J_n equals d(v_k) in J_k", false},
      {"prime-jaconian-locator", "2.3.4",
       "smallest i with d(v_i)=f(i) reaching v_n is prime (a >= 1)", false},
      {"hope-complete", "hope",
       "vertices above the prime Jaconian vertex induce a clique", false},
      {"components", "components",
       "components are blocks of c+1 (constant), singletons (zero) or one",
       false},
      {"v1-distance", "distance",
       "window search equals BFS, directed and undirected", false},
      {"max-degree-locator", "2.3.7",
       "smallest k with Delta=f(f(1)) is f(f(1))+1, prime v_{f(1)} (a >= 1)",
       false},
      {"published-locator-deviation", "",
       "printed order f(f(1))-f(1)+1 differs from the sweep", true},
      {"min-sum-oracle", "2.5.2",
       "exact min-sum colouring equals exhaustive enumeration", false},
      {"reversal-identity", "2.5.3",
       "chi- + chi+ = (chi+1)|V| and chi+ matches enumeration", false},
      {"variance-symmetry", "2.6.4",
       "var- = var+ on J_i(x^2), i <= 20", false},
      {"complete-graph-sums", "2.5.4",
       "K_n sums n(n+1)/2, mean (n+1)/2, variance (n^2-1)/12, n <= 50",
       false},
      {"weight-evolution", "2.6.5",
       "J_i -> J_{i+1} (x^2) adds a weight-1 colour or bumps one weight",
       false},
      {"braided-closed-form", "2.6.3",
       "two-block mean closed forms equal the engine, n+m-l <= 12", false},
      {"greedy-cross-check", "greedy",
       "greedy independent-set colouring matches the optimum on J_i(x^2)",
       true},
  };
  return props;
}

std::string poly_tag(const IncidencePolynomial& p, std::uint64_t n) {
  return "f=" + format(p) + " n=" + std::to_string(n);
}

class Checker {
 public:
  explicit Checker(const std::vector<std::string>& wanted) {
    for (const auto& info : catalogue()) {
      bool on = wanted.empty();
      for (const auto& w : wanted) on = on || w == info.id || w == info.alias;
      if (on) {
        order_.push_back(info.id);
        results_[info.id] = PropertyResult{info, 0, 0, {}};
      }
    }
    for (const auto& w : wanted) {
      const bool known = std::any_of(
          catalogue().begin(), catalogue().end(),
          [&](const PropertyInfo& i) { return w == i.id || w == i.alias; });
      if (!known) {
        throw Error(ErrorCode::InvalidArgument, "unknown property '" + w + "'");
      }
    }
  }

  bool enabled(const std::string& id) const { return results_.count(id) != 0; }

  template <typename Describe>
  void check(const std::string& id, bool ok, Describe&& describe) {
    auto& r = results_.at(id);
    ++r.checked;
    if (!ok) {
      if (r.failures == 0) r.first_failure = describe();
      ++r.failures;
    }
  }

  VerifyReport finish() {
    VerifyReport report;
    for (const auto& id : order_) report.results.push_back(results_.at(id));
    return report;
  }

 private:
  std::vector<std::string> order_;
  std::map<std::string, PropertyResult> results_;
};

bool is_complete(const std::vector<std::uint64_t>& degrees) {
  return std::all_of(degrees.begin(), degrees.end(), [&](std::uint64_t d) {
    return d + 1 == degrees.size();
  });
}

std::vector<IndexRange> bfs_components(std::uint64_t n,
                                       const std::vector<Arc>& edges) {
  std::vector<std::uint64_t> label(n + 1, 0);
  std::vector<std::vector<std::uint64_t>> adj(n + 1);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<IndexRange> out;
  for (std::uint64_t s = 1; s <= n; ++s) {
    if (label[s] != 0) continue;
    std::vector<std::uint64_t> stack{s};
    label[s] = s;
    std::uint64_t lo = s, hi = s, count = 0;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      ++count;
      lo = std::min(lo, u);
      hi = std::max(hi, u);
      for (auto v : adj[u]) {
        if (label[v] == 0) {
          label[v] = s;
          stack.push_back(v);
        }
      }
    }
    // Non-contiguous components are reported as an impossible range.
    out.push_back(count == hi - lo + 1 ? IndexRange{lo, hi} : IndexRange{hi, lo});
  }
  return out;
}

std::vector<IndexRange> expected_components(const IncidencePolynomial& p,
                                            std::uint64_t n) {
  std::vector<IndexRange> out;
  if (p.a == 0 && p.b == 0) {
    const std::uint64_t block = p.c + 1;
    for (std::uint64_t s = 1; s <= n; s += block) {
      out.push_back({s, std::min(n, s + block - 1)});
    }
  } else {
    out.push_back({1, n});
  }
  return out;
}

void check_structure(Checker& chk, const IncidencePolynomial& p,
                     std::uint64_t max_order) {
  const bool quadratic = classify(p) == FamilyClass::Quadratic;
  const bool connected = p.a >= 1 || p.b >= 1;
  const JacoGraph root = build(p, max_order + 1);
  const std::uint64_t f1 = evaluate(p, 1);
  std::uint64_t previous_max = 0;
  std::uint64_t previous_jaconian = 0;

  if (quadratic) {
    for (std::uint64_t i = 1; i <= max_order; ++i) {
      const auto& lo = root.vertex(i);
      const auto& hi = root.vertex(i + 1);
      if (chk.enabled("in-degree-steps")) {
        chk.check("in-degree-steps",
                  hi.in_degree == lo.in_degree || hi.in_degree == lo.in_degree + 1,
                  [&] { return poly_tag(p, i + 1); });
      }
      if (chk.enabled("out-degree-distinct")) {
        chk.check("out-degree-distinct",
                  root.out_degree_root(i) != root.out_degree_root(i + 1),
                  [&] { return poly_tag(p, i + 1); });
      }
    }
  }

  for (std::uint64_t n = 1; n <= max_order; ++n) {
    const JacoGraph g = build(p, n);
    const auto degrees = underlying_degrees(g);
    const auto report = invariant_report(g);
    const auto tag = [&] { return poly_tag(p, n); };

    const bool need_oracle = chk.enabled("definitional-replay") ||
                             chk.enabled("components") ||
                             chk.enabled("v1-distance");
    const auto edges =
        need_oracle ? oracle::arcs_by_definition(p, n) : std::vector<Arc>{};

    if (chk.enabled("definitional-replay")) {
      chk.check("definitional-replay", arcs(g) == edges, tag);
    }
    if (chk.enabled("truncation-coherence")) {
      bool ok = true;
      for (std::uint64_t i = 1; i <= n; ++i) {
        ok = ok && g.vertex(i) == root.vertex(i) &&
             g.out_degree(i) == std::min(root.vertex(i).reach, n) - i;
      }
      chk.check("truncation-coherence", ok, tag);
    }
    if (chk.enabled("completeness-threshold")) {
      const bool expect = n <= f1 + 1;
      bool ok = is_complete(degrees) == expect;
      if (expect) {
        ok = ok && report.max_degree == n - 1 && report.jaconian_set.size() == n;
      }
      chk.check("completeness-threshold", ok, tag);
    }
    if (quadratic && chk.enabled("degree-jump-bound")) {
      for (std::uint64_t i = 2; i <= n; ++i) {
        const auto lo = std::min(degrees[i - 1], degrees[i - 2]);
        const auto hi = std::max(degrees[i - 1], degrees[i - 2]);
        chk.check("degree-jump-bound", hi - lo <= forward_difference_bound(p, i),
                  [&] { return poly_tag(p, n) + " i=" + std::to_string(i); });
      }
    }
    if (quadratic && chk.enabled("prime-degree-prefix")) {
      const auto prime = report.prime_jaconian;
      if (degrees[prime - 1] == evaluate(p, prime)) {
        bool ok = true;
        for (std::uint64_t m = 1; m <= prime; ++m) {
          ok = ok && degrees[m - 1] == evaluate(p, m);
        }
        chk.check("prime-degree-prefix", ok, tag);
      }
    }
    if (chk.enabled("max-degree-monotone")) {
      chk.check("max-degree-monotone", previous_max <= report.max_degree, tag);
    }
    if (chk.enabled("min-degree-bound")) {
      chk.check("min-degree-bound", report.min_degree <= f1, tag);
    }
    if (chk.enabled("in-degree-equals-degree")) {
      chk.check("in-degree-equals-degree",
                degrees[n - 1] == root.vertex(n).in_degree, tag);
    }
    if (quadratic && chk.enabled("prime-jaconian-locator")) {
      for (std::uint64_t i = 1; i < n; ++i) {
        if (degrees[i - 1] == evaluate(p, i) && g.vertex(i).reach >= n) {
          chk.check("prime-jaconian-locator", report.prime_jaconian == i, tag);
          break;
        }
      }
    }
    // Constant incidence splits into disjoint cliques; no Hope claim there.
    if (connected && chk.enabled("hope-complete")) {
      bool ok = true;
      const auto range = report.hope_range;
      for (std::uint64_t u = range.first; u <= range.last && ok; ++u) {
        for (std::uint64_t v = u + 1; v <= range.last && ok; ++v) {
          ok = g.has_arc(u, v);
        }
      }
      chk.check("hope-complete",
                ok && range.first == report.prime_jaconian + 1 &&
                    range.last == n,
                tag);
    }
    if (chk.enabled("components") || chk.enabled("v1-distance")) {
      if (chk.enabled("components")) {
        const auto comps = component_decomposition(g);
        chk.check("components",
                  comps == bfs_components(n, edges) &&
                      comps == expected_components(p, n),
                  tag);
      }
      if (chk.enabled("v1-distance")) {
        const auto directed = oracle::bfs_distance(n, edges, true);
        const auto undirected = oracle::bfs_distance(n, edges, false);
        const auto fast = report.v1_distance.value_or(UINT64_MAX);
        chk.check("v1-distance", fast == directed && fast == undirected, tag);
      }
    }
    if (p == kSquare && n > 1 && chk.enabled("jaconian-plateau") &&
        root.vertex(n - 1).in_degree == root.vertex(n).in_degree) {
      chk.check("jaconian-plateau",
                previous_jaconian != report.jaconian_set.size(), tag);
    }
    previous_max = report.max_degree;
    previous_jaconian = report.jaconian_set.size();
  }

  if (quadratic && (chk.enabled("max-degree-locator") ||
                    chk.enabled("published-locator-deviation"))) {
    const auto loc = smallest_with_max_degree(p);
    const auto swept = oracle::sweep_smallest_max_degree(p, loc.max_degree);
    const auto tag = [&] {
      return "f=" + format(p) + " sweep k=" + std::to_string(swept) +
             " closed form k=" + std::to_string(loc.order) +
             " printed k=" + std::to_string(loc.published_order);
    };
    if (chk.enabled("max-degree-locator")) {
      chk.check("max-degree-locator",
                swept == loc.order && loc.prime_vertex == f1, tag);
    }
    if (chk.enabled("published-locator-deviation")) {
      chk.check("published-locator-deviation", swept == loc.published_order,
                tag);
    }
  }
}

void check_colouring(Checker& chk, const IncidencePolynomial& p,
                     std::uint64_t max_order) {
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    const auto g = SimpleGraph::underlying(build(p, n));
    const auto report = chroma_report(g);
    const auto tag = [&] { return poly_tag(p, n); };
    if (chk.enabled("min-sum-oracle") || chk.enabled("reversal-identity")) {
      const auto exact = oracle::exhaustive_min_sum(g);
      if (chk.enabled("min-sum-oracle")) {
        chk.check("min-sum-oracle",
                  exact.chi == report.chi && exact.sum == report.chi_minus &&
                      exact.weights == report.weights_min,
                  tag);
      }
      if (chk.enabled("reversal-identity")) {
        chk.check("reversal-identity",
                  report.chi_minus + report.chi_plus ==
                          (report.chi + 1ull) * n &&
                      colour_sum(report.weights_max) == report.chi_plus &&
                      exact.max_sum == report.chi_plus,
                  tag);
      }
    }
  }
}

void check_square_colouring(Checker& chk) {
  std::vector<std::uint64_t> previous;
  for (std::uint64_t i = 1; i <= kSquareColouringOrder; ++i) {
    const auto g = SimpleGraph::underlying(build(kSquare, i));
    const auto report = chroma_report(g);
    const auto tag = [&] { return poly_tag(kSquare, i); };
    if (chk.enabled("variance-symmetry")) {
      chk.check("variance-symmetry", report.var_minus == report.var_plus, tag);
    }
    if (chk.enabled("weight-evolution") && i > 1) {
      const auto& next = report.weights_min;
      bool ok = false;
      if (next.size() == previous.size() + 1) {
        ok = next.back() == 1 &&
             std::equal(previous.begin(), previous.end(), next.begin());
      } else if (next.size() == previous.size()) {
        int bumped = 0;
        bool other = false;
        for (std::size_t c = 0; c < next.size(); ++c) {
          if (next[c] == previous[c] + 1) {
            ++bumped;
          } else if (next[c] != previous[c]) {
            other = true;
          }
        }
        ok = bumped == 1 && !other;
      }
      chk.check("weight-evolution", ok, tag);
    }
    if (chk.enabled("greedy-cross-check")) {
      const auto greedy = greedy_min_sum(g);
      chk.check("greedy-cross-check",
                std::equal(greedy.weights().begin(), greedy.weights().end(),
                           report.weights_min.begin(), report.weights_min.end()),
                tag);
    }
    previous = report.weights_min;
  }
}

void check_closed_forms(Checker& chk) {
  if (chk.enabled("complete-graph-sums")) {
    for (std::uint64_t n = 1; n <= kCompleteGraphOrder; ++n) {
      const auto report = chroma_report(SimpleGraph::complete(n));
      const auto stats = complete_graph_stats(n);
      chk.check("complete-graph-sums",
                report.chi_minus == stats.sum && report.chi_plus == stats.sum &&
                    report.mu_minus == stats.mean &&
                    report.mu_plus == stats.mean &&
                    report.var_minus == stats.variance &&
                    report.var_plus == stats.variance,
                [&] { return "K_" + std::to_string(n); });
    }
  }
  if (chk.enabled("braided-closed-form")) {
    for (std::uint64_t n = 1; n <= kBraidedVertexLimit; ++n) {
      for (std::uint64_t m = 1; m <= n; ++m) {
        for (std::uint64_t l = 0; l <= m; ++l) {
          if (n + m - l > kBraidedVertexLimit) continue;
          const auto report = chroma_report(realize({{n, m}, {l}}));
          chk.check("braided-closed-form",
                    report.mu_minus == mu_min_two_block(n, m, l) &&
                        report.mu_plus == mu_max_two_block(n, m, l) &&
                        report.var_minus == report.var_plus,
                    [&] {
                      std::ostringstream os;
                      os << "K_" << n << " +_" << l << " K_" << m;
                      return os.str();
                    });
        }
      }
    }
  }
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.passed(); });
}

std::vector<IncidencePolynomial> default_verify_grid() {
  std::vector<IncidencePolynomial> grid;
  for (std::uint64_t a = 1; a <= 3; ++a) {
    for (std::uint64_t b = 0; b <= 2; ++b) {
      for (std::uint64_t c = 0; c <= 2; ++c) grid.push_back({a, b, c});
    }
  }
  grid.push_back({0, 0, 0});
  grid.push_back({0, 0, 3});
  grid.push_back({0, 1, 0});
  grid.push_back({0, 2, 1});
  return grid;
}

std::span<const PropertyInfo> verify_properties() { return catalogue(); }

VerifyReport run_verification(const VerifyConfig& config) {
  Checker chk(config.properties);
  const auto polys =
      config.polynomials.empty() ? default_verify_grid() : config.polynomials;
  const std::uint64_t colour_order =
      std::min<std::uint64_t>(config.colouring_max_order,
                              oracle::kMaxExhaustiveOrder);
  for (const auto& p : polys) {
    if (config.max_order > 0) check_structure(chk, p, config.max_order);
    check_colouring(chk, p, std::min(colour_order, config.max_order));
  }
  if (std::find(polys.begin(), polys.end(), kSquare) != polys.end()) {
    check_square_colouring(chk);
  }
  check_closed_forms(chk);
  return chk.finish();
}

}  // namespace jaco
