// Command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jaco/jaco.h"

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kBudget = 3 };

struct Failure {
  jaco_status status;
  std::string message;
};

void check(jaco_status s) {
  if (s != JACO_OK) throw Failure{s, jaco_last_error()};
}

int exit_code_for(jaco_status s) {
  switch (s) {
    case JACO_ERR_ARC_BUDGET:
    case JACO_ERR_SEARCH_BUDGET:
    case JACO_ERR_BUDGET:
    case JACO_ERR_ORDER_TOO_LARGE:
      return kBudget;
    default:
      return kUsage;
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Graph = std::unique_ptr<jaco_graph, Deleter<jaco_graph, jaco_graph_free>>;
using Invariants =
    std::unique_ptr<jaco_invariants, Deleter<jaco_invariants, jaco_invariants_free>>;
using SimpleGraph = std::unique_ptr<jaco_simple_graph,
                                    Deleter<jaco_simple_graph, jaco_simple_graph_free>>;
using Colouring =
    std::unique_ptr<jaco_colouring, Deleter<jaco_colouring, jaco_colouring_free>>;
using VerifyReport = std::unique_ptr<jaco_verify_report,
                                     Deleter<jaco_verify_report, jaco_verify_report_free>>;

jaco_poly parse_poly(const std::string& text) {
  jaco_poly p{};
  if (jaco_poly_parse(text.c_str(), &p) != JACO_OK) {
    std::ostringstream msg;
    msg << "cannot parse polynomial '" << text << "' at offset "
        << jaco_last_error_offset() << ": " << jaco_last_error();
    throw Failure{JACO_ERR_PARSE, msg.str()};
  }
  return p;
}

std::string format_poly(jaco_poly p) {
  std::size_t len = 0;
  jaco_poly_format(p, nullptr, 0, &len);
  std::string out(len + 1, '\0');
  check(jaco_poly_format(p, out.data(), out.size(), &len));
  out.resize(len);
  return out;
}

bool is_x_squared(jaco_poly p) { return p.a == 1 && p.b == 0 && p.c == 0; }

std::string rational(jaco_rational r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

bool same_value(jaco_rational x, jaco_rational y) {
  return static_cast<__int128>(x.num) * y.den ==
         static_cast<__int128>(y.num) * x.den;
}

Graph build(jaco_poly p, std::uint64_t n) {
  jaco_graph* g = nullptr;
  check(jaco_graph_build(p, n, &g));
  return Graph(g);
}

SimpleGraph underlying(const jaco_graph* g) {
  jaco_simple_graph* s = nullptr;
  check(jaco_simple_graph_underlying(g, 0, &s));
  return SimpleGraph(s);
}

std::vector<std::uint64_t> pairs_of_graph_arcs(const jaco_graph* g) {
  std::size_t count = 0;
  check(jaco_graph_arcs(g, 0, nullptr, 0, &count));
  std::vector<std::uint64_t> pairs(2 * count);
  check(jaco_graph_arcs(g, 0, pairs.data(), count, &count));
  return pairs;
}

std::vector<std::uint64_t> pairs_of_edges(const jaco_simple_graph* g) {
  std::size_t count = 0;
  check(jaco_simple_graph_edges(g, nullptr, 0, &count));
  std::vector<std::uint64_t> pairs(2 * count);
  check(jaco_simple_graph_edges(g, pairs.data(), count, &count));
  return pairs;
}

// DOT body: isolated vertices are declared, everything else appears via edges.
std::string dot(bool directed, std::uint64_t n,
                const std::vector<std::uint64_t>& pairs) {
  std::vector<bool> touched(n + 1, false);
  for (auto v : pairs) touched[v] = true;
  std::ostringstream out;
  out << (directed ? "digraph" : "graph") << " {\n";
  for (std::uint64_t v = 1; v <= n; ++v) {
    if (!touched[v]) out << "  v" << v << ";\n";
  }
  const char* link = directed ? " -> " : " -- ";
  for (std::size_t k = 0; k + 1 < pairs.size(); k += 2) {
    out << "  v" << pairs[k] << link << "v" << pairs[k + 1] << ";\n";
  }
  out << "}\n";
  return out.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  file.close();
  if (!file) throw Failure{JACO_ERR_INVALID_ARGUMENT, "cannot write " + path};
}

// -- table1 ------------------------------------------------------------------

struct Table1Options {
  std::string f = "x^2";
  std::uint64_t n = 35;
  bool header = false;
  bool errata = false;
  std::string out;
};

std::string table1_errata(std::uint64_t i, std::uint64_t d_out,
                          std::uint64_t dist, bool reachable) {
  jaco_published_table1_row row{};
  if (i > jaco_published_table1_rows() ||
      jaco_published_table1_get(i, &row) != JACO_OK) {
    return "";
  }
  std::string notes;
  auto note = [&](const std::string& s) {
    if (!notes.empty()) notes += ";";
    notes += s;
  };
  if (row.out_degree_root != d_out) {
    note("out_degree_root=" + std::to_string(row.out_degree_root));
  }
  if (!reachable || row.dist_v1 != dist) {
    note("dist_v1=" + std::to_string(row.dist_v1));
  }
  return notes;
}

int cmd_table1(const Table1Options& o) {
  const jaco_poly p = parse_poly(o.f);
  const bool errata = o.errata && is_x_squared(p);
  std::ostringstream out;
  if (o.header) {
    out << "i\tin_degree\tout_degree_root\tjaconian_set\tmax_degree\tdist_v1";
    if (o.errata) out << "\tprinted";
    out << "\n";
  }
  for (std::uint64_t i = 1; i <= o.n; ++i) {
    Graph g = build(p, i);
    jaco_vertex v{};
    check(jaco_graph_vertex(g.get(), i, &v));
    std::uint64_t d_out = 0;
    check(jaco_graph_out_degree_root(g.get(), i, &d_out));
    jaco_invariants* raw = nullptr;
    check(jaco_graph_invariants(g.get(), &raw));
    Invariants inv(raw);

    out << i << '\t' << v.in_degree << '\t' << d_out << '\t';
    const std::size_t members = jaco_invariants_jaconian_count(inv.get());
    for (std::size_t k = 0; k < members; ++k) {
      if (k > 0) out << ',';
      out << jaco_invariants_jaconian_at(inv.get(), k);
    }
    out << '\t' << jaco_invariants_max_degree(inv.get()) << '\t';
    std::uint64_t dist = 0;
    const bool reachable =
        jaco_invariants_v1_distance(inv.get(), &dist) == JACO_OK;
    if (reachable) {
      out << dist;
    } else {
      out << '-';
    }
    if (o.errata) {
      out << '\t' << (errata ? table1_errata(i, d_out, dist, reachable) : "");
    }
    out << '\n';
  }
  emit(out.str(), o.out);
  return kOk;
}

// -- table3 ------------------------------------------------------------------

struct Table3Options {
  std::string f = "x^2";
  std::uint64_t n = 20;
  std::uint64_t budget = 0;
  bool weights = false;
  bool header = false;
  bool errata = false;
  std::string out;
};

std::string table3_errata(std::uint64_t i, const jaco_chroma_report& r) {
  jaco_published_table3_row row{};
  if (i > jaco_published_table3_rows() ||
      jaco_published_table3_get(i, &row) != JACO_OK) {
    return "";
  }
  std::string notes;
  auto note = [&](const char* name, const std::string& printed) {
    if (!notes.empty()) notes += ";";
    notes += std::string(name) + "=" + printed;
  };
  auto raw = [](jaco_rational q) {
    return std::to_string(q.num) + "/" + std::to_string(q.den);
  };
  if (row.chi_minus != r.chi_minus) note("chi_minus", std::to_string(row.chi_minus));
  if (row.chi_plus != r.chi_plus) note("chi_plus", std::to_string(row.chi_plus));
  if (!same_value(row.mu_minus, r.mu_minus)) note("mu_minus", raw(row.mu_minus));
  if (!same_value(row.mu_plus, r.mu_plus)) note("mu_plus", raw(row.mu_plus));
  if (!same_value(row.var_minus, r.var_minus)) note("var_minus", raw(row.var_minus));
  if (!same_value(row.var_plus, r.var_plus)) note("var_plus", raw(row.var_plus));
  return notes;
}

int cmd_table3(const Table3Options& o) {
  const jaco_poly p = parse_poly(o.f);
  const bool errata = o.errata && is_x_squared(p);
  std::ostringstream out;
  if (o.header) {
    out << "i\tchi_minus\tchi_plus\tmu_minus\tmu_plus\tvar_minus\tvar_plus";
    if (o.weights) out << "\tweights_min\tweights_max";
    if (o.errata) out << "\tprinted";
    out << "\n";
  }
  for (std::uint64_t i = 1; i <= o.n; ++i) {
    Graph g = build(p, i);
    SimpleGraph s = underlying(g.get());
    jaco_chroma_report r{};
    jaco_colouring* raw = nullptr;
    check(jaco_chroma_report_compute(s.get(), o.budget, &r, &raw));
    Colouring minimum(raw);

    out << i << '\t' << r.chi_minus << '\t' << r.chi_plus << '\t'
        << rational(r.mu_minus) << '\t' << rational(r.mu_plus) << '\t'
        << rational(r.var_minus) << '\t' << rational(r.var_plus);
    if (o.weights) {
      std::vector<std::uint64_t> w;
      for (std::uint32_t c = 1; c <= r.chi; ++c) {
        w.push_back(jaco_colouring_weight(minimum.get(), c));
      }
      out << '\t';
      for (std::size_t k = 0; k < w.size(); ++k) out << (k ? "," : "") << w[k];
      out << '\t';
      for (std::size_t k = 0; k < w.size(); ++k) {
        out << (k ? "," : "") << w[w.size() - 1 - k];
      }
    }
    if (o.errata) out << '\t' << (errata ? table3_errata(i, r) : "");
    out << '\n';
  }
  emit(out.str(), o.out);
  return kOk;
}

// -- verify ------------------------------------------------------------------

struct VerifyOptions {
  std::vector<std::string> f;
  std::uint64_t n = 200;
  std::uint64_t colouring_n = 12;
  std::vector<std::string> props;
  std::string out;
};

int cmd_verify(const VerifyOptions& o) {
  std::vector<jaco_poly> polys;
  for (const auto& text : o.f) polys.push_back(parse_poly(text));
  std::vector<const char*> props;
  for (const auto& id : o.props) props.push_back(id.c_str());

  jaco_verify_options opts;
  jaco_verify_options_init(&opts);
  opts.polys = polys.empty() ? nullptr : polys.data();
  opts.poly_count = polys.size();
  opts.max_order = o.n;
  opts.colouring_max_order = o.colouring_n;
  opts.properties = props.empty() ? nullptr : props.data();
  opts.property_count = props.size();

  jaco_verify_report* raw = nullptr;
  check(jaco_verify_run(&opts, &raw));
  VerifyReport report(raw);

  std::ostringstream out;
  const std::size_t count = jaco_verify_report_count(report.get());
  for (std::size_t k = 0; k < count; ++k) {
    jaco_property_result r{};
    check(jaco_verify_report_get(report.get(), k, &r));
    const char* verdict = r.failures == 0 ? "PASS" : (r.informational ? "NOTE" : "FAIL");
    out << verdict << '\t' << r.id << '\t' << (*r.alias ? r.alias : "-") << '\t'
        << "checked=" << r.checked << '\t' << "failures=" << r.failures;
    if (r.failures > 0) out << '\t' << r.first_failure;
    out << '\n';
  }
  const bool passed = jaco_verify_report_passed(report.get()) != 0;
  out << (passed ? "all properties hold" : "verification FAILED") << '\n';
  emit(out.str(), o.out);
  return passed ? kOk : kVerifyFailed;
}

// -- export ------------------------------------------------------------------

struct ExportOptions {
  std::string f = "x^2";
  std::uint64_t n = 1;
  std::string format = "json";
  bool arcs = false;
  std::string out;
};

int cmd_export(const ExportOptions& o) {
  const jaco_poly p = parse_poly(o.f);
  Graph g = build(p, o.n);
  std::string text;
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["incidence"] = {{"a", p.a}, {"b", p.b}, {"c", p.c}};
    doc["n"] = o.n;
    auto vertices = nlohmann::ordered_json::array();
    for (std::uint64_t i = 1; i <= o.n; ++i) {
      jaco_vertex v{};
      check(jaco_graph_vertex(g.get(), i, &v));
      vertices.push_back(
          {{"i", v.index}, {"in_degree", v.in_degree}, {"reach", v.reach}});
    }
    doc["vertices"] = std::move(vertices);
    if (o.arcs) {
      auto arcs = nlohmann::ordered_json::array();
      const auto pairs = pairs_of_graph_arcs(g.get());
      for (std::size_t k = 0; k + 1 < pairs.size(); k += 2) {
        arcs.push_back({pairs[k], pairs[k + 1]});
      }
      doc["arcs"] = std::move(arcs);
    }
    text = doc.dump(2) + "\n";
  } else if (o.format == "dot-directed") {
    text = dot(true, o.n, pairs_of_graph_arcs(g.get()));
  } else {
    SimpleGraph s = underlying(g.get());
    text = dot(false, o.n, pairs_of_edges(s.get()));
  }
  emit(text, o.out);
  return kOk;
}

// -- braided -----------------------------------------------------------------

struct BraidedOptions {
  std::vector<std::uint64_t> orders;
  std::vector<std::uint64_t> overlaps;
  std::uint64_t budget = 0;
  bool dot = false;
  bool erratum = false;
  bool header = false;
  std::string out;
};

int cmd_braided(const BraidedOptions& o) {
  if (o.orders.empty()) {
    throw Failure{JACO_ERR_INVALID_ARGUMENT, "--orders needs at least one block"};
  }
  for (std::size_t j = 0; j < o.overlaps.size(); ++j) {
    if (o.overlaps[j] == 0) {
      std::cerr << "warning: overlap " << j + 1
                << " is 0; blocks " << j + 1 << " and " << j + 2
                << " form a disjoint union, not a braid\n";
    }
  }
  jaco_simple_graph* raw = nullptr;
  check(jaco_simple_graph_braided(o.orders.data(), o.orders.size(),
                                  o.overlaps.empty() ? nullptr : o.overlaps.data(),
                                  &raw));
  SimpleGraph s(raw);
  jaco_chroma_report r{};
  check(jaco_chroma_report_compute(s.get(), o.budget, &r, nullptr));

  const bool two_block = o.orders.size() == 2;
  std::ostringstream out;
  if (o.header) {
    out << "vertices\tchi\tchi_minus\tchi_plus\tmu_minus\tmu_plus\tvar";
    if (o.erratum && two_block) out << "\tmu_max_closed\tmu_max_printed";
    out << '\n';
  }
  out << r.order << '\t' << r.chi << '\t' << r.chi_minus << '\t' << r.chi_plus
      << '\t' << rational(r.mu_minus) << '\t' << rational(r.mu_plus) << '\t';
  if (same_value(r.var_minus, r.var_plus)) {
    out << rational(r.var_minus);
  } else {
    out << rational(r.var_minus) << ',' << rational(r.var_plus);
  }
  if (o.erratum && two_block) {
    jaco_rational fixed{}, printed{};
    check(jaco_braided_mu_max(o.orders[0], o.orders[1], o.overlaps[0], &fixed));
    check(jaco_braided_mu_max_published(o.orders[0], o.orders[1], o.overlaps[0],
                                        &printed));
    out << '\t' << rational(fixed) << '\t' << rational(printed);
  }
  out << '\n';
  if (o.dot) out << dot(false, r.order, pairs_of_edges(s.get()));
  emit(out.str(), o.out);
  return kOk;
}

// -- locate ------------------------------------------------------------------

struct LocateOptions {
  std::string f = "x^2";
  bool header = false;
  std::string out;
};

int cmd_locate(const LocateOptions& o) {
  const jaco_poly p = parse_poly(o.f);
  jaco_max_degree_location loc{};
  check(jaco_poly_locate_max_degree(p, &loc));
  std::ostringstream out;
  if (o.header) out << "order\tprime_vertex\tmax_degree\tprinted_order\n";
  out << loc.order << '\t' << loc.prime_vertex << '\t' << loc.max_degree << '\t'
      << loc.published_order << '\n';
  if (loc.order != loc.published_order) {
    std::cerr << "note: printed closed form gives k = " << loc.published_order
              << " for " << format_poly(p) << "; the smallest order reaching "
              << "max degree " << loc.max_degree << " is " << loc.order << '\n';
  }
  emit(out.str(), o.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jaco graph construction, invariants and chromatic sums"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(jaco_version()));

  Table1Options t1;
  auto* table1 = app.add_subcommand("table1", "structural invariants per order");
  table1->add_option("--f", t1.f, "incidence polynomial")->capture_default_str();
  table1->add_option("--n", t1.n, "largest order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  table1->add_flag("--header", t1.header, "emit a header line");
  table1->add_flag("--show-paper-errata", t1.errata,
                   "append printed values wherever they differ (f = x^2)");
  table1->add_option("--out", t1.out, "output path (default stdout)");

  Table3Options t3;
  auto* table3 = app.add_subcommand("table3", "chromatic sums, means and variances");
  table3->add_option("--f", t3.f, "incidence polynomial")->capture_default_str();
  table3->add_option("--n", t3.n, "largest order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  table3->add_option("--budget", t3.budget, "search node budget (0 = default)");
  table3->add_flag("--weights", t3.weights,
                   "append minimum and maximum colour weight vectors");
  table3->add_flag("--header", t3.header, "emit a header line");
  table3->add_flag("--show-paper-errata", t3.errata,
                   "append printed values wherever they differ (f = x^2)");
  table3->add_option("--out", t3.out, "output path (default stdout)");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "check properties over a polynomial grid");
  verify->add_option("--f", vo.f, "polynomial(s); default grid when absent");
  verify->add_option("--n", vo.n, "largest order for structural properties")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--colouring-n", vo.colouring_n,
                     "largest order for colouring oracles")
      ->capture_default_str();
  verify->add_option("--prop", vo.props, "property id or numeric alias");
  verify->add_option("--out", vo.out, "output path (default stdout)");

  ExportOptions eo;
  auto* exporter = app.add_subcommand("export", "serialize a graph");
  exporter->add_option("--f", eo.f, "incidence polynomial")->capture_default_str();
  exporter->add_option("--n", eo.n, "order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  exporter->add_option("--format", eo.format, "json | dot-directed | dot-underlying")
      ->check(CLI::IsMember({"json", "dot-directed", "dot-underlying"}))
      ->capture_default_str();
  exporter->add_flag("--arcs", eo.arcs, "include the arc list in JSON output");
  exporter->add_option("--out", eo.out, "output path (default stdout)");

  BraidedOptions bo;
  auto* braided = app.add_subcommand("braided", "chromatic sums of braided cliques");
  braided->add_option("--orders", bo.orders, "clique orders, comma separated")
      ->delimiter(',')
      ->required();
  braided->add_option("--overlaps", bo.overlaps, "overlaps between neighbours")
      ->delimiter(',');
  braided->add_option("--budget", bo.budget, "search node budget (0 = default)");
  braided->add_flag("--dot", bo.dot, "append the realized graph as DOT");
  braided->add_flag("--erratum", bo.erratum,
                    "append corrected and printed maximum-mean closed forms");
  braided->add_flag("--header", bo.header, "emit a header line");
  braided->add_option("--out", bo.out, "output path (default stdout)");

  LocateOptions lo;
  auto* locate = app.add_subcommand("locate", "smallest order attaining max degree f(f(1))");
  locate->add_option("--f", lo.f, "quadratic incidence polynomial")->capture_default_str();
  locate->add_flag("--header", lo.header, "emit a header line");
  locate->add_option("--out", lo.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*table1) return cmd_table1(t1);
    if (*table3) return cmd_table3(t3);
    if (*verify) return cmd_verify(vo);
    if (*exporter) return cmd_export(eo);
    if (*braided) return cmd_braided(bo);
    if (*locate) return cmd_locate(lo);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return exit_code_for(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
