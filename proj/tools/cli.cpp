#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "specmoore/bounds.hpp"
#include "specmoore/errors.hpp"
#include "specmoore/graphs.hpp"
#include "specmoore/lp.hpp"
#include "specmoore/quotient.hpp"
#include "specmoore/rational.hpp"
#include "specmoore/table1.hpp"

namespace specmoore::cli {

namespace {

using nlohmann::json;

struct TableView {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Envelope {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  TableView table;
  std::vector<std::string> notes;
  int exit_code = 0;
};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void render_text(const Envelope& e, std::ostream& out) {
  std::vector<std::size_t> width(e.table.columns.size(), 0);
  for (std::size_t i = 0; i < e.table.columns.size(); ++i) {
    width[i] = e.table.columns[i].size();
  }
  for (const auto& row : e.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  auto print_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
    }
    out << '\n';
  };
  print_row(e.table.columns);
  for (const auto& row : e.table.rows) print_row(row);
  for (const auto& note : e.notes) out << "note: " << note << '\n';
}

void render_csv(const Envelope& e, std::ostream& out) {
  auto print_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  };
  print_row(e.table.columns);
  for (const auto& row : e.table.rows) print_row(row);
}

void render(const Envelope& e, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json envelope;
    envelope["command"] = e.command;
    envelope["inputs"] = e.inputs;
    envelope["result"] = e.result;
    if (!e.notes.empty()) envelope["notes"] = e.notes;
    out << envelope.dump(2) << '\n';
  } else if (format == "csv") {
    render_csv(e, out);
  } else {
    render_text(e, out);
  }
}

double root_tolerance() {
  if (const char* env = std::getenv("SPECTRAL_MOORE_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
    fail(ErrorKind::ParseError, "SPECTRAL_MOORE_TOL must be a positive number");
  }
  return kDefaultRootTol;
}

json bound_to_json(const BoundResult& b) {
  json out;
  out["r"] = b.r;
  out["theta"] = b.theta;
  out["kind"] = b.kind == QuotientKind::General ? "general" : "bipartite";
  out["t"] = b.t;
  out["c"] = b.c;
  if (b.c_rational) out["c_exact"] = b.c_rational->str();
  out["bound"] = b.bound;
  if (b.floor_exact) out["floor"] = b.floor_bound;
  out["capped"] = b.capped;
  out["regime_note"] = b.regime_note;
  return out;
}

Envelope make_bound_envelope(const char* command, const std::string& theta_text,
                             const BoundResult& b) {
  Envelope e;
  e.command = command;
  e.inputs = {{"r", b.r}, {"theta", theta_text}};
  e.result = bound_to_json(b);
  e.table.columns = {"r", "theta", "t", "c", "bound", "floor"};
  e.table.rows = {{std::to_string(b.r), fmt_double(b.theta), std::to_string(b.t),
                   b.c_rational ? b.c_rational->str() : fmt_double(b.c),
                   fmt_double(b.bound),
                   b.floor_exact ? std::to_string(b.floor_bound) : "overflow"}};
  e.notes.push_back(b.regime_note);
  return e;
}

// ---- table1 reference override ------------------------------------------

std::vector<Table1Reference> g_data_rows;       // backing store for --data
std::vector<std::string> g_data_strings;        // keeps the c_str()s alive

const std::vector<Table1Reference>& active_table1(const std::string& data_path) {
  if (data_path.empty()) return table1_reference();
  std::ifstream in(data_path);
  if (!in) fail(ErrorKind::IoError, "cannot open data file: " + data_path);
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& ex) {
    fail(ErrorKind::ParseError, std::string("bad data file: ") + ex.what());
  }
  g_data_rows.clear();
  g_data_strings.clear();
  g_data_strings.reserve(doc.at("rows").size() * 4);
  auto keep = [](const std::string& s) {
    g_data_strings.push_back(s);
    return g_data_strings.back().c_str();
  };
  for (const auto& row : doc.at("rows")) {
    Table1Reference ref{};
    ref.r = row.at("r").get<int>();
    ref.d = row.at("d").get<int>();
    ref.known = row.at("known").get<std::int64_t>();
    ref.defect = row.at("defect").get<std::int64_t>();
    ref.lower = keep(row.at("lower").get<std::string>());
    ref.moore = keep(row.at("moore").get<std::string>());
    ref.upper = keep(row.at("upper").get<std::string>());
    ref.upper_erratum = row.value("upper_erratum", false);
    ref.upper_corrected = keep(row.value("upper_corrected", std::string()));
    g_data_rows.push_back(ref);
  }
  return g_data_rows;
}

// ---- command handlers -----------------------------------------------------

Envelope cmd_moore(int r, int d) {
  std::int64_t m = moore_bound(r, d);
  Envelope e;
  e.command = "moore";
  e.inputs = {{"r", r}, {"d", d}};
  e.result = {{"moore_bound", m}};
  e.table.columns = {"r", "d", "moore_bound"};
  e.table.rows = {{std::to_string(r), std::to_string(d), std::to_string(m)}};
  return e;
}

Envelope cmd_window(int r, int d, std::optional<std::int64_t> known,
                    const std::string& data_path) {
  if (!known) {
    const Table1Reference* ref = nullptr;
    for (const auto& row : active_table1(data_path)) {
      if (row.r == r && row.d == d) ref = &row;
    }
    if (!ref) {
      fail(ErrorKind::InvalidArgument,
           "no tabulated known order for (r=" + std::to_string(r) + ", D=" +
               std::to_string(d) + "); pass --known");
    }
    known = ref->known;
  }
  DefectWindow w = search_window(r, d, *known, root_tolerance());
  Envelope e;
  e.command = "window";
  e.inputs = {{"r", r}, {"d", d}, {"known", *known}};
  e.result = {{"r", w.r},
              {"d", w.d},
              {"known", w.known_order},
              {"moore_bound", w.moore},
              {"defect", w.defect},
              {"lower", w.lower_threshold},
              {"moore", w.lambda_d},
              {"upper", w.beta_threshold}};
  e.table.columns = {"r", "d", "known", "defect", "lower", "moore", "upper"};
  e.table.rows = {{std::to_string(r), std::to_string(d), std::to_string(*known),
                   std::to_string(w.defect), format_5dp(w.lower_threshold),
                   format_5dp(w.lambda_d), format_5dp(w.beta_threshold)}};
  e.notes.push_back("second eigenvalue of a larger graph must exceed 'lower'; "
                    "its beta = max(|lambda2|, |lambda_n|) must stay below 'upper'");
  return e;
}

Envelope cmd_table1(const std::string& data_path) {
  Envelope e;
  e.command = "table1";
  e.inputs = json::object();
  e.table.columns = {"(r,D)",  "Known", "Defect", "Lower",
                     "Moore",  "Upper", "status"};
  json rows = json::array();
  bool all_match = true;
  for (const auto& ref : active_table1(data_path)) {
    Table1Computed row = compute_table1_row(ref);
    bool match = row.lower_match && row.moore_match && row.upper_match;
    all_match &= match;
    std::string status = match ? "ok" : "MISMATCH";
    if (ref.upper_erratum) status += " (upper cell: reference erratum, see notes)";
    e.table.rows.push_back({"(" + std::to_string(row.r) + "," + std::to_string(row.d) + ")",
                            std::to_string(row.known), std::to_string(row.defect),
                            row.lower_str, row.moore_str, row.upper_str, status});
    rows.push_back({{"r", row.r},
                    {"d", row.d},
                    {"known", row.known},
                    {"defect", row.defect},
                    {"lower", row.lower_str},
                    {"moore", row.moore_str},
                    {"upper", row.upper_str},
                    {"match", match}});
  }
  e.result = {{"rows", rows}, {"all_match", all_match}};
  for (const auto& ref : active_table1(data_path)) {
    if (ref.upper_erratum) {
      e.notes.push_back(
          "(" + std::to_string(ref.r) + "," + std::to_string(ref.d) +
          ") upper: the reference prints " + ref.upper +
          ", which is inconsistent with its defining equation G_D(x) = defect; "
          "the expected value used here is " + ref.upper_corrected);
    }
  }
  e.exit_code = all_match ? 0 : 1;
  return e;
}

json spectrum_to_json(const LabeledGraph& g, const SpectrumSummary& s) {
  json eig = json::array();
  for (const auto& group : s.eigenvalues) {
    eig.push_back({{"value", group.value}, {"mult", group.multiplicity}});
  }
  return {{"name", g.name()}, {"n", g.order()}, {"r", g.regular_degree()},
          {"eigenvalues", eig}};
}

LabeledGraph load_graph(const std::string& name, const std::string& file) {
  if (!name.empty() && !file.empty()) {
    fail(ErrorKind::InvalidArgument, "pass either --name or --file, not both");
  }
  if (!name.empty()) return build_named(name);
  if (file.empty()) fail(ErrorKind::InvalidArgument, "pass --name or --file");
  std::ifstream in(file);
  if (!in) fail(ErrorKind::IoError, "cannot open graph file: " + file);
  return read_edge_list(in, file);
}

Envelope cmd_graph_spectrum(const LabeledGraph& g) {
  SpectrumSummary s = g.cached_spectrum();
  Envelope e;
  e.command = "graph spectrum";
  e.inputs = {{"graph", g.name()}};
  e.result = spectrum_to_json(g, s);
  e.table.columns = {"value", "mult"};
  for (const auto& group : s.eigenvalues) {
    e.table.rows.push_back({fmt_double(group.value), std::to_string(group.multiplicity)});
  }
  return e;
}

Envelope cmd_graph_nbwalks(const LabeledGraph& g, int len) {
  WalkCountTable t = non_backtracking_counts(g, len);
  Envelope e;
  e.command = "graph nbwalks";
  e.inputs = {{"graph", g.name()}, {"len", len}};
  json rows = json::array();
  e.table.columns.clear();
  for (int v = 0; v < t.n; ++v) e.table.columns.push_back("v" + std::to_string(v));
  for (int u = 0; u < t.n; ++u) {
    json row = json::array();
    std::vector<std::string> cells;
    for (int v = 0; v < t.n; ++v) {
      row.push_back(t.at(u, v));
      cells.push_back(std::to_string(t.at(u, v)));
    }
    rows.push_back(row);
    e.table.rows.push_back(cells);
  }
  e.result = {{"name", g.name()}, {"n", t.n}, {"len", len}, {"counts", rows}};
  return e;
}

Envelope cmd_graph_check(const LabeledGraph& g, const std::string& kind_text) {
  QuotientKind kind;
  if (kind_text == "general") {
    kind = QuotientKind::General;
  } else if (kind_text == "bipartite") {
    kind = QuotientKind::Bipartite;
  } else {
    fail(ErrorKind::InvalidArgument, "--kind must be general or bipartite");
  }
  WitnessReport w = check_witness(g, kind);
  Envelope e;
  e.command = "graph check";
  e.inputs = {{"graph", g.name()}, {"kind", kind_text}};
  e.result = {{"name", w.graph_name}, {"order", w.order},    {"r", w.r},
              {"lambda2", w.lambda2}, {"bound", bound_to_json(w.bound)},
              {"slack", w.slack},     {"extremal", w.extremal}};
  e.table.columns = {"graph", "order", "r", "lambda2", "bound_floor", "slack", "extremal"};
  e.table.rows = {{w.graph_name, std::to_string(w.order), std::to_string(w.r),
                   fmt_double(w.lambda2),
                   w.bound.floor_exact ? std::to_string(w.bound.floor_bound) : "overflow",
                   std::to_string(w.slack), w.extremal ? "yes" : "no"}};
  e.notes.push_back(w.bound.regime_note);
  return e;
}

Envelope cmd_graph_metrics(const LabeledGraph& g) {
  GraphMetrics m = diameter_and_girth(g);
  Envelope e;
  e.command = "graph metrics";
  e.inputs = {{"graph", g.name()}};
  e.result = {{"name", g.name()},
              {"n", g.order()},
              {"edges", g.edge_count()},
              {"diameter", m.diameter},
              {"girth", m.girth},
              {"connected", g.is_connected()},
              {"bipartite", g.bipartition().has_value()}};
  e.table.columns = {"graph", "n", "edges", "diameter", "girth", "bipartite"};
  e.table.rows = {{g.name(), std::to_string(g.order()), std::to_string(g.edge_count()),
                   std::to_string(m.diameter), std::to_string(m.girth),
                   g.bipartition() ? "yes" : "no"}};
  return e;
}

std::vector<double> load_certificate_file(const std::string& path, int r,
                                          bool bipartite) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot open certificate file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& ex) {
    fail(ErrorKind::ParseError, std::string("bad certificate file: ") + ex.what());
  }
  std::string basis = doc.value("basis", "f");
  std::vector<double> coeffs;
  for (const auto& v : doc.at("coeffs")) coeffs.push_back(v.get<double>());
  if (coeffs.empty()) fail(ErrorKind::ParseError, "certificate has no coefficients");
  if (basis == "f" || basis == "fbasis") {
    return coeffs;
  }
  if (basis == "monomial") {
    if (bipartite) return to_calF0_basis(r, coeffs);
    return to_f_basis(r, coeffs).coeffs;
  }
  fail(ErrorKind::ParseError, "certificate basis must be 'f' or 'monomial'");
}

json report_to_json(const CertificateReport& rep) {
  json conditions = json::array();
  for (const auto& c : rep.conditions) {
    conditions.push_back({{"name", c.name}, {"satisfied", c.satisfied},
                          {"witness", c.witness}});
  }
  return {{"conditions", conditions}, {"applicable", rep.applicable},
          {"bound", rep.bound}};
}

Envelope cmd_certify(int r, int t, const std::string& c_text, bool bipartite,
                     const std::string& f_path) {
  double c = parse_real_expr(c_text);
  QuotientSpec spec;
  spec.r = r;
  spec.t = t;
  spec.c = c;
  spec.c_exact = parse_rational(c_text);
  spec.kind = bipartite ? QuotientKind::Bipartite : QuotientKind::General;

  CertificateReport rep;
  std::vector<double> coeffs;
  if (bipartite) {
    if (f_path.empty()) {
      fail(ErrorKind::InvalidArgument,
           "--bipartite needs --f: bipartite certificates are verified, not "
           "constructed");
    }
    coeffs = load_certificate_file(f_path, r, true);
    std::vector<double> squared;
    for (double v : spectrum(spec).distinct_values()) {
      double y = v * v;
      bool dup = false;
      for (double s : squared) dup |= std::abs(s - y) <= 1e-9;
      if (!dup) squared.push_back(y);
    }
    std::sort(squared.begin(), squared.end(), std::greater<double>());
    rep = verify_bipartite_lp(r, coeffs, squared);
  } else {
    FBasisPolynomial f;
    if (f_path.empty()) {
      f = theorem5_certificate(r, t, c);
    } else {
      f = FBasisPolynomial{r, load_certificate_file(f_path, r, false)};
    }
    coeffs = f.coeffs;
    rep = verify_general_lp(f, spectrum(spec).distinct_values());
  }

  Envelope e;
  e.command = "certify";
  e.inputs = {{"r", r}, {"t", t}, {"c", c_text},
              {"bipartite", bipartite}, {"f", f_path}};
  e.result = report_to_json(rep);
  e.result["coeffs"] = coeffs;
  e.table.columns = {"condition", "satisfied", "witness"};
  for (const auto& cond : rep.conditions) {
    e.table.rows.push_back({cond.name, cond.satisfied ? "yes" : "no",
                            fmt_double(cond.witness)});
  }
  e.table.rows.push_back({"bound", rep.applicable ? "applicable" : "not applicable",
                          fmt_double(rep.bound)});
  return e;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
      return 2;
    case ErrorKind::ThetaOutOfRange:
      return 3;
    case ErrorKind::UnknownName:
    case ErrorKind::NotConnected:
    case ErrorKind::NonRegular:
    case ErrorKind::NotBipartite:
    case ErrorKind::NotApplicable:
    case ErrorKind::TooLarge:
    case ErrorKind::IoError:
      return 5;
    default:
      return 4;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"spectral Moore bounds: eigenvalue-constrained order bounds for "
               "regular graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--data may follow the subcommand

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  std::string data_path;
  app.add_option("--data", data_path,
                 "JSON file overriding the built-in reference table");

  int r = 3, d = 2, t = 3, len = 1;
  std::string theta_text, c_text = "1", kind_text = "general";
  std::string graph_name, graph_file, f_path;
  std::optional<std::int64_t> known;

  CLI::App* moore = app.add_subcommand("moore", "Moore bound m_{r,D}");
  moore->add_option("--r", r, "valency")->required();
  moore->add_option("--d", d, "diameter")->required();

  CLI::App* vbound = app.add_subcommand(
      "vbound", "max order of an r-regular graph with lambda2 <= theta");
  vbound->add_option("--r", r, "valency")->required();
  vbound->add_option("--theta", theta_text, "decimal, p/q or sqrt(k)")->required();

  CLI::App* bbound = app.add_subcommand(
      "bbound", "bipartite version of vbound");
  bbound->add_option("--r", r, "valency")->required();
  bbound->add_option("--theta", theta_text, "decimal, p/q or sqrt(k)")->required();

  CLI::App* window = app.add_subcommand(
      "window", "eigenvalue window for beating the best known (r,D) graph");
  window->add_option("--r", r, "valency")->required();
  window->add_option("--d", d, "diameter")->required();
  std::int64_t known_raw = -1;
  CLI::Option* known_opt =
      window->add_option("--known", known_raw, "known order (defaults from the reference table)");

  CLI::App* table1 = app.add_subcommand(
      "table1", "recompute the full reference table and diff it");

  CLI::App* graph = app.add_subcommand("graph", "graph laboratory");
  graph->add_option("--name", graph_name, "named construction");
  graph->add_option("--file", graph_file, "edge list file ('n m' header)");
  graph->require_subcommand(1);
  CLI::App* g_spectrum = graph->add_subcommand("spectrum", "eigenvalues with multiplicities");
  CLI::App* g_nbwalks = graph->add_subcommand("nbwalks", "non-backtracking walk counts");
  g_nbwalks->add_option("--len", len, "walk length")->required();
  CLI::App* g_check = graph->add_subcommand("check", "compare order against the spectral bound");
  g_check->add_option("--kind", kind_text, "general|bipartite")->required();
  CLI::App* g_metrics = graph->add_subcommand("metrics", "diameter, girth, bipartiteness");

  CLI::App* certify = app.add_subcommand(
      "certify", "build/verify an LP certificate for a quotient regime");
  certify->add_option("--r", r, "valency")->required();
  certify->add_option("--t", t, "quotient size")->required();
  certify->add_option("--c", c_text, "last-row parameter (decimal or p/q)");
  bool bipartite_flag = false;
  certify->add_flag("--bipartite", bipartite_flag, "verify a bipartite certificate");
  certify->add_option("--f", f_path, "certificate coefficient file (JSON)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help goes to stdout with success
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    Envelope envelope;
    if (*moore) {
      envelope = cmd_moore(r, d);
    } else if (*vbound) {
      envelope = make_bound_envelope("vbound", theta_text,
                                     v_upper(r, parse_real_expr(theta_text),
                                             root_tolerance()));
    } else if (*bbound) {
      envelope = make_bound_envelope("bbound", theta_text,
                                     b_upper(r, parse_real_expr(theta_text),
                                             root_tolerance()));
    } else if (*window) {
      if (known_opt->count() > 0) known = known_raw;
      envelope = cmd_window(r, d, known, data_path);
    } else if (*table1) {
      envelope = cmd_table1(data_path);
    } else if (*graph) {
      LabeledGraph g = load_graph(graph_name, graph_file);
      if (*g_spectrum) {
        envelope = cmd_graph_spectrum(g);
      } else if (*g_nbwalks) {
        envelope = cmd_graph_nbwalks(g, len);
      } else if (*g_check) {
        envelope = cmd_graph_check(g, kind_text);
      } else if (*g_metrics) {
        envelope = cmd_graph_metrics(g);
      }
    } else if (*certify) {
      envelope = cmd_certify(r, t, c_text, bipartite_flag, f_path);
    }
    render(envelope, format, out);
    return envelope.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace specmoore::cli
