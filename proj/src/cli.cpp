#include "freedom/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "freedom/error.hpp"
#include "freedom/measures.hpp"
#include "freedom/oracle.hpp"
#include "freedom/sensitivity.hpp"

namespace freedom::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kAgreementSigmas = 4.0;

[[noreturn]] void parse_fail(std::string message) {
  throw Error(ErrorKind::ParseError, std::move(message));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Convert the byte offset into a line/column pair.
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    parse_fail("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }
}

double number_field(const Json& entry, const char* field, const std::string& where) {
  if (!entry.contains(field)) parse_fail(where + ": missing field \"" + field + "\"");
  const Json& v = entry.at(field);
  if (!v.is_number()) parse_fail(where + "." + field + ": expected a number");
  return v.get<double>();
}

struct Margin {
  std::vector<double> ne, po;
  std::vector<std::string> labels;
};

Margin read_entries(const Json& root, const char* key) {
  if (!root.is_object()) parse_fail("top level must be a JSON object");
  if (!root.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  const Json& list = root.at(key);
  if (!list.is_array()) parse_fail(std::string("\"") + key + "\" must be an array");
  Margin m;
  bool named = false;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    const Json& entry = list[i];
    if (!entry.is_object()) parse_fail(where + ": expected an object");
    m.ne.push_back(number_field(entry, "ne", where));
    m.po.push_back(number_field(entry, "po", where));
    if (entry.contains("name")) {
      if (!entry.at("name").is_string()) parse_fail(where + ".name: expected a string");
      m.labels.push_back(entry.at("name").get<std::string>());
      named = true;
    } else {
      m.labels.push_back("opt" + std::to_string(i + 1));
    }
  }
  if (!named) m.labels.clear();
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// One table of rows sharing a fixed column order.
struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& out) const {
    auto line = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
      out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

std::string b(bool v) { return v ? "true" : "false"; }

Json options_json(const IntervalAssignment& a) {
  Json list = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    list.push_back({{"name", a.label(i)},
                    {"ne", report_number(a.ne(i))},
                    {"po", report_number(a.po(i))}});
  }
  return list;
}

struct Report {
  Json results = Json::object();
  Csv csv;
  bool sampled = false;
  ExitCode code = ExitCode::ok;
};

FreedomOptions freedom_options(const RunConfig& c) { return {.max_options = 24, .force = c.force_cap}; }

std::size_t zero_based_index(const RunConfig& c, const IntervalAssignment& a) {
  const std::size_t k = *c.index;
  if (k < 1 || k > a.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(k) + " outside 1.." + std::to_string(a.size()));
  }
  return k - 1;
}

bool agrees(double expected, const MCEstimate& est, double scale) {
  // Standard error under the closed-form value as well, so a zero-hit
  // estimate of a tiny volume is not held to a zero tolerance.
  const double p = scale > 0.0 ? std::clamp(expected / scale, 0.0, 1.0) : 0.0;
  const double null_se = scale * std::sqrt(p * (1.0 - p) / static_cast<double>(est.samples));
  return std::abs(expected - est.mean) <= kAgreementSigmas * std::max(est.std_error, null_se);
}

Report cmd_validate(const IntervalAssignment& a) {
  Report r;
  const IntervalAssignment t = tighten(a);
  const auto cls = classify(a);
  r.results = {{"valid", true},
               {"m", a.size()},
               {"class", to_string(cls)},
               {"options", options_json(a)},
               {"tightened", options_json(t)}};
  r.csv.header = {"name", "ne", "po", "tight_ne", "tight_po", "class"};
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.csv.rows.push_back({a.label(i), csv_number(a.ne(i)), csv_number(a.po(i)),
                          csv_number(t.ne(i)), csv_number(t.po(i)), std::string(to_string(cls))});
  }
  return r;
}

Report cmd_measure(const IntervalAssignment& a, const RunConfig& c) {
  Report r;
  const auto m = measure_report(a, freedom_options(c));
  r.results = {{"freedom", report_number(m.freedom)},
               {"yager_ambiguity", report_number(m.yager_ambiguity)},
               {"hartley_nonspecificity", report_number(m.hartley_nonspecificity)},
               {"normed_freedom", report_number(m.normed_freedom)},
               {"m", m.m}};
  r.csv.header = {"freedom", "yager_ambiguity", "hartley_nonspecificity", "normed_freedom", "m"};
  std::vector<std::string> row = {csv_number(m.freedom), csv_number(m.yager_ambiguity),
                                  csv_number(m.hartley_nonspecificity),
                                  csv_number(m.normed_freedom), std::to_string(m.m)};
  if (c.q) {
    const double fq = freedom_conditional(a, *c.q, freedom_options(c));
    r.results["q"] = report_number(*c.q);
    r.results["unnormalized_conditional_freedom"] = report_number(fq);
    r.csv.header.insert(r.csv.header.end(), {"q", "unnormalized_conditional_freedom"});
    row.insert(row.end(), {csv_number(*c.q), csv_number(fq)});
  }
  r.csv.rows.push_back(std::move(row));
  return r;
}

Report cmd_verify(const IntervalAssignment& a, const RunConfig& c) {
  Report r;
  r.sampled = true;
  double closed = 0.0;
  double scale = 1.0;
  MCEstimate est;
  if (c.q) {
    closed = freedom_conditional(a, *c.q, freedom_options(c));
    scale = std::pow(*c.q, static_cast<double>(a.size() - 1));
    est = mc_freedom_conditional(a, *c.q, c.samples, c.seed);
  } else {
    closed = freedom(a, freedom_options(c));
    est = mc_freedom(a, c.samples, c.seed);
  }
  const bool ok = agrees(closed, est, scale);
  r.results = {{"closed_form", report_number(closed)},
               {"mc_mean", report_number(est.mean)},
               {"std_error", report_number(est.std_error)},
               {"accepted", est.accepted},
               {"agrees_within_4se", ok}};
  if (c.q) r.results["q"] = report_number(*c.q);
  r.csv.header = {"closed_form", "mc_mean", "std_error", "samples", "accepted", "seed",
                  "agrees_within_4se"};
  std::vector<std::string> row = {csv_number(closed), csv_number(est.mean),
                                  csv_number(est.std_error), std::to_string(est.samples),
                                  std::to_string(est.accepted), std::to_string(est.seed), b(ok)};
  if (a.size() == 3 && !c.q) {
    const double area = region_polygon(a).area_fraction;
    r.results["polygon_area_fraction"] = report_number(area);
    r.csv.header.push_back("polygon_area_fraction");
    row.push_back(csv_number(area));
  }
  r.csv.rows.push_back(std::move(row));
  if (!ok) r.code = ExitCode::domain;
  return r;
}

Report cmd_subsets(const IntervalAssignment& a, const RunConfig& c) {
  Report r;
  const SubsetScan scan = subset_scan(a, freedom_options(c));
  Json entries = Json::array();
  r.csv.header = {"options", "q", "unnormalized_conditional_freedom"};
  for (const auto& e : scan.entries) {
    Json names = Json::array();
    std::string joined;
    for (std::size_t i : e.options) {
      names.push_back(a.label(i));
      joined += (joined.empty() ? "" : "|") + a.label(i);
    }
    entries.push_back({{"options", names},
                       {"q", report_number(e.q)},
                       {"unnormalized_conditional_freedom", report_number(e.conditional_freedom)}});
    r.csv.rows.push_back({joined, csv_number(e.q), csv_number(e.conditional_freedom)});
  }
  r.results = {{"entries", entries}, {"omitted", scan.omitted}};
  return r;
}

Report cmd_sensitivity(const IntervalAssignment& a, const RunConfig& c) {
  Report r;
  std::vector<std::size_t> indices;
  if (c.index) {
    indices.push_back(zero_based_index(c, a));
  } else {
    for (std::size_t k = 0; k < a.size(); ++k) {
      const bool vacuous = a.ne(k) <= kTolerance && a.po(k) >= 1.0 - kTolerance;
      if (!c.eps || vacuous) indices.push_back(k);
    }
  }
  Json reports = Json::array();
  r.csv.header = {"index",        "delta",         "loss_from_po", "loss_from_ne",
                  "condition_holds", "balance_holds", "verdict"};
  for (std::size_t k : indices) {
    const SensitivityReport s = c.eps ? imposition_compare(a, k, *c.eps, freedom_options(c))
                                      : impact_compare(a, k, c.delta, freedom_options(c));
    reports.push_back({{"index", k + 1},
                       {"delta", report_number(s.delta)},
                       {"loss_from_po", report_number(s.loss_from_po)},
                       {"loss_from_ne", report_number(s.loss_from_ne)},
                       {"condition_holds", s.condition_holds},
                       {"balance_holds", s.balance_holds},
                       {"verdict", to_string(s.verdict)}});
    r.csv.rows.push_back({std::to_string(k + 1), csv_number(s.delta), csv_number(s.loss_from_po),
                          csv_number(s.loss_from_ne), b(s.condition_holds), b(s.balance_holds),
                          std::string(to_string(s.verdict))});
  }
  r.results = {{"mode", c.eps ? "imposition" : "impact"}, {"reports", reports}};
  return r;
}

Report cmd_crosstab(const CrossTable& t, const RunConfig& c, std::ostream& err) {
  Report r;
  const auto& rows = t.rows();
  const auto& cols = t.cols();
  Json cells = Json::array();
  std::size_t case2 = 0;
  r.csv.header = {"row",      "col",      "case",     "d_maximizing", "ne_lower",
                  "ne_upper", "po_lower", "po_upper", "dependency"};
  for (std::size_t i = 0; i < t.row_count(); ++i) {
    for (std::size_t j = 0; j < t.col_count(); ++j) {
      const CellBounds bounds = cell_bounds(rows.ne(i), rows.po(i), cols.ne(j), cols.po(j));
      const CellCase cc = classify_cell(rows.ne(i), rows.po(i), cols.ne(j), cols.po(j));
      if (cc.tag == CaseTag::case2) ++case2;
      Json cell = {{"row", rows.label(i)},
                   {"col", cols.label(j)},
                   {"case", to_string(cc.tag)},
                   {"d_maximizing", cc.d_maximizing ? Json(*cc.d_maximizing) : Json(nullptr)},
                   {"ne_bounds", {report_number(bounds.ne_lower), report_number(bounds.ne_upper)}},
                   {"po_bounds", {report_number(bounds.po_lower), report_number(bounds.po_upper)}}};
      std::string dep_csv;
      if (t.joint()) {
        const Matrix& p = *t.joint();
        double row_sum = 0.0, col_sum = 0.0;
        for (double v : p[i]) row_sum += v;
        for (const auto& pr : p) col_sum += pr[j];
        try {
          const double d = dependency(p[i][j], row_sum, col_sum);
          cell["dependency"] = report_number(d);
          dep_csv = csv_number(d);
        } catch (const Error& e) {
          if (!e.has(ErrorKind::DegenerateCell)) throw;
          cell["dependency"] = nullptr;
        }
      }
      cells.push_back(std::move(cell));
      r.csv.rows.push_back({rows.label(i), cols.label(j), std::string(to_string(cc.tag)),
                            cc.d_maximizing ? std::to_string(*cc.d_maximizing) : "",
                            csv_number(bounds.ne_lower), csv_number(bounds.ne_upper),
                            csv_number(bounds.po_lower), csv_number(bounds.po_upper), dep_csv});
    }
  }
  Json census = Json::array();
  for (auto [i, j] : case1_census(t)) census.push_back({rows.label(i), cols.label(j)});

  r.results = {{"rows", t.row_count()}, {"cols", t.col_count()}};
  const FreedomOptions fo = freedom_options(c);
  r.results["row_freedom"] = t.row_count() >= 2 ? Json(report_number(freedom(rows, fo))) : Json(nullptr);
  r.results["col_freedom"] = t.col_count() >= 2 ? Json(report_number(freedom(cols, fo))) : Json(nullptr);
  r.results["cells"] = std::move(cells);
  r.results["case1_cells"] = std::move(census);
  r.results["case2_count"] = case2;

  if (t.joint()) {
    r.results["joint_freedom"] = nullptr;
  } else if (t.row_count() * t.col_count() > kMaxJointCells) {
    r.results["joint_freedom"] = nullptr;
    err << "warning: joint freedom skipped, " << t.row_count() * t.col_count()
        << " cells exceed the " << kMaxJointCells << "-cell limit\n";
  } else {
    r.sampled = true;
    const MCEstimate est = mc_joint_freedom(t, c.samples, c.seed);
    if (est.low_acceptance()) {
      err << "warning: LowAcceptance, only " << est.accepted
          << " joint samples accepted; the estimate is unreliable\n";
    }
    r.results["joint_freedom"] = {{"mean", report_number(est.mean)},
                                  {"std_error", report_number(est.std_error)},
                                  {"accepted", est.accepted},
                                  {"low_acceptance", est.low_acceptance()}};
  }
  return r;
}

Report cmd_region(const IntervalAssignment& a) {
  Report r;
  const RegionPolygon poly = region_polygon(a);
  Json vertices = Json::array();
  std::string flat;
  for (const auto& v : poly.vertices) {
    vertices.push_back({report_number(v[0]), report_number(v[1])});
    flat += (flat.empty() ? "" : ";") + csv_number(v[0]) + " " + csv_number(v[1]);
  }
  r.results = {{"vertices", vertices}, {"area_fraction", report_number(poly.area_fraction)}};
  r.csv.header = {"area_fraction", "vertex_count", "vertices"};
  r.csv.rows.push_back({csv_number(poly.area_fraction), std::to_string(poly.vertices.size()), flat});
  return r;
}

std::optional<std::string> usage_problem(const RunConfig& c) {
  static const std::vector<std::string> commands = {"validate", "measure",  "verify", "subsets",
                                                    "sensitivity", "crosstab", "region"};
  if (std::find(commands.begin(), commands.end(), c.command) == commands.end()) {
    return "unknown command \"" + c.command + "\"";
  }
  if (c.input_path.empty()) return "missing input file";
  if (c.samples == 0) return "--samples must be positive";
  if (c.q && !(*c.q > 0.0 && *c.q <= 1.0)) return "--q must lie in (0,1]";
  if (c.index && *c.index == 0) return "--index is one-based";
  if (!(c.delta >= 0.0 && c.delta <= 1.0)) return "--delta must lie in [0,1]";
  if (c.eps && !(*c.eps > 0.0 && *c.eps < 1.0)) return "--eps must lie in (0,1)";
  return std::nullopt;
}

}  // namespace

double report_number(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

IntervalAssignment parse_assignment(std::string_view text) {
  const Json root = parse_json(text);
  Margin m = read_entries(root, "options");
  return validate(m.ne, m.po, m.labels);
}

CrossTable parse_crosstable(std::string_view text) {
  const Json root = parse_json(text);
  Margin rows = read_entries(root, "rows");
  Margin cols = read_entries(root, "cols");
  std::optional<Matrix> joint;
  if (root.contains("joint") && !root.at("joint").is_null()) {
    const Json& jt = root.at("joint");
    if (!jt.is_array()) parse_fail("\"joint\" must be an array of rows");
    Matrix p;
    for (std::size_t i = 0; i < jt.size(); ++i) {
      const Json& row = jt[i];
      const std::string where = "joint[" + std::to_string(i) + "]";
      if (!row.is_array()) parse_fail(where + ": expected an array");
      std::vector<double> values;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!row[j].is_number()) {
          parse_fail(where + "[" + std::to_string(j) + "]: expected a number");
        }
        values.push_back(row[j].get<double>());
      }
      p.push_back(std::move(values));
    }
    joint = std::move(p);
  }
  return CrossTable(validate_margin(rows.ne, rows.po, rows.labels),
                    validate_margin(cols.ne, cols.po, cols.labels), std::move(joint));
}

ExitCode run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (auto problem = usage_problem(config)) {
    err << "usage error: " << *problem << '\n';
    return ExitCode::usage;
  }
  try {
    const std::string text = read_file(config.input_path);
    Report report;
    if (config.command == "crosstab") {
      report = cmd_crosstab(parse_crosstable(text), config, err);
    } else {
      const IntervalAssignment a = parse_assignment(text);
      if (config.command == "validate") report = cmd_validate(a);
      else if (config.command == "measure") report = cmd_measure(a, config);
      else if (config.command == "verify") report = cmd_verify(a, config);
      else if (config.command == "subsets") report = cmd_subsets(a, config);
      else if (config.command == "sensitivity") report = cmd_sensitivity(a, config);
      else report = cmd_region(a);
    }

    if (config.format == Format::csv) {
      report.csv.write(out);
    } else {
      Json doc = {{"command", config.command},
                  {"input", config.input_path},
                  {"results", std::move(report.results)},
                  {"seed", report.sampled ? Json(config.seed) : Json(nullptr)},
                  {"samples", report.sampled ? Json(config.samples) : Json(nullptr)}};
      out << doc.dump(2) << '\n';
    }
    if (report.code != ExitCode::ok) {
      err << "error: closed form and Monte-Carlo estimate disagree beyond 4 standard errors\n";
    }
    return report.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const bool io = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::IoError;
    return io ? ExitCode::io : ExitCode::domain;
  }
}

}  // namespace freedom::cli
