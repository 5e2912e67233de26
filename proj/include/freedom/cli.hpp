#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "freedom/assignment.hpp"
#include "freedom/crosstab.hpp"

namespace freedom::cli {

enum class ExitCode : int { ok = 0, domain = 1, io = 2, usage = 3 };

enum class Format { json, csv };

struct RunConfig {
  std::string command;  // validate, measure, verify, subsets, sensitivity, crosstab, region
  std::string input_path;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  std::optional<double> q;
  std::optional<std::size_t> index;  // one-based, as on the command line
  double delta = 0.05;
  std::optional<double> eps;
  Format format = Format::json;
  bool force_cap = false;
};

/// Parses `{"options": [{"name": str, "ne": number, "po": number}, ...]}`
/// and validates it. Throws Error(ParseError) with line or field context.
IntervalAssignment parse_assignment(std::string_view text);

/// Parses `{"rows": [...], "cols": [...], "joint": [[...], ...]}` with
/// marginal entries shaped like assignment options; "joint" is optional.
CrossTable parse_crosstable(std::string_view text);

/// Rounds to 12 significant digits, the precision of every emitted number.
double report_number(double v);

/// Runs one command, writing the report to `out` and diagnostics to `err`.
ExitCode run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace freedom::cli
