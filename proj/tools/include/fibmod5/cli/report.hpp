#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fibmod5/cli/config.hpp"
#include "fibmod5/identity_catalog.hpp"
#include "fibmod5/numeric_verify.hpp"
#include "fibmod5/series.hpp"

namespace fibmod5::cli {

/// The parts of a RunConfig that determine results. Output format and
/// worker count are left out so that reports do not depend on them.
struct RunSummary {
  std::vector<std::string> selectors;
  IntRange n_range;
  IntRange t_range;
  std::vector<GibonacciParams> seeds;
  Index terms = 0;
  std::vector<Index> series_m;
  std::string series_tol;
  std::optional<std::string> numeric_tol;

  static RunSummary of(const RunConfig& config);
  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

/// A NumericCheck with every real written as a decimal string.
struct NumericRecord {
  std::string check_id;
  Index n = 0;
  std::optional<Index> t;
  std::optional<std::string> x;
  std::string lhs;
  std::string rhs;
  std::string abs_error;
  std::string tol;
  bool pass = false;
  bool skipped = false;
  std::string skip_reason;

  static NumericRecord of(const NumericCheck& check);
  friend bool operator==(const NumericRecord&, const NumericRecord&) = default;
};

struct SeriesRecord {
  std::string id;
  std::optional<Index> m;
  Index terms = 0;
  std::string tol;
  std::string expected_label;
  std::string partial_sum;
  std::string expected;
  std::string error;
  std::string tail_bound;
  bool pass = false;
  std::optional<std::string> corrected_error;
  bool corrected_pass = false;
  bool resolved = false;
  std::string diagnostic;  // set when the term count could not decide

  static SeriesRecord of(const SeriesResult& result);
  friend bool operator==(const SeriesRecord&, const SeriesRecord&) = default;
};

struct Report {
  RunSummary run_config;
  std::vector<VerificationReport> families;
  std::vector<NumericRecord> numeric;
  std::vector<SeriesRecord> series;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Digits used for reals in reports.
inline constexpr int kReportDigits = 30;

nlohmann::ordered_json to_json(const Report& report);
Report report_from_json(const nlohmann::ordered_json& doc);
std::string emit_json(const Report& report);
/// Throws std::invalid_argument on malformed documents.
Report parse_report(std::string_view text);

/// 0 when every family, numeric check (skips allowed) and series passes;
/// otherwise 1.
int exit_code(const Report& report);

void render(const Report& report, OutputFormat format, std::ostream& out);

/// Runs every selected family, numeric check and series. `families` is the
/// registry by default; tests substitute mutated families. Throws UsageError
/// when the configuration does not fit a selected family.
Report run_verify(const RunConfig& config, std::span<const IdentityFamily> families = list_families());

}  // namespace fibmod5::cli
