#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fibmod5/numeric_verify.hpp"
#include "fibmod5/parallel.hpp"

namespace fibmod5::cli {

/// Invalid command line or configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, csv, text };

OutputFormat parse_format(std::string_view text);
std::string_view format_name(OutputFormat format);

/// "a..b", inclusive, either bound may be negative. A single "a" means a..a.
IntRange parse_range(std::string_view text);
std::string range_string(const IntRange& range);

/// "a,b" -> G_0 = a, G_1 = b.
GibonacciParams parse_seed(std::string_view text);
std::string seed_string(const GibonacciParams& seed);

/// Seeds used when none are given: Fibonacci, Lucas and two arbitrary pairs.
std::vector<GibonacciParams> default_seeds();

/// Worker count from FIBMOD5_WORKERS, or 1.
unsigned default_workers();

struct RunConfig {
  std::vector<std::string> selectors;  // globs over family, numeric-check and series ids; empty selects all
  IntRange n_range{1, 60};
  IntRange t_range{-10, 10};
  std::vector<GibonacciParams> seeds = default_seeds();
  Index terms = 80;
  std::vector<Index> series_m{0, 1, 2};
  double series_tol = 1e-12;
  std::optional<double> numeric_tol;  // overrides every base tolerance of the numeric checks
  OutputFormat format = OutputFormat::text;
  unsigned workers = 1;

  /// Throws UsageError when a range is empty, terms < 1 or a tolerance is not positive.
  void validate() const;
  NumericTolerances numeric_tolerances() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

bool selected(const RunConfig& config, std::string_view id);

/// Shortest decimal that reads back to the same double.
std::string double_string(double x);
double parse_double(std::string_view text);

}  // namespace fibmod5::cli
