#include "fibmod5/cli/config.hpp"

#include <fnmatch.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace fibmod5::cli {
namespace {

Index parse_index(std::string_view text, std::string_view what) {
  Index value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "text") return OutputFormat::text;
  throw UsageError("unknown format '" + std::string(text) + "' (expected json, csv or text)");
}

std::string_view format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "text";
}

IntRange parse_range(std::string_view text) {
  text = trim(text);
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const Index v = parse_index(text, "range");
    return IntRange{v, v};
  }
  const IntRange r{parse_index(trim(text.substr(0, dots)), "range start"),
                   parse_index(trim(text.substr(dots + 2)), "range end")};
  if (r.empty()) throw UsageError("empty range '" + std::string(text) + "'");
  return r;
}

std::string range_string(const IntRange& range) {
  return std::to_string(range.lo) + ".." + std::to_string(range.hi);
}

GibonacciParams parse_seed(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw UsageError("gibonacci seed must look like a,b: '" + std::string(text) + "'");
  const auto a = trim(text.substr(0, comma));
  const auto b = trim(text.substr(comma + 1));
  try {
    return GibonacciParams{SeqValue(std::string(a)), SeqValue(std::string(b))};
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid gibonacci seed '" + std::string(text) + "'");
  }
}

std::string seed_string(const GibonacciParams& seed) { return seed.a.get_str() + "," + seed.b.get_str(); }

std::vector<GibonacciParams> default_seeds() {
  return {fibonacci_seeds(), lucas_seeds(), GibonacciParams{3, 7}, GibonacciParams{-2, 5}};
}

unsigned default_workers() {
  if (const char* env = std::getenv("FIBMOD5_WORKERS")) {
    const Index v = parse_index(env, "FIBMOD5_WORKERS");
    if (v < 1) throw UsageError("FIBMOD5_WORKERS must be at least 1");
    return static_cast<unsigned>(v);
  }
  return 1;
}

void RunConfig::validate() const {
  if (n_range.empty()) throw UsageError("empty n range");
  if (t_range.empty()) throw UsageError("empty t range");
  if (terms < 1) throw UsageError("--terms must be at least 1");
  if (!(series_tol > 0)) throw UsageError("--tol must be positive");
  if (numeric_tol && !(*numeric_tol > 0)) throw UsageError("numeric tolerance must be positive");
  if (workers < 1) throw UsageError("--workers must be at least 1");
  for (Index m : series_m) {
    if (m < 0) throw UsageError("--m must be non-negative");
  }
}

NumericTolerances RunConfig::numeric_tolerances() const {
  NumericTolerances tol;
  if (numeric_tol) tol = NumericTolerances{*numeric_tol, *numeric_tol, *numeric_tol};
  return tol;
}

bool selected(const RunConfig& config, std::string_view id) {
  if (config.selectors.empty()) return true;
  const std::string name(id);
  for (const auto& glob : config.selectors) {
    if (fnmatch(glob.c_str(), name.c_str(), 0) == 0) return true;
  }
  return false;
}

std::string double_string(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  for (int digits = 1; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

double parse_double(std::string_view text) {
  const std::string s(trim(text));
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw UsageError("invalid number '" + s + "'");
  return v;
}

}  // namespace fibmod5::cli
