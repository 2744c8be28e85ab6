#include "fibmod5/cli/report.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace fibmod5::cli {
namespace {

using json = nlohmann::ordered_json;

std::string num(Index v) { return std::to_string(v); }

Index index_of(const json& j) {
  const auto s = j.get<std::string>();
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("not an integer: " + s);
  return static_cast<Index>(v);
}

json range_json(const IntRange& r) { return json{{"lo", num(r.lo)}, {"hi", num(r.hi)}}; }
IntRange range_of(const json& j) { return IntRange{index_of(j.at("lo")), index_of(j.at("hi"))}; }

template <typename T, typename F>
json optional_json(const std::optional<T>& v, F convert) {
  return v ? json(convert(*v)) : json(nullptr);
}

std::string real_string(const Real& x) { return to_decimal(x, kReportDigits); }

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string seed_label(const VerificationReport& r) { return r.gib ? seed_string(*r.gib) : ""; }

std::string series_label(const SeriesRecord& s) {
  return s.m ? s.id + " m=" + std::to_string(*s.m) : s.id;
}

void render_text(const Report& report, std::ostream& out) {
  for (const auto& f : report.families) {
    out << (f.ok() ? "PASS " : "FAIL ") << f.family_id;
    if (f.gib) out << " [" << seed_string(*f.gib) << "]";
    out << "  n " << range_string(f.n_range) << "  t " << range_string(f.t_range) << "  " << f.passed << "/"
        << f.checked << "\n";
    if (const auto& c = f.first_counterexample) {
      out << "  first counterexample: n=" << c->n << " t=" << c->t << " lhs=" << to_string(c->lhs)
          << " rhs=" << to_string(c->rhs) << "\n";
    }
  }

  struct Tally {
    Index total = 0, passed = 0, skipped = 0;
    std::map<std::string, Index> reasons;
    std::vector<const NumericRecord*> failures;
  };
  std::map<std::string, Tally> tallies;
  for (const auto& c : report.numeric) {
    auto& t = tallies[c.check_id];
    ++t.total;
    if (c.skipped) {
      ++t.skipped;
      ++t.reasons[c.skip_reason];
    } else if (c.pass) {
      ++t.passed;
    } else {
      t.failures.push_back(&c);
    }
  }
  for (const auto& [id, t] : tallies) {
    out << (t.failures.empty() ? "PASS " : "FAIL ") << id << "  " << t.passed << " passed, " << t.skipped
        << " skipped, " << t.failures.size() << " failed of " << t.total << "\n";
    for (const auto& [reason, count] : t.reasons) out << "  skipped " << count << ": " << reason << "\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(t.failures.size(), 5); ++i) {
      const auto& c = *t.failures[i];
      out << "  n=" << c.n;
      if (c.t) out << " t=" << *c.t;
      if (c.x) out << " x=" << *c.x;
      out << " error=" << c.abs_error << " tol=" << c.tol << "\n";
    }
  }

  for (const auto& s : report.series) {
    out << (s.resolved ? "PASS " : "FAIL ") << series_label(s) << "  terms " << s.terms << "  limit "
        << s.expected_label;
    if (!s.diagnostic.empty()) {
      out << "  " << s.diagnostic << "\n";
      continue;
    }
    out << "  error " << s.error << "\n";
    if (s.corrected_error) {
      out << "  printed form misses its limit; 9^k-scaled form error " << *s.corrected_error
          << (s.corrected_pass ? " (holds)" : " (fails)") << "\n";
    }
  }
  out << (exit_code(report) == 0 ? "all checks passed" : "verification FAILED") << "\n";
}

void render_csv(const Report& report, std::ostream& out) {
  out << "family_id,gib,n_range,t_range,checked,passed,cx_n,cx_t,cx_lhs,cx_rhs\n";
  for (const auto& f : report.families) {
    out << f.family_id << "," << csv_field(seed_label(f)) << "," << range_string(f.n_range) << ","
        << range_string(f.t_range) << "," << f.checked << "," << f.passed;
    if (const auto& c = f.first_counterexample) {
      out << "," << c->n << "," << c->t << "," << to_string(c->lhs) << "," << to_string(c->rhs) << "\n";
    } else {
      out << ",,,,\n";
    }
  }
  if (!report.numeric.empty()) {
    out << "\ncheck_id,n,t,x,lhs,rhs,abs_error,tol,pass,skipped,skip_reason\n";
    for (const auto& c : report.numeric) {
      out << c.check_id << "," << c.n << "," << (c.t ? num(*c.t) : "") << "," << c.x.value_or("") << "," << c.lhs
          << "," << c.rhs << "," << c.abs_error << "," << c.tol << "," << c.pass << "," << c.skipped << ","
          << c.skip_reason << "\n";
    }
  }
  if (!report.series.empty()) {
    out << "\nseries_id,m,terms,tol,partial_sum,expected,error,tail_bound,pass,corrected_error,corrected_pass,"
           "resolved\n";
    for (const auto& s : report.series) {
      out << s.id << "," << (s.m ? num(*s.m) : "") << "," << s.terms << "," << s.tol << "," << s.partial_sum << ","
          << s.expected << "," << s.error << "," << s.tail_bound << "," << s.pass << ","
          << s.corrected_error.value_or("") << "," << s.corrected_pass << "," << s.resolved << "\n";
    }
  }
}

}  // namespace

RunSummary RunSummary::of(const RunConfig& config) {
  RunSummary s;
  s.selectors = config.selectors;
  s.n_range = config.n_range;
  s.t_range = config.t_range;
  s.seeds = config.seeds;
  s.terms = config.terms;
  s.series_m = config.series_m;
  s.series_tol = double_string(config.series_tol);
  if (config.numeric_tol) s.numeric_tol = double_string(*config.numeric_tol);
  return s;
}

NumericRecord NumericRecord::of(const NumericCheck& check) {
  NumericRecord r;
  r.check_id = check.check_id;
  r.n = check.n;
  r.t = check.t;
  if (check.x) r.x = real_string(*check.x);
  r.lhs = real_string(check.lhs);
  r.rhs = real_string(check.rhs);
  r.abs_error = real_string(check.abs_error);
  r.tol = double_string(check.tol);
  r.pass = check.pass;
  r.skipped = check.skipped;
  r.skip_reason = check.skip_reason;
  return r;
}

SeriesRecord SeriesRecord::of(const SeriesResult& result) {
  SeriesRecord r;
  r.id = std::string(series_id(result.target.family));
  if (series_uses_m(result.target.family)) r.m = result.target.m;
  r.terms = result.terms;
  r.tol = double_string(result.tol);
  r.expected_label = std::string(series_expected_label(result.target.family));
  r.partial_sum = real_string(result.partial_sum);
  r.expected = real_string(result.expected);
  r.error = real_string(result.error);
  r.tail_bound = real_string(result.tail_bound);
  r.pass = result.pass;
  if (result.corrected_error) r.corrected_error = real_string(*result.corrected_error);
  r.corrected_pass = result.corrected_pass;
  r.resolved = result.resolved();
  return r;
}

json to_json(const Report& report) {
  const auto& rc = report.run_config;
  json seeds = json::array();
  for (const auto& s : rc.seeds) seeds.push_back(seed_string(s));
  json ms = json::array();
  for (Index m : rc.series_m) ms.push_back(num(m));
  json doc;
  doc["run_config"] = json{{"selectors", rc.selectors},
                           {"n_range", range_json(rc.n_range)},
                           {"t_range", range_json(rc.t_range)},
                           {"gib", seeds},
                           {"terms", num(rc.terms)},
                           {"series_m", ms},
                           {"series_tol", rc.series_tol},
                           {"numeric_tol", optional_json(rc.numeric_tol, [](const auto& s) { return s; })}};

  json families = json::array();
  for (const auto& f : report.families) {
    json cx = nullptr;
    if (const auto& c = f.first_counterexample) {
      cx = json{{"n", num(c->n)}, {"t", num(c->t)}, {"lhs", to_string(c->lhs)}, {"rhs", to_string(c->rhs)}};
    }
    families.push_back(json{{"family_id", f.family_id},
                            {"n_range", range_json(f.n_range)},
                            {"t_range", range_json(f.t_range)},
                            {"gib", optional_json(f.gib, [](const auto& g) { return seed_string(g); })},
                            {"checked", num(f.checked)},
                            {"passed", num(f.passed)},
                            {"first_counterexample", cx}});
  }
  doc["families"] = families;

  json numeric = json::array();
  for (const auto& c : report.numeric) {
    numeric.push_back(json{{"check_id", c.check_id},
                           {"n", num(c.n)},
                           {"t", optional_json(c.t, num)},
                           {"x", optional_json(c.x, [](const auto& s) { return s; })},
                           {"lhs", c.lhs},
                           {"rhs", c.rhs},
                           {"abs_error", c.abs_error},
                           {"tol", c.tol},
                           {"pass", c.pass},
                           {"skipped", c.skipped},
                           {"skip_reason", c.skip_reason}});
  }
  doc["numeric"] = numeric;

  json series = json::array();
  for (const auto& s : report.series) {
    series.push_back(json{{"series_id", s.id},
                          {"m", optional_json(s.m, num)},
                          {"terms", num(s.terms)},
                          {"tol", s.tol},
                          {"expected_label", s.expected_label},
                          {"partial_sum", s.partial_sum},
                          {"expected", s.expected},
                          {"error", s.error},
                          {"tail_bound", s.tail_bound},
                          {"pass", s.pass},
                          {"corrected_error", optional_json(s.corrected_error, [](const auto& e) { return e; })},
                          {"corrected_pass", s.corrected_pass},
                          {"resolved", s.resolved},
                          {"diagnostic", s.diagnostic}});
  }
  doc["series"] = series;
  return doc;
}

Report report_from_json(const json& doc) {
  auto opt_string = [](const json& j) -> std::optional<std::string> {
    if (j.is_null()) return std::nullopt;
    return j.get<std::string>();
  };
  auto opt_index = [](const json& j) -> std::optional<Index> {
    if (j.is_null()) return std::nullopt;
    return index_of(j);
  };

  Report r;
  const auto& rc = doc.at("run_config");
  r.run_config.selectors = rc.at("selectors").get<std::vector<std::string>>();
  r.run_config.n_range = range_of(rc.at("n_range"));
  r.run_config.t_range = range_of(rc.at("t_range"));
  for (const auto& s : rc.at("gib")) r.run_config.seeds.push_back(parse_seed(s.get<std::string>()));
  r.run_config.terms = index_of(rc.at("terms"));
  for (const auto& m : rc.at("series_m")) r.run_config.series_m.push_back(index_of(m));
  r.run_config.series_tol = rc.at("series_tol").get<std::string>();
  r.run_config.numeric_tol = opt_string(rc.at("numeric_tol"));

  for (const auto& f : doc.at("families")) {
    VerificationReport v;
    v.family_id = f.at("family_id").get<std::string>();
    v.n_range = range_of(f.at("n_range"));
    v.t_range = range_of(f.at("t_range"));
    if (!f.at("gib").is_null()) v.gib = parse_seed(f.at("gib").get<std::string>());
    v.checked = index_of(f.at("checked"));
    v.passed = index_of(f.at("passed"));
    if (const auto& c = f.at("first_counterexample"); !c.is_null()) {
      v.first_counterexample = Counterexample{index_of(c.at("n")), index_of(c.at("t")),
                                              parse_rational(c.at("lhs").get<std::string>()),
                                              parse_rational(c.at("rhs").get<std::string>())};
    }
    r.families.push_back(std::move(v));
  }

  for (const auto& c : doc.at("numeric")) {
    NumericRecord n;
    n.check_id = c.at("check_id").get<std::string>();
    n.n = index_of(c.at("n"));
    n.t = opt_index(c.at("t"));
    n.x = opt_string(c.at("x"));
    n.lhs = c.at("lhs").get<std::string>();
    n.rhs = c.at("rhs").get<std::string>();
    n.abs_error = c.at("abs_error").get<std::string>();
    n.tol = c.at("tol").get<std::string>();
    n.pass = c.at("pass").get<bool>();
    n.skipped = c.at("skipped").get<bool>();
    n.skip_reason = c.at("skip_reason").get<std::string>();
    r.numeric.push_back(std::move(n));
  }

  for (const auto& s : doc.at("series")) {
    SeriesRecord x;
    x.id = s.at("series_id").get<std::string>();
    x.m = opt_index(s.at("m"));
    x.terms = index_of(s.at("terms"));
    x.tol = s.at("tol").get<std::string>();
    x.expected_label = s.at("expected_label").get<std::string>();
    x.partial_sum = s.at("partial_sum").get<std::string>();
    x.expected = s.at("expected").get<std::string>();
    x.error = s.at("error").get<std::string>();
    x.tail_bound = s.at("tail_bound").get<std::string>();
    x.pass = s.at("pass").get<bool>();
    x.corrected_error = opt_string(s.at("corrected_error"));
    x.corrected_pass = s.at("corrected_pass").get<bool>();
    x.resolved = s.at("resolved").get<bool>();
    x.diagnostic = s.at("diagnostic").get<std::string>();
    r.series.push_back(std::move(x));
  }
  return r;
}

std::string emit_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

Report parse_report(std::string_view text) {
  try {
    return report_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

int exit_code(const Report& report) {
  const bool families_ok =
      std::all_of(report.families.begin(), report.families.end(), [](const auto& f) { return f.ok(); });
  const bool numeric_ok =
      std::all_of(report.numeric.begin(), report.numeric.end(), [](const auto& c) { return c.pass || c.skipped; });
  const bool series_ok =
      std::all_of(report.series.begin(), report.series.end(), [](const auto& s) { return s.resolved; });
  return families_ok && numeric_ok && series_ok ? 0 : 1;
}

void render(const Report& report, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::json: out << emit_json(report); break;
    case OutputFormat::csv: render_csv(report, out); break;
    case OutputFormat::text: render_text(report, out); break;
  }
}

Report run_verify(const RunConfig& config, std::span<const IdentityFamily> families) {
  config.validate();
  Report report;
  report.run_config = RunSummary::of(config);
  bool matched_anything = false;

  std::vector<const IdentityFamily*> chosen;
  for (const auto& f : families) {
    if (selected(config, f.id)) chosen.push_back(&f);
  }
  std::stable_sort(chosen.begin(), chosen.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
  for (const auto* f : chosen) {
    matched_anything = true;
    if (config.n_range.lo < f->n_min) {
      throw UsageError(f->id + ": n=" + std::to_string(config.n_range.lo) + " is outside the domain (n >= " +
                       std::to_string(f->n_min) + ")");
    }
    if (f->uses_gibonacci) {
      if (config.seeds.empty()) throw UsageError(f->id + " needs at least one --gib seed");
      for (const auto& seed : config.seeds) {
        report.families.push_back(verify_family(*f, config.n_range, config.t_range, seed, config.workers));
      }
    } else {
      report.families.push_back(verify_family(*f, config.n_range, config.t_range, std::nullopt, config.workers));
    }
  }

  NumericSweep sweep;
  sweep.n_range = config.n_range;
  sweep.t_range = config.t_range;
  sweep.tol = config.numeric_tolerances();
  sweep.workers = config.workers;
  for (const auto& info : numeric_check_catalog()) {
    if (selected(config, info.id)) sweep.ids.emplace_back(info.id);
  }
  if (!sweep.ids.empty()) {
    matched_anything = true;
    if (config.n_range.lo < 1) throw UsageError("numeric checks need n >= 1");
    for (auto& check : run_numeric_suite(sweep)) report.numeric.push_back(NumericRecord::of(check));
    std::stable_sort(report.numeric.begin(), report.numeric.end(),
                     [](const auto& a, const auto& b) { return a.check_id < b.check_id; });
  }

  std::vector<SeriesFamily> series;
  for (auto family : all_series_families()) {
    if (selected(config, series_id(family))) series.push_back(family);
  }
  std::stable_sort(series.begin(), series.end(),
                   [](auto a, auto b) { return series_id(a) < series_id(b); });
  for (auto family : series) {
    matched_anything = true;
    const std::vector<Index> ms = series_uses_m(family) ? config.series_m : std::vector<Index>{0};
    for (Index m : ms) {
      const SeriesTarget target{family, m};
      try {
        report.series.push_back(SeriesRecord::of(series_verify(target, config.terms, config.series_tol)));
      } catch (const TailBoundError& e) {
        SeriesRecord r;
        r.id = std::string(series_id(family));
        if (series_uses_m(family)) r.m = m;
        r.terms = config.terms;
        r.tol = double_string(config.series_tol);
        r.expected_label = std::string(series_expected_label(family));
        r.tail_bound = real_string(e.bound());
        r.diagnostic = e.what();
        report.series.push_back(std::move(r));
      }
    }
  }

  if (!matched_anything) throw UsageError("no family, numeric check or series matches the selection");
  return report;
}

}  // namespace fibmod5::cli
