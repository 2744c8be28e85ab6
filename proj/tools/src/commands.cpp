#include "fibmod5/cli/commands.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "fibmod5/cli/report.hpp"

namespace fibmod5::cli {
namespace {

using json = nlohmann::ordered_json;

struct ListEntry {
  std::string id;
  std::string kind;
  std::string anchor;
  std::string description;
};

std::string_view kind_symbol(const std::optional<SequenceKind>& kind) {
  if (!kind) return "1";
  switch (*kind) {
    case SequenceKind::fibonacci: return "F";
    case SequenceKind::lucas: return "L";
    case SequenceKind::gibonacci: return "G";
  }
  return "?";
}

bool matches_any(const std::vector<std::string>& globs, const std::string& id) {
  RunConfig probe;
  probe.selectors = globs;
  return selected(probe, id);
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

int cmd_list(const std::vector<std::string>& globs, OutputFormat format, std::ostream& out) {
  std::vector<ListEntry> entries;
  for (const auto& f : list_families()) {
    if (matches_any(globs, f.id)) entries.push_back({f.id, "family", f.anchor, f.description});
  }
  for (const auto& c : numeric_check_catalog()) {
    if (matches_any(globs, std::string(c.id))) {
      entries.push_back({std::string(c.id), "numeric", std::string(c.anchor), std::string(c.description)});
    }
  }
  for (auto s : all_series_families()) {
    const std::string id(series_id(s));
    if (matches_any(globs, id)) {
      entries.push_back({id, "series", std::string(series_anchor(s)),
                         std::string(series_description(s)) + " -> " + std::string(series_expected_label(s))});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

  switch (format) {
    case OutputFormat::json: {
      json doc = json::array();
      for (const auto& e : entries) {
        doc.push_back(json{{"id", e.id}, {"kind", e.kind}, {"anchor", e.anchor}, {"description", e.description}});
      }
      out << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "id,kind,anchor,description\n";
      for (const auto& e : entries) {
        out << e.id << "," << e.kind << "," << csv_quote(e.anchor) << "," << csv_quote(e.description) << "\n";
      }
      break;
    case OutputFormat::text: {
      std::size_t width = 0;
      for (const auto& e : entries) width = std::max(width, e.id.size());
      for (const auto& e : entries) {
        out << e.id << std::string(width + 2 - e.id.size(), ' ') << e.kind << "  " << e.anchor << "  "
            << e.description << "\n";
      }
      break;
    }
  }
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const Report report = run_verify(config);
  render(report, config.format, out);
  return exit_code(report);
}

int cmd_eval(const std::string& id, Index n, Index t, const std::vector<GibonacciParams>& seeds, OutputFormat format,
             std::ostream& out) {
  const IdentityFamily* family = find_family(id);
  if (!family) throw UsageError("unknown family '" + id + "'");
  if (seeds.size() > 1) throw UsageError("eval takes at most one --gib seed");
  std::optional<GibonacciParams> gib;
  if (!seeds.empty()) gib = seeds.front();

  std::vector<TermDetail> terms;
  Rational lhs, rhs;
  try {
    terms = lhs_terms(*family, n, t, gib);
    lhs = eval_lhs(*family, n, t, gib);
    rhs = eval_rhs(*family, n, t, gib);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const Arm& arm = family->arm_for(n);
  const bool equal = lhs == rhs;
  const Index shown_t = family->uses_t ? t : 0;

  switch (format) {
    case OutputFormat::json: {
      json rows = json::array();
      for (const auto& d : terms) {
        rows.push_back(json{{"k", d.k < 0 ? json(nullptr) : json(std::to_string(d.k))},
                            {"coeff", to_string(d.coeff)},
                            {"sequence", kind_symbol(d.kind)},
                            {"subscript", std::to_string(d.subscript)},
                            {"sequence_value", d.sequence_value.get_str()},
                            {"term", to_string(d.value)}});
      }
      json doc{{"family_id", family->id},
               {"n", std::to_string(n)},
               {"t", std::to_string(shown_t)},
               {"gib", gib ? json(seed_string(*gib)) : json(nullptr)},
               {"lhs_terms", rows},
               {"lhs", to_string(lhs)},
               {"arm", arm.label},
               {"rhs", to_string(rhs)},
               {"equal", equal}};
      out << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "k,coeff,sequence,subscript,sequence_value,term\n";
      for (const auto& d : terms) {
        out << (d.k < 0 ? std::string() : std::to_string(d.k)) << "," << to_string(d.coeff) << ","
            << kind_symbol(d.kind) << "," << d.subscript << "," << d.sequence_value.get_str() << ","
            << to_string(d.value) << "\n";
      }
      out << "lhs,,,,," << to_string(lhs) << "\n";
      out << "rhs," << csv_quote(arm.label) << ",,,," << to_string(rhs) << "\n";
      break;
    case OutputFormat::text:
      out << family->id << "  n=" << n << " t=" << shown_t;
      if (gib) out << " gib=" << seed_string(*gib);
      out << "\n";
      for (const auto& d : terms) {
        out << "  k=" << d.k << "  " << to_string(d.coeff) << " * " << kind_symbol(d.kind) << "_" << d.subscript
            << " (" << d.sequence_value.get_str() << ") = " << to_string(d.value) << "\n";
      }
      out << "LHS " << to_string(lhs) << "\n";
      out << "RHS " << to_string(rhs) << "  arm \"" << arm.label << "\"\n";
      out << (equal ? "equal" : "NOT equal") << "\n";
      break;
  }
  return equal ? 0 : 1;
}

int cmd_series(const std::string& id, Index m, Index terms, double tol, OutputFormat format, std::ostream& out,
               std::ostream& err) {
  const auto family = parse_series_id(id);
  if (!family) throw UsageError("unknown series '" + id + "'");
  if (terms < 1) throw UsageError("--terms must be at least 1");
  if (!(tol > 0)) throw UsageError("--tol must be positive");
  if (m < 0) throw UsageError("--m must be non-negative");
  const SeriesTarget target{*family, series_uses_m(*family) ? m : 0};

  const auto partials = series_partial_sums(target, terms);
  const Real expected = to_real(series_expected(target));
  std::optional<SeriesRecord> verdict;
  std::string diagnostic;
  try {
    verdict = SeriesRecord::of(series_verify(target, terms, tol));
  } catch (const TailBoundError& e) {
    diagnostic = e.what();
  }

  switch (format) {
    case OutputFormat::json: {
      json rows = json::array();
      for (std::size_t i = 0; i < partials.size(); ++i) {
        rows.push_back(json{{"terms", std::to_string(i + 1)},
                            {"partial_sum", to_decimal(partials[i], kReportDigits)},
                            {"error", to_decimal(abs(partials[i] - expected), kReportDigits)}});
      }
      json doc{{"series_id", id},
               {"m", series_uses_m(*family) ? json(std::to_string(m)) : json(nullptr)},
               {"expected_label", series_expected_label(*family)},
               {"expected", to_decimal(expected, kReportDigits)},
               {"rows", rows}};
      if (verdict) {
        doc["pass"] = verdict->pass;
        doc["corrected_error"] = verdict->corrected_error ? json(*verdict->corrected_error) : json(nullptr);
        doc["corrected_pass"] = verdict->corrected_pass;
        doc["resolved"] = verdict->resolved;
      } else {
        doc["diagnostic"] = diagnostic;
      }
      out << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "terms,partial_sum,error\n";
      for (std::size_t i = 0; i < partials.size(); ++i) {
        out << i + 1 << "," << to_decimal(partials[i], kReportDigits) << ","
            << to_decimal(abs(partials[i] - expected), kReportDigits) << "\n";
      }
      break;
    case OutputFormat::text:
      out << id;
      if (series_uses_m(*family)) out << " m=" << m;
      out << "  limit " << series_expected_label(*family) << " = " << to_decimal(expected, 20) << "\n";
      for (std::size_t i = 0; i < partials.size(); ++i) {
        out << "  K=" << i + 1 << "  " << to_decimal(partials[i], 20) << "  error "
            << to_decimal(abs(partials[i] - expected), 3) << "\n";
      }
      if (verdict) {
        out << (verdict->pass ? "pass" : "FAIL") << ": error " << verdict->error << " tol " << verdict->tol << "\n";
        if (verdict->corrected_error) {
          out << "printed form misses its limit; the 9^k-scaled form has error " << *verdict->corrected_error
              << (verdict->corrected_pass ? " and holds" : " and fails too") << "\n";
        }
      }
      break;
  }
  if (!verdict) {
    err << "series " << id << ": " << diagnostic << "\n";
    return 1;
  }
  return verdict->resolved ? 0 : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric verification of mod-5 binomial Fibonacci and Lucas identities", "fibmod5"};
  app.require_subcommand(1);

  std::string format_text = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* list = app.add_subcommand("list", "List identity families, numeric checks and series");
  std::vector<std::string> list_globs;
  list->add_option("glob", list_globs, "Only ids matching these globs");
  add_format(list);

  RunConfig config;
  std::string n_text, t_text, numeric_tol_text;
  std::vector<std::string> seed_texts;
  double tol = config.series_tol;
  bool all = false;
  unsigned workers = 0;
  auto* verify = app.add_subcommand("verify", "Verify families, numeric checks and series");
  verify->add_flag("--all", all, "Select everything (the default when no --family is given)");
  verify->add_option("--family", config.selectors, "Glob over family, numeric-check and series ids (repeatable)");
  verify->add_option("--n", n_text, "n range a..b");
  verify->add_option("--t", t_text, "t range a..b");
  verify->add_option("--gib", seed_texts, "Gibonacci seeds a,b (repeatable)");
  verify->add_option("--terms", config.terms, "Series term count");
  verify->add_option("--m", config.series_m, "Series m values (repeatable)");
  verify->add_option("--tol", tol, "Series tolerance");
  verify->add_option("--numeric-tol", numeric_tol_text, "Base tolerance for every numeric check");
  verify->add_option("--workers", workers, "Worker threads (default: FIBMOD5_WORKERS or 1)");
  add_format(verify);

  std::string eval_id;
  Index eval_n = 0;
  Index eval_t = 0;
  auto* eval = app.add_subcommand("eval", "Evaluate one family at a single point");
  eval->add_option("id", eval_id, "Family id")->required();
  eval->add_option("n", eval_n, "n")->required();
  eval->add_option("t", eval_t, "t (ignored by families without t)");
  eval->add_option("--gib", seed_texts, "Gibonacci seed a,b");
  add_format(eval);

  std::string series_name;
  Index series_m = 0;
  Index series_terms = 40;
  double series_tol = 1e-12;
  auto* series = app.add_subcommand("series", "Partial sums of one series and a convergence verdict");
  series->add_option("id", series_name, "Series id")->required();
  series->add_option("--m", series_m, "m (Bernoulli families)");
  series->add_option("--terms", series_terms, "Number of terms");
  series->add_option("--tol", series_tol, "Tolerance");
  add_format(series);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    const OutputFormat format = parse_format(format_text);
    std::vector<GibonacciParams> seeds;
    for (const auto& s : seed_texts) seeds.push_back(parse_seed(s));

    if (list->parsed()) return cmd_list(list_globs, format, out);
    if (eval->parsed()) return cmd_eval(eval_id, eval_n, eval_t, seeds, format, out);
    if (series->parsed()) return cmd_series(series_name, series_m, series_terms, series_tol, format, out, err);

    if (all) config.selectors.clear();
    if (!n_text.empty()) config.n_range = parse_range(n_text);
    if (!t_text.empty()) config.t_range = parse_range(t_text);
    if (!seeds.empty()) config.seeds = seeds;
    if (!numeric_tol_text.empty()) config.numeric_tol = parse_double(numeric_tol_text);
    config.series_tol = tol;
    config.format = format;
    config.workers = workers > 0 ? workers : default_workers();
    return cmd_verify(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fibmod5::cli
