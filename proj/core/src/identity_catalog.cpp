#include "fibmod5/identity_catalog.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <limits>
#include <set>

#include "catalog_families.hpp"

namespace fibmod5 {
namespace {

const std::vector<IdentityFamily>& registry() {
  static const std::vector<IdentityFamily> families = [] {
    auto out = detail::build_families();
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    std::set<std::string> seen;
    for (const auto& f : out) {
      if (!seen.insert(f.id).second) throw std::logic_error("duplicate family id " + f.id);
      std::uint8_t covered = 0;
      for (const auto& arm : f.rhs) {
        if (covered & arm.residues) throw std::logic_error(f.id + ": overlapping closed-form arms");
        covered |= arm.residues;
      }
      if (covered != 0x1F) throw std::logic_error(f.id + ": closed-form arms miss a residue");
    }
    return out;
  }();
  return families;
}

void check_point(const IdentityFamily& family, Index n, const std::optional<GibonacciParams>& gib) {
  if (n < family.n_min) {
    throw DomainError(family.id + ": n=" + std::to_string(n) + " is below the domain start " +
                      std::to_string(family.n_min));
  }
  if (family.uses_gibonacci && !gib) throw DomainError(family.id + ": gibonacci seeds are required");
  if (!family.uses_gibonacci && gib) throw DomainError(family.id + ": takes no gibonacci seeds");
}

SeqValue sequence_at(SequenceKind kind, Index i, const std::optional<GibonacciParams>& gib) {
  switch (kind) {
    case SequenceKind::fibonacci: return fib(i);
    case SequenceKind::lucas: return lucas(i);
    case SequenceKind::gibonacci: return fibmod5::gib(*gib, i);
  }
  throw std::logic_error("unreachable");
}

Rational evaluate(const std::vector<CompiledTerm>& terms, Index t, const std::optional<GibonacciParams>& gib) {
  Rational sum = 0;
  for (const auto& term : terms) {
    if (term.kind) {
      sum += term.coeff * Rational(sequence_at(*term.kind, term.offset + term.t_coeff * t, gib));
    } else {
      sum += term.coeff;
    }
  }
  return sum;
}

Index effective_t(const IdentityFamily& family, Index t) { return family.uses_t ? t : 0; }

// Both sides of one n, over a common denominator each.
struct CompiledPoint {
  IntegerForm lhs;
  IntegerForm rhs;
};

struct Windows {
  std::array<SequenceWindow, 3> tables;

  const SeqValue& at(SequenceKind kind, Index i) const { return tables[static_cast<std::size_t>(kind)][i]; }
};

SeqValue dot(const IntegerForm& form, const Windows& windows, Index t) {
  SeqValue acc = 0;
  for (std::size_t i = 0; i < form.terms.size(); ++i) {
    const auto& term = form.terms[i];
    if (term.kind) {
      mpz_addmul(acc.get_mpz_t(), form.numerators[i].get_mpz_t(),
                 windows.at(*term.kind, term.offset + term.t_coeff * t).get_mpz_t());
    } else {
      acc += form.numerators[i];
    }
  }
  return acc;
}

struct RowResult {
  Index checked = 0;
  Index passed = 0;
  std::optional<Counterexample> first;
};

}  // namespace

std::span<const IdentityFamily> list_families() { return registry(); }

const IdentityFamily* find_family(std::string_view id) {
  for (const auto& f : registry()) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

std::vector<const IdentityFamily*> match_families(std::string_view glob) {
  const std::string pattern(glob);
  std::vector<const IdentityFamily*> out;
  for (const auto& f : registry()) {
    if (fnmatch(pattern.c_str(), f.id.c_str(), 0) == 0) out.push_back(&f);
  }
  return out;
}

Rational eval_lhs(const IdentityFamily& family, Index n, Index t, const std::optional<GibonacciParams>& gib) {
  check_point(family, n, gib);
  return evaluate(compile_expression(family.lhs, n), effective_t(family, t), gib);
}

Rational eval_rhs(const IdentityFamily& family, Index n, Index t, const std::optional<GibonacciParams>& gib) {
  check_point(family, n, gib);
  return evaluate(compile_expression(family.arm_for(n).expr, n), effective_t(family, t), gib);
}

std::vector<TermDetail> lhs_terms(const IdentityFamily& family, Index n, Index t,
                                  const std::optional<GibonacciParams>& gib) {
  check_point(family, n, gib);
  t = effective_t(family, t);
  std::vector<TermDetail> out;
  for (auto& term : compile_expression(family.lhs, n)) {
    TermDetail d;
    d.k = term.k;
    d.kind = term.kind;
    if (term.kind) {
      d.subscript = term.offset + term.t_coeff * t;
      d.sequence_value = sequence_at(*term.kind, d.subscript, gib);
    }
    d.value = term.coeff * Rational(d.sequence_value);
    d.coeff = std::move(term.coeff);
    out.push_back(std::move(d));
  }
  return out;
}

VerificationReport verify_family(const IdentityFamily& family, IntRange n_range, IntRange t_range,
                                 const std::optional<GibonacciParams>& gib, unsigned workers) {
  if (n_range.empty()) throw DomainError(family.id + ": empty n range");
  if (t_range.empty()) throw DomainError(family.id + ": empty t range");
  check_point(family, n_range.lo, gib);
  if (!family.uses_t) t_range = IntRange{0, 0};

  VerificationReport report;
  report.family_id = family.id;
  report.n_range = n_range;
  report.t_range = t_range;
  report.gib = gib;

  const auto count = n_range.size();
  std::vector<CompiledPoint> points(static_cast<std::size_t>(count));
  parallel_for(count, workers, [&](Index i) {
    const Index n = n_range.lo + i;
    points[static_cast<std::size_t>(i)] = CompiledPoint{to_integer_form(compile_expression(family.lhs, n)),
                                                        to_integer_form(compile_expression(family.arm_for(n).expr, n))};
  });

  // One dense table per sequence kind covering every subscript the grid touches.
  Index lo = std::numeric_limits<Index>::max();
  Index hi = std::numeric_limits<Index>::min();
  for (const auto& p : points) {
    for (const auto* form : {&p.lhs, &p.rhs}) {
      for (const auto& term : form->terms) {
        if (!term.kind) continue;
        const Index a = term.offset + term.t_coeff * t_range.lo;
        const Index b = term.offset + term.t_coeff * t_range.hi;
        lo = std::min({lo, a, b});
        hi = std::max({hi, a, b});
      }
    }
  }
  Windows windows;
  if (lo <= hi) {
    windows.tables[static_cast<std::size_t>(SequenceKind::fibonacci)] = SequenceWindow(fibonacci_seeds(), lo, hi);
    windows.tables[static_cast<std::size_t>(SequenceKind::lucas)] = SequenceWindow(lucas_seeds(), lo, hi);
    if (gib) windows.tables[static_cast<std::size_t>(SequenceKind::gibonacci)] = SequenceWindow(*gib, lo, hi);
  }

  std::vector<RowResult> rows(static_cast<std::size_t>(count));
  parallel_for(count, workers, [&](Index i) {
    const auto& p = points[static_cast<std::size_t>(i)];
    auto& row = rows[static_cast<std::size_t>(i)];
    for (Index t = t_range.lo; t <= t_range.hi; ++t) {
      ++row.checked;
      const SeqValue l = dot(p.lhs, windows, t);
      const SeqValue r = dot(p.rhs, windows, t);
      if (l * p.rhs.denominator == r * p.lhs.denominator) {
        ++row.passed;
      } else if (!row.first) {
        row.first = Counterexample{n_range.lo + i, t, make_rational(l, p.lhs.denominator),
                                   make_rational(r, p.rhs.denominator)};
      }
    }
  });

  for (auto& row : rows) {
    report.checked += row.checked;
    report.passed += row.passed;
    if (!report.first_counterexample && row.first) report.first_counterexample = std::move(row.first);
  }
  return report;
}

}  // namespace fibmod5
