#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fibmod5/catalog_model.hpp"
#include "fibmod5/parallel.hpp"

namespace fibmod5 {

/// Every registered family, sorted by id.
std::span<const IdentityFamily> list_families();

/// nullptr when the id is unknown.
const IdentityFamily* find_family(std::string_view id);

/// Families whose id matches a shell-style glob ("gib-*", "cor?-*").
std::vector<const IdentityFamily*> match_families(std::string_view glob);

/// Exact value of the family's left-hand sum. Throws DomainError when
/// n < family.n_min, or when seeds are missing for a gibonacci family or
/// given for any other family. t is ignored by families with uses_t false.
Rational eval_lhs(const IdentityFamily& family, Index n, Index t,
                  const std::optional<GibonacciParams>& gib = std::nullopt);

/// Exact value of the closed form selected by n mod 5.
Rational eval_rhs(const IdentityFamily& family, Index n, Index t,
                  const std::optional<GibonacciParams>& gib = std::nullopt);

struct TermDetail {
  Index k = -1;  // -1 for closed terms
  Rational coeff;
  std::optional<SequenceKind> kind;
  Index subscript = 0;
  SeqValue sequence_value = 1;
  Rational value;
};

/// Term-by-term breakdown of the left-hand side at (n, t).
std::vector<TermDetail> lhs_terms(const IdentityFamily& family, Index n, Index t,
                                  const std::optional<GibonacciParams>& gib = std::nullopt);

struct Counterexample {
  Index n = 0;
  Index t = 0;
  Rational lhs;
  Rational rhs;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string family_id;
  IntRange n_range;
  IntRange t_range;
  std::optional<GibonacciParams> gib;
  Index checked = 0;
  Index passed = 0;
  std::optional<Counterexample> first_counterexample;

  bool ok() const { return passed == checked; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Compares LHS and RHS exactly at every grid point, n outer and t inner,
/// both ascending. The first counterexample in that order is kept whatever
/// the worker count. Families with uses_t false are checked at t = 0 only and
/// report t_range [0, 0]. Throws DomainError on invalid ranges or seeds.
VerificationReport verify_family(const IdentityFamily& family, IntRange n_range, IntRange t_range,
                                 const std::optional<GibonacciParams>& gib = std::nullopt, unsigned workers = 1);

}  // namespace fibmod5
