#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fibmod5/bigint_seq.hpp"
#include "fibmod5/rational.hpp"

namespace fibmod5 {

/// Parameter error (n outside a family's domain, missing seeds, ...), as
/// opposed to a verification failure.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n*n_coeff + k*k_coeff + t*t_coeff + c
struct Affine {
  Index n = 0;
  Index k = 0;
  Index t = 0;
  Index c = 0;

  Index at(Index n_, Index k_, Index t_) const { return n * n_ + k * k_ + t * t_ + c; }
  friend bool operator==(const Affine&, const Affine&) = default;
};

/// Sequence subscript: an affine form plus a shift chosen by n mod 5 (the
/// delta tables of the specialized corollaries).
struct Subscript {
  Affine form;
  std::array<Index, 5> residue_shift{};

  friend bool operator==(const Subscript&, const Subscript&) = default;
};

struct SequenceRef {
  SequenceKind kind = SequenceKind::fibonacci;
  Subscript sub;

  friend bool operator==(const SequenceRef&, const SequenceRef&) = default;
};

enum class UpperLimit { half_floor, half_ceil, n, half_floor_minus_one };  // the last is floor((n-1)/2)

/// coeff * sum_{k=lower}^{upper(n)} (-1)^sign * (weight_num/weight_den)
///                * binom(top, bottom) * power_base^power_exp * X_sub
struct BinomialSum {
  Rational coeff = 1;
  Index lower = 0;
  UpperLimit upper = UpperLimit::half_floor;
  Affine sign;
  Affine top;
  Affine bottom;
  Affine weight_num{.c = 1};
  Affine weight_den{.c = 1};
  Index power_base = 1;
  Affine power_exp;
  SequenceRef seq;

  friend bool operator==(const BinomialSum&, const BinomialSum&) = default;
};

/// Sign factors of the closed forms.
enum class SignFactor { none, pow_n, floor_n_5, floor_n1_5 };  // 1, (-1)^n, (-1)^floor(n/5), (-1)^floor((n+1)/5)

/// coeff * sign(n) * X_sub, or coeff * sign(n) when seq is empty.
struct ClosedTerm {
  Rational coeff = 1;
  SignFactor sign = SignFactor::none;
  std::optional<SequenceRef> seq;

  friend bool operator==(const ClosedTerm&, const ClosedTerm&) = default;
};

using ExpressionTerm = std::variant<BinomialSum, ClosedTerm>;
using Expression = std::vector<ExpressionTerm>;

/// Closed form used for the residues in `residues` (bit r set for n = r mod 5).
struct Arm {
  std::string label;
  std::uint8_t residues = 0;
  Expression expr;

  bool covers(int residue) const { return (residues >> residue) & 1U; }
  friend bool operator==(const Arm&, const Arm&) = default;
};

struct IdentityFamily {
  std::string id;
  std::string anchor;
  std::string description;
  Index n_min = 1;
  bool uses_t = true;
  bool uses_gibonacci = false;
  Index scale = 1;  // scale*LHS and scale*RHS are integers
  Expression lhs;
  std::vector<Arm> rhs;

  const Arm& arm_for(Index n) const;
};

int sign_factor_value(SignFactor f, Index n);
Index upper_limit_value(UpperLimit u, Index n);

/// One term of an expression specialised to a fixed n:
/// coeff * X_kind(offset + t_coeff * t), or a constant when kind is empty.
struct CompiledTerm {
  Rational coeff;
  std::optional<SequenceKind> kind;
  Index offset = 0;
  Index t_coeff = 0;
  Index k = -1;  // summation index the term came from; -1 for closed terms
};

/// Expands every sum of `expr` at n into individual terms, dropping terms
/// whose coefficient vanishes.
std::vector<CompiledTerm> compile_expression(const Expression& expr, Index n);

/// The same terms over one positive common denominator: value =
/// (sum numerators[i] * X(...)) / denominator.
struct IntegerForm {
  SeqValue denominator = 1;
  std::vector<SeqValue> numerators;
  std::vector<CompiledTerm> terms;
};
IntegerForm to_integer_form(std::vector<CompiledTerm> terms);

}  // namespace fibmod5
