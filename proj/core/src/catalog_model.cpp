#include "fibmod5/catalog_model.hpp"

#include "fibmod5/quintic_trig.hpp"

namespace fibmod5 {
namespace {

Index subscript_offset(const Subscript& sub, Index n, Index k) {
  return sub.form.at(n, k, 0) + sub.residue_shift[static_cast<std::size_t>(Mod5Class::of(n).residue)];
}

void compile_sum(const BinomialSum& sum, Index n, std::vector<CompiledTerm>& out) {
  const Index hi = upper_limit_value(sum.upper, n);
  for (Index k = sum.lower; k <= hi; ++k) {
    const SeqValue b = binom(sum.top.at(n, k, 0), sum.bottom.at(n, k, 0));
    if (b == 0) continue;
    const Index den = sum.weight_den.at(n, k, 0);
    if (den == 0) throw DomainError("summation weight has a zero denominator at n=" + std::to_string(n));
    Rational c = sum.coeff * sign_pow(sum.sign.at(n, k, 0)) * make_rational(sum.weight_num.at(n, k, 0), den) *
                 Rational(b);
    if (sum.power_base != 1) c *= rational_pow(Rational(sum.power_base), sum.power_exp.at(n, k, 0));
    if (c == 0) continue;
    out.push_back(CompiledTerm{std::move(c), sum.seq.kind, subscript_offset(sum.seq.sub, n, k), sum.seq.sub.form.t, k});
  }
}

}  // namespace

const Arm& IdentityFamily::arm_for(Index n) const {
  const int r = Mod5Class::of(n).residue;
  for (const auto& arm : rhs) {
    if (arm.covers(r)) return arm;
  }
  throw std::logic_error(id + ": no closed-form arm for residue " + std::to_string(r));
}

int sign_factor_value(SignFactor f, Index n) {
  switch (f) {
    case SignFactor::none: return 1;
    case SignFactor::pow_n: return sign_pow(n);
    case SignFactor::floor_n_5: return sign_pow(floor_div(n, 5));
    case SignFactor::floor_n1_5: return sign_pow(floor_div(n + 1, 5));
  }
  throw std::logic_error("unreachable");
}

Index upper_limit_value(UpperLimit u, Index n) {
  switch (u) {
    case UpperLimit::half_floor: return floor_div(n, 2);
    case UpperLimit::half_ceil: return -floor_div(-n, 2);
    case UpperLimit::n: return n;
    case UpperLimit::half_floor_minus_one: return floor_div(n - 1, 2);
  }
  throw std::logic_error("unreachable");
}

std::vector<CompiledTerm> compile_expression(const Expression& expr, Index n) {
  std::vector<CompiledTerm> out;
  for (const auto& term : expr) {
    if (const auto* sum = std::get_if<BinomialSum>(&term)) {
      compile_sum(*sum, n, out);
      continue;
    }
    const auto& closed = std::get<ClosedTerm>(term);
    Rational c = closed.coeff * sign_factor_value(closed.sign, n);
    if (c == 0) continue;
    if (closed.seq) {
      out.push_back(CompiledTerm{std::move(c), closed.seq->kind, subscript_offset(closed.seq->sub, n, 0),
                                 closed.seq->sub.form.t, -1});
    } else {
      out.push_back(CompiledTerm{std::move(c), std::nullopt, 0, 0, -1});
    }
  }
  return out;
}

IntegerForm to_integer_form(std::vector<CompiledTerm> terms) {
  IntegerForm out;
  for (const auto& term : terms) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), term.coeff.get_den_mpz_t());
  }
  out.numerators.reserve(terms.size());
  for (const auto& term : terms) {
    SeqValue num = out.denominator / term.coeff.get_den();
    num *= term.coeff.get_num();
    out.numerators.push_back(std::move(num));
  }
  out.terms = std::move(terms);
  return out;
}

}  // namespace fibmod5
