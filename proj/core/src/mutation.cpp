#include "fibmod5/mutation.hpp"

#include <stdexcept>

namespace fibmod5 {
namespace {

const SequenceRef* sequence_of(const ExpressionTerm& term) {
  if (const auto* sum = std::get_if<BinomialSum>(&term)) return &sum->seq;
  const auto& closed = std::get<ClosedTerm>(term);
  return closed.seq ? &*closed.seq : nullptr;
}

SequenceRef* sequence_of(ExpressionTerm& term) {
  return const_cast<SequenceRef*>(sequence_of(static_cast<const ExpressionTerm&>(term)));
}

void negate(ExpressionTerm& term) {
  std::visit([](auto& t) { t.coeff = -t.coeff; }, term);
}

void add_shifts(const Expression& expr, bool on_lhs, std::size_t arm, const std::string& where,
                std::vector<Mutation>& out) {
  for (std::size_t j = 0; j < expr.size(); ++j) {
    if (!sequence_of(expr[j])) continue;
    for (Index delta : {-1, 1}) {
      out.push_back(Mutation{Mutation::Kind::shift_subscript, on_lhs, arm, j, delta,
                             "shift subscript of " + where + " term " + std::to_string(j) + " by " +
                                 (delta > 0 ? "+1" : "-1")});
    }
  }
}

}  // namespace

std::vector<Mutation> enumerate_mutations(const IdentityFamily& family) {
  std::vector<Mutation> out;
  add_shifts(family.lhs, true, 0, "LHS", out);
  for (std::size_t a = 0; a < family.rhs.size(); ++a) {
    const Arm& arm = family.rhs[a];
    if (arm.expr.empty()) continue;
    const std::string where = "arm " + arm.label;
    out.push_back(Mutation{Mutation::Kind::negate_arm, false, a, 0, 0, "negate " + where});
    if (arm.expr.size() > 1) {
      for (std::size_t j = 0; j < arm.expr.size(); ++j) {
        out.push_back(Mutation{Mutation::Kind::negate_term, false, a, j, 0,
                               "flip sign of " + where + " term " + std::to_string(j)});
      }
    }
    add_shifts(arm.expr, false, a, where, out);
  }
  return out;
}

IdentityFamily apply_mutation(const IdentityFamily& family, const Mutation& mutation) {
  IdentityFamily out = family;
  out.id += "~mutant";
  out.description = mutation.description + ": " + family.description;
  if (!mutation.on_lhs && mutation.arm >= out.rhs.size()) throw std::out_of_range("mutation arm index");
  Expression& expr = mutation.on_lhs ? out.lhs : out.rhs[mutation.arm].expr;

  switch (mutation.kind) {
    case Mutation::Kind::negate_arm:
      for (auto& term : expr) negate(term);
      break;
    case Mutation::Kind::negate_term:
      negate(expr.at(mutation.term));
      break;
    case Mutation::Kind::shift_subscript: {
      SequenceRef* seq = sequence_of(expr.at(mutation.term));
      if (!seq) throw std::invalid_argument("mutation targets a term without a sequence");
      seq->sub.form.c += mutation.delta;
      break;
    }
  }
  return out;
}

}  // namespace fibmod5
