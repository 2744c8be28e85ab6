#pragma once

#include <string>
#include <vector>

#include "fibmod5/catalog_model.hpp"

namespace fibmod5 {

/// A single deliberate defect in a family definition. Used to show that
/// verification is sensitive to the details of each identity.
struct Mutation {
  enum class Kind {
    negate_arm,       // multiply a whole closed-form arm by -1
    negate_term,      // flip the sign of one term of an arm
    shift_subscript,  // add `delta` to one sequence subscript
  };
  Kind kind = Kind::negate_arm;
  bool on_lhs = false;
  std::size_t arm = 0;   // closed-form arm index (ignored on the LHS)
  std::size_t term = 0;  // term index within the arm or the LHS
  Index delta = 0;
  std::string description;
};

/// Every sign flip of a non-empty arm or arm term, and every +-1 shift of a
/// sequence subscript on either side.
std::vector<Mutation> enumerate_mutations(const IdentityFamily& family);

/// Copy of the family with the mutation applied; the id gets a "~mutant" suffix.
IdentityFamily apply_mutation(const IdentityFamily& family, const Mutation& mutation);

}  // namespace fibmod5
