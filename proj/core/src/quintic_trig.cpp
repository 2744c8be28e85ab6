#include "fibmod5/quintic_trig.hpp"

#include <stdexcept>

namespace fibmod5 {
namespace {

GoldenFraction halved(const GoldenElement& twice) { return GoldenFraction(twice, 2); }

GoldenElement signed_element(int sign, GoldenElement x) { return sign < 0 ? -x : x; }

}  // namespace

GoldenFraction cos_npi5(Index n) {
  const Mod5Class r = Mod5Class::of(n);
  if (r.residue == 0) return halved(GoldenElement::from_integer(2 * sign_pow(n)));
  const int sign = sign_pow(n - 1);
  if (r.in({1, 4})) return halved(signed_element(sign, GoldenElement::alpha()));
  return halved(signed_element(sign, GoldenElement::beta()));
}

GoldenFraction cos_2npi5(Index n) {
  const Mod5Class r = Mod5Class::of(n);
  if (r.residue == 0) return halved(GoldenElement::from_integer(2));
  if (r.in({1, 4})) return halved(-GoldenElement::beta());
  return halved(-GoldenElement::alpha());
}

GoldenElement sin_ratio(Index n) {
  const Mod5Class r = Mod5Class::of(n);
  if (r.residue == 0) return {};
  const int sign = sign_pow(floor_div(n, 5));
  if (r.in({1, 4})) return GoldenElement::from_integer(sign);
  return signed_element(sign, GoldenElement::alpha());
}

GoldenElement sin_ratio3(Index n) {
  const Mod5Class r = Mod5Class::of(n);
  if (r.residue == 0) return {};
  const int sign = sign_pow(floor_div(n, 5));
  if (r.in({1, 4})) return GoldenElement::from_integer(sign);
  return signed_element(sign, GoldenElement::beta());
}

GoldenElement sin_odd_ratio(Index n) {
  switch (Mod5Class::of(n).residue) {
    case 0: return GoldenElement::from_integer(1);
    case 1: return GoldenElement::alpha();
    case 2: return {};
    case 3: return -GoldenElement::alpha();
    default: return GoldenElement::from_integer(-1);
  }
}

GoldenFraction cheb_t_at_minus_alpha_half(Index n) {
  if (n < 0) throw std::domain_error("cheb_t_at_minus_alpha_half: n must be non-negative");
  const Mod5Class r = Mod5Class::of(n);
  if (r.residue == 0) return halved(GoldenElement::from_integer(2));
  if (r.in({1, 4})) return halved(-GoldenElement::alpha());
  return halved(-GoldenElement::beta());
}

GoldenFraction cheb_t_at_minus_beta_half(Index n) {
  if (n < 0) throw std::domain_error("cheb_t_at_minus_beta_half: n must be non-negative");
  const Mod5Class r = Mod5Class::of(n);
  if (r.residue == 0) return halved(GoldenElement::from_integer(2));
  if (r.in({1, 4})) return halved(-GoldenElement::beta());
  return halved(-GoldenElement::alpha());
}

}  // namespace fibmod5
