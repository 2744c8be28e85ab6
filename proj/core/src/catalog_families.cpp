#include "catalog_families.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>

#include "fibmod5/quintic_trig.hpp"

namespace fibmod5::detail {
namespace {

using Shift = std::array<Index, 5>;
constexpr SequenceKind F = SequenceKind::fibonacci;
constexpr SequenceKind L = SequenceKind::lucas;
constexpr SequenceKind G = SequenceKind::gibonacci;

std::uint8_t mask(std::initializer_list<int> residues) {
  std::uint8_t m = 0;
  for (int r : residues) m |= static_cast<std::uint8_t>(1U << r);
  return m;
}

std::string residue_label(std::uint8_t m) {
  if (m == 0x1F) return "all n";
  std::vector<std::string> parts;
  for (int r = 0; r < 5; ++r) {
    if ((m >> r) & 1U) parts.push_back(std::to_string(r));
  }
  std::string out = "n≡" + parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += (i + 1 == parts.size() ? " or " : ", ") + parts[i];
  return out;
}

Arm arm(std::initializer_list<int> residues, Expression expr) {
  const auto m = mask(residues);
  return Arm{residue_label(m), m, std::move(expr)};
}

Arm every_n(Expression expr) { return arm({0, 1, 2, 3, 4}, std::move(expr)); }

SequenceRef ref(SequenceKind kind, Affine form, Shift shift = {}) { return SequenceRef{kind, Subscript{form, shift}}; }

ClosedTerm term(Rational coeff, SignFactor sign, SequenceKind kind, Affine form, Shift shift = {}) {
  return ClosedTerm{std::move(coeff), sign, ref(kind, form, shift)};
}
ClosedTerm term(Rational coeff, SequenceKind kind, Affine form, Shift shift = {}) {
  return term(std::move(coeff), SignFactor::none, kind, form, shift);
}
ClosedTerm constant(Rational value, SignFactor sign = SignFactor::none) {
  return ClosedTerm{std::move(value), sign, std::nullopt};
}

// n * sum_{k=1}^{floor(n/2)} (-1)^(k-1)/k binom(n-k-1, k-1) X_sub
BinomialSum cosine_power_sum(SequenceRef seq) {
  return BinomialSum{.lower = 1,
                     .upper = UpperLimit::half_floor,
                     .sign = {.k = 1, .c = -1},
                     .top = {.n = 1, .k = -1, .c = -1},
                     .bottom = {.k = 1, .c = -1},
                     .weight_num = {.n = 1},
                     .weight_den = {.k = 1},
                     .seq = std::move(seq)};
}

// sum_{k=0}^{floor(n/2)} (-1)^sign binom(n-k, k) X_sub
BinomialSum dual_waring_sum(Affine sign, SequenceRef seq) {
  return BinomialSum{.lower = 0,
                     .upper = UpperLimit::half_floor,
                     .sign = sign,
                     .top = {.n = 1, .k = -1},
                     .bottom = {.k = 1},
                     .seq = std::move(seq)};
}

// sum_{k=0}^{floor(n/2)} (-1)^(n-k) n/(n-k) binom(n-k, k) X_sub
BinomialSum waring_sum(SequenceRef seq) {
  return BinomialSum{.lower = 0,
                     .upper = UpperLimit::half_floor,
                     .sign = {.n = 1, .k = -1},
                     .top = {.n = 1, .k = -1},
                     .bottom = {.k = 1},
                     .weight_num = {.n = 1},
                     .weight_den = {.n = 1, .k = -1},
                     .seq = std::move(seq)};
}

// sum_{k=1}^{ceil(n/2)} n/(n+2k-1) binom(n+2k-1, n-2k+1) 5^(k+pw) X_sub
BinomialSum odd_chebyshev_sum(Rational coeff, Index pw, SequenceRef seq) {
  return BinomialSum{.coeff = std::move(coeff),
                     .lower = 1,
                     .upper = UpperLimit::half_ceil,
                     .top = {.n = 1, .k = 2, .c = -1},
                     .bottom = {.n = 1, .k = -2, .c = 1},
                     .weight_num = {.n = 1},
                     .weight_den = {.n = 1, .k = 2, .c = -1},
                     .power_base = 5,
                     .power_exp = {.k = 1, .c = pw},
                     .seq = std::move(seq)};
}

// sum_{k=0}^{floor(n/2)} n/(n+2k) binom(n+2k, n-2k) 5^(k+pw) X_sub
BinomialSum even_chebyshev_sum(Rational coeff, Index pw, SequenceRef seq) {
  return BinomialSum{.coeff = std::move(coeff),
                     .lower = 0,
                     .upper = UpperLimit::half_floor,
                     .top = {.n = 1, .k = 2},
                     .bottom = {.n = 1, .k = -2},
                     .weight_num = {.n = 1},
                     .weight_den = {.n = 1, .k = 2},
                     .power_base = 5,
                     .power_exp = {.k = 1, .c = pw},
                     .seq = std::move(seq)};
}

// sum_{k=lower}^{n} (-1)^sign (num/(n+k)) binom(n+k, n-k) X_sub
BinomialSum shifted_binomial_sum(Rational coeff, Index lower, Affine sign, Affine num, SequenceRef seq) {
  return BinomialSum{.coeff = std::move(coeff),
                     .lower = lower,
                     .upper = UpperLimit::n,
                     .sign = sign,
                     .top = {.n = 1, .k = 1},
                     .bottom = {.n = 1, .k = -1},
                     .weight_num = num,
                     .weight_den = {.n = 1, .k = 1},
                     .seq = std::move(seq)};
}

std::string_view seq_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::fibonacci: return "F";
    case SequenceKind::lucas: return "L";
    case SequenceKind::gibonacci: return "G";
  }
  return "?";
}

std::string describe(std::string_view pattern, SequenceKind kind) {
  std::string out(pattern);
  for (auto pos = out.find('X'); pos != std::string::npos; pos = out.find('X', pos + 1)) {
    out.replace(pos, 1, seq_name(kind));
  }
  return out;
}

IdentityFamily family(std::string id, std::string anchor, std::string description, Expression lhs,
                      std::vector<Arm> rhs) {
  IdentityFamily f;
  f.id = std::move(id);
  f.anchor = std::move(anchor);
  f.description = std::move(description);
  f.lhs = std::move(lhs);
  f.rhs = std::move(rhs);
  return f;
}

IdentityFamily t_free(IdentityFamily f) {
  f.uses_t = false;
  return f;
}

IdentityFamily scaled(IdentityFamily f, Index scale) {
  f.scale = scale;
  return f;
}

IdentityFamily thm1(std::string id, std::string anchor, SequenceKind x) {
  return family(std::move(id), std::move(anchor),
                describe("n sum_{k=1}^{floor(n/2)} (-1)^(k-1)/k C(n-k-1,k-1) X_{n-2k+t}", x),
                {cosine_power_sum(ref(x, {.n = 1, .k = -2, .t = 1}))},
                {arm({0}, {term(1, x, {.n = 1, .t = 1}), term(-2, SignFactor::pow_n, x, {.t = 1})}),
                 arm({1, 4}, {term(1, x, {.n = 1, .t = 1}), term(1, SignFactor::pow_n, x, {.t = 1, .c = 1})}),
                 arm({2, 3}, {term(1, x, {.n = 1, .t = 1}), term(-1, SignFactor::pow_n, x, {.t = 1, .c = -1})})});
}

IdentityFamily cor2(std::string id, Index offset, std::vector<Arm> rhs) {
  return t_free(family(std::move(id), "Corollary 2",
                       "n sum_{k=1}^{floor(n/2)} (-1)^(k-1)/k C(n-k-1,k-1) L_{n-2k" +
                           (offset == 0 ? std::string() : (offset > 0 ? "+" : "") + std::to_string(offset)) + "}",
                       {cosine_power_sum(ref(L, {.n = 1, .k = -2, .c = offset}))}, std::move(rhs)));
}

IdentityFamily waring(std::string id, SequenceKind x, SignFactor near_sign) {
  return family(std::move(id), "Theorem 2", describe("sum_{k=0}^{floor(n/2)} (-1)^k C(n-k,k) X_{n-2k+t}", x),
                {dual_waring_sum({.k = 1}, ref(x, {.n = 1, .k = -2, .t = 1}))},
                {arm({0, 3}, {term(1, SignFactor::floor_n1_5, x, {.t = 1})}),
                 arm({1, 2}, {term(1, near_sign, x, {.t = 1, .c = 1})}), arm({4}, {})});
}

IdentityFamily cor3(std::string id, SequenceKind x) {
  return t_free(family(std::move(id), "Corollary 3",
                       describe("sum_{k=0}^{floor(n/2)} (-1)^(n-k) C(n-k,k) X_{2k}", x),
                       {dual_waring_sum({.n = 1, .k = -1}, ref(x, {.k = 2}))},
                       {arm({0, 3}, {term(1, SignFactor::floor_n1_5, x, {.n = 1})}),
                        arm({1, 2}, {term(-1, SignFactor::floor_n1_5, x, {.n = 1, .c = -1})}), arm({4}, {})}));
}

IdentityFamily th7(std::string id, std::string anchor, SequenceKind x) {
  return family(std::move(id), std::move(anchor),
                describe("sum_{k=0}^{floor(n/2)} (-1)^(n-k) n/(n-k) C(n-k,k) X_{n-2k+t}", x),
                {waring_sum(ref(x, {.n = 1, .k = -2, .t = 1}))},
                {arm({0}, {term(2, x, {.t = 1})}), arm({1, 4}, {term(-1, x, {.t = 1, .c = 1})}),
                 arm({2, 3}, {term(1, x, {.t = 1, .c = -1})})});
}

IdentityFamily cor5(std::string id, SequenceKind x, Index offset, std::vector<Arm> rhs) {
  return t_free(family(std::move(id), "Corollary 5",
                       describe("sum_{k=0}^{floor(n/2)} (-1)^(n-k) n/(n-k) C(n-k,k) X_{n-2k" +
                                    (offset ? "+" + std::to_string(offset) : std::string()) + "}",
                                x),
                       {waring_sum(ref(x, {.n = 1, .k = -2, .c = offset}))}, std::move(rhs)));
}

IdentityFamily thm8(std::string id, SequenceKind odd, Index odd_pw, SequenceKind even) {
  const std::string pw = odd_pw == 0 ? "5^k" : "5^(k-1)";
  return scaled(
      family(std::move(id), "Theorem 8",
             describe("sum_{k=1}^{ceil(n/2)} n/(n+2k-1) C(n+2k-1,n-2k+1) " + pw + " X_{2k+t-1}", odd) +
                 describe(" - sum_{k=0}^{floor(n/2)} n/(n+2k) C(n+2k,n-2k) 5^k X_{2k+t}", even),
             {odd_chebyshev_sum(1, odd_pw, ref(odd, {.k = 2, .t = 1, .c = -1})),
              even_chebyshev_sum(-1, 0, ref(even, {.k = 2, .t = 1}))},
             {arm({0}, {term(-1, even, {.t = 1})}),
              arm({1, 4}, {term(make_rational(1, 2), even, {.t = 1, .c = 1})}),
              arm({2, 3}, {term(make_rational(-1, 2), even, {.t = 1, .c = -1})})}),
      2);
}

IdentityFamily th11(std::string id, std::string anchor, SequenceKind x) {
  return scaled(family(std::move(id), std::move(anchor),
                       describe("sum_{k=0}^{n} (-1)^(n-k) n/(n+k) C(n+k,n-k) X_{2k+t}", x),
                       {shifted_binomial_sum(1, 0, {.n = 1, .k = -1}, {.n = 1}, ref(x, {.k = 2, .t = 1}))},
                       {arm({0}, {term(1, x, {.t = 1})}),
                        arm({1, 4}, {term(make_rational(1, 2), x, {.t = 1, .c = -1})}),
                        arm({2, 3}, {term(make_rational(-1, 2), x, {.t = 1, .c = 1})})}),
                2);
}

IdentityFamily xyz123(std::string id, SequenceKind x) {
  return scaled(
      family(std::move(id), "Theorem 10", describe("sum_{k=1}^{n} (-1)^(k-1) k/(n+k) C(n+k,n-k) X_{2k+t}", x),
             {shifted_binomial_sum(1, 1, {.k = 1, .c = -1}, {.k = 1}, ref(x, {.k = 2, .t = 1}))},
             {arm({0}, {}), arm({1, 4}, {term(make_rational(1, 2), SignFactor::floor_n_5, x, {.t = 1, .c = 2})}),
              arm({2, 3}, {term(make_rational(-1, 2), SignFactor::floor_n_5, x, {.t = 1, .c = 1})})}),
      2);
}

IdentityFamily cor9(std::string id, SequenceKind x) {
  auto paired = [&](Affine sign, Index c) {
    return shifted_binomial_sum(2, 1, sign, {.k = 1}, ref(x, {.k = 2, .t = 1, .c = c}));
  };
  return family(std::move(id), "Corollary 9",
                describe("sum_{k=0}^{floor((n-1)/2)} (-1)^k C(n-k-1,k) X_{n-2k+t} against 2 sum_{k=1}^{n} "
                         "(-1)^s k/(n+k) C(n+k,n-k) X_{2k+t+c}",
                         x),
                {BinomialSum{.lower = 0,
                             .upper = UpperLimit::half_floor_minus_one,
                             .sign = {.k = 1},
                             .top = {.n = 1, .k = -1, .c = -1},
                             .bottom = {.k = 1},
                             .seq = ref(x, {.n = 1, .k = -2, .t = 1})}},
                {arm({0}, {paired({.k = 1, .c = -1}, 0)}), arm({1, 4}, {paired({.k = 1, .c = 1}, -1)}),
                 arm({2, 3}, {paired({.k = 1}, 1)})});
}

IdentityFamily thm12(std::string id, SequenceKind x) {
  auto f = family(std::move(id), "Theorem 12", describe("sum_{k=0}^{n} (-1)^(n-k) C(n+k,n-k) X_{2k+t}", x),
                  {BinomialSum{.lower = 0,
                               .upper = UpperLimit::n,
                               .sign = {.n = 1, .k = -1},
                               .top = {.n = 1, .k = 1},
                               .bottom = {.n = 1, .k = -1},
                               .seq = ref(x, {.k = 2, .t = 1})}},
                  {arm({0}, {term(1, x, {.t = 1})}), arm({1}, {term(1, x, {.t = 1, .c = 1})}), arm({2}, {}),
                   arm({3}, {term(-1, x, {.t = 1, .c = 1})}), arm({4}, {term(-1, x, {.t = 1})})});
  f.n_min = 0;
  return f;
}

IdentityFamily gibonacci(IdentityFamily f) {
  f.uses_gibonacci = true;
  return f;
}

// The Fibonacci arm of the Waring sums uses (-1)^floor(n/5) and the Lucas arm
// (-1)^floor((n+1)/5) on the residues 1 and 2. The two agree there.
void assert_waring_sign_factors_agree() {
  for (Index n = 0; n <= 1000; ++n) {
    if (!Mod5Class::of(n).in({1, 2})) continue;
    if (sign_factor_value(SignFactor::floor_n_5, n) != sign_factor_value(SignFactor::floor_n1_5, n)) {
      throw std::logic_error("Waring sign factors disagree at n=" + std::to_string(n));
    }
  }
}

}  // namespace

std::vector<IdentityFamily> build_families() {
  assert_waring_sign_factors_agree();
  std::vector<IdentityFamily> out;

  out.push_back(thm1("thm1-lucas", "Theorem 1", L));
  out.push_back(thm1("thm1-fib", "Theorem 1", F));

  out.push_back(t_free(family("cor1-fib-f2k", "Corollary 1",
                              "n sum_{k=1}^{floor(n/2)} (-1)^(k-1)/k C(n-k-1,k-1) F_{2k}",
                              {cosine_power_sum(ref(F, {.k = 2}))},
                              {arm({0}, {term(-2, F, {.n = 1})}), arm({1, 4}, {term(-1, F, {.n = 1, .c = -1})}),
                               arm({2, 3}, {term(1, F, {.n = 1, .c = 1})})})));
  const Shift cor1_delta{0, -1, 1, 1, -1};
  out.push_back(t_free(family("cor1-fib-delta", "Corollary 1",
                              "n sum_{k=1}^{floor(n/2)} (-1)^(k-1)/k C(n-k-1,k-1) F_{n-2k+d}, d = 0,-1,1,1,-1 by n mod 5",
                              {cosine_power_sum(ref(F, {.n = 1, .k = -2}, cor1_delta))},
                              {every_n({term(1, F, {.n = 1}, cor1_delta)})})));

  out.push_back(cor2("cor2-lucas-m1", -1,
                     {arm({2, 3}, {term(1, L, {.n = 1, .c = -1}), constant(-3, SignFactor::pow_n)}),
                      arm({0, 1, 4}, {term(1, L, {.n = 1, .c = -1}), constant(2, SignFactor::pow_n)})}));
  out.push_back(cor2("cor2-lucas-p1", 1,
                     {arm({1, 4}, {term(1, L, {.n = 1, .c = 1}), constant(3, SignFactor::pow_n)}),
                      arm({0, 2, 3}, {term(1, L, {.n = 1, .c = 1}), constant(-2, SignFactor::pow_n)})}));
  out.push_back(cor2("cor2-lucas-0", 0,
                     {arm({0}, {term(1, L, {.n = 1}), constant(-4, SignFactor::pow_n)}),
                      arm({1, 2, 3, 4}, {term(1, L, {.n = 1}), constant(1, SignFactor::pow_n)})}));

  out.push_back(waring("waring1-lucas", L, SignFactor::floor_n1_5));
  out.push_back(waring("waring2-fib", F, SignFactor::floor_n_5));

  out.push_back(cor3("cor3-lucas-even", L));
  out.push_back(cor3("cor3-fib-even", F));

  out.push_back(t_free(family("cor4-fib-one", "Corollary 4", "sum_{k=0}^{floor(n/2)} (-1)^k C(n-k,k) F_{n-2k+1}",
                              {dual_waring_sum({.k = 1}, ref(F, {.n = 1, .k = -2, .c = 1}))},
                              {arm({0, 1, 2, 3}, {constant(1, SignFactor::floor_n1_5)}), arm({4}, {})})));
  out.push_back(t_free(family("cor4-fib-zero", "Corollary 4",
                              "sum_{k=0}^{floor(n/2)} (-1)^k C(n-k,k) F_{n-2k-d}, d = 0,1,1,0,0 by n mod 5",
                              {dual_waring_sum({.k = 1}, ref(F, {.n = 1, .k = -2}, {0, -1, -1, 0, 0}))},
                              {every_n({})})));

  out.push_back(th7("th7-fib", "Theorem 6", F));
  out.push_back(th7("th7-lucas", "Theorem 6", L));

  out.push_back(cor5("cor5-fib-0", F, 0, {arm({0}, {}), arm({1, 4}, {constant(-1)}), arm({2, 3}, {constant(1)})}));
  out.push_back(cor5("cor5-lucas-0", L, 0, {arm({0}, {constant(4)}), arm({1, 2, 3, 4}, {constant(-1)})}));
  out.push_back(
      cor5("cor5-fib-1", F, 1, {arm({0}, {constant(2)}), arm({1, 4}, {constant(-1)}), arm({2, 3}, {})}));
  out.push_back(cor5("cor5-lucas-1", L, 1, {arm({0, 2, 3}, {constant(2)}), arm({1, 4}, {constant(-3)})}));

  out.push_back(thm8("thm8-mixed-a", F, 0, L));
  out.push_back(thm8("thm8-mixed-b", L, -1, F));

  const Shift cor6_delta{0, -1, 1, 1, -1};
  out.push_back(scaled(
      t_free(family("cor6-mixed-delta", "Corollary 6",
                    "sum_{k=1}^{ceil(n/2)} n/(n+2k-1) C(n+2k-1,n-2k+1) 5^k L_{2k-1+d} against "
                    "sum_{k=0}^{floor(n/2)} n/(n+2k) C(n+2k,n-2k) 5^(k+1) F_{2k+d}, d = 0,-1,1,1,-1 by n mod 5",
                    {odd_chebyshev_sum(1, 0, ref(L, {.k = 2, .c = -1}, cor6_delta))},
                    {every_n({even_chebyshev_sum(1, 1, ref(F, {.k = 2}, cor6_delta))})})),
      2));

  out.push_back(th11("th11-lucas", "Theorem 9", L));
  out.push_back(th11("th11-fib", "Theorem 9", F));

  out.push_back(t_free(family(
      "cor7-fib-zero", "Corollary 7",
      "sum_{k=0}^{n} (-1)^k 1/(n+k) C(n+k,n-k) F_{2k+d}, d = 0,1,-1,-1,1 by n mod 5",
      {shifted_binomial_sum(1, 0, {.k = 1}, {.c = 1}, ref(F, {.k = 2}, {0, 1, -1, -1, 1}))}, {every_n({})})));

  out.push_back(xyz123("xyz123-lucas", L));
  out.push_back(xyz123("xyz123-fib", F));

  out.push_back(t_free(family(
      "cor8-fib-zero", "Corollary 8",
      "sum_{k=1}^{n} (-1)^k k/(n+k) C(n+k,n-k) F_{2k-d}, d = 0,2,1,1,2 by n mod 5",
      {shifted_binomial_sum(1, 1, {.k = 1}, {.k = 1}, ref(F, {.k = 2}, {0, -2, -1, -1, -2}))}, {every_n({})})));

  out.push_back(cor9("cor9-equalities", L));
  out.push_back(cor9("cor9-equalities-fib", F));

  out.push_back(thm12("thm12-lucas", L));
  out.push_back(thm12("thm12-fib", F));

  out.push_back(gibonacci(thm1("gib-thm1", "Gibonacci form of Theorem 1", G)));
  out.push_back(gibonacci(th7("gib-th7", "Gibonacci form of Theorem 6", G)));
  out.push_back(gibonacci(th11("gib-th11", "Gibonacci form of Theorem 9", G)));
  return out;
}

}  // namespace fibmod5::detail
