#include "fibmod5/numeric_verify.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "fibmod5/quintic_trig.hpp"

namespace fibmod5 {
namespace {

constexpr std::array<NumericCheckInfo, 20> kChecks{{
    {"cor10-sum1", "Corollary (quintic cosine sums)", "sum (-1)^(k-1) (4c_k - 1)/(4c_k^2 - 2c_k - 1)", false, false},
    {"cor10-sum2", "Corollary (quintic cosine sums)", "sum (-1)^(k-1) / (4c_k^2 - 2c_k - 1)", false, false},
    {"cor10-sum3", "Corollary (quintic cosine sums)", "sum (-1)^(k-1) cos^2(pi k/2n) / (4c_k^2 - 2c_k - 1)", false,
     false},
    {"cor10-sum4", "Corollary (quintic cosine sums)", "sum (-1)^(k-1) c_k / (4c_k^2 - 2c_k - 1)", false, false},
    {"cosecant-sum", "Cosecant sum lemma", "sum (-1)^k / (cos x - cos(pi k/n))", true, false},
    {"dual-waring-cos", "Lemma (dual Waring)", "sum (-1)^k C(n-k,k) (2cos x)^(n-2k) = sin((n+1)x)/sin x", true, false},
    {"dual-waring-cos-even", "Lemma (dual Waring)", "even n: sine-power form of cos((n+1)x)/cos x", true, false},
    {"dual-waring-sin-odd", "Lemma (dual Waring)", "odd n: sine-power form of sin((n+1)x)/cos x", true, false},
    {"half-angle-cos", "Chebyshev T half-angle form", "n sum (-1)^(n-k) 4^k/(n+k) C(n+k,n-k) cos^(2k)(x/2) = cos nx", true, false},
    {"half-angle-sin", "Chebyshev T half-angle form", "n sum (-1)^k 4^k/(n+k) C(n+k,n-k) sin^(2k)(x/2) = cos nx", true, false},
    {"half-angle-u-cos", "Chebyshev U half-angle form", "sum (-1)^(n-k) 4^k k/(n+k) C(n+k,n-k) cos^(2k-2)(x/2) = 2 sin nx/sin x",
     true, false},
    {"half-angle-u-sin", "Chebyshev U half-angle form", "sum (-1)^(k-1) 4^k k/(n+k) C(n+k,n-k) sin^(2k-2)(x/2) = 2 sin nx/sin x",
     true, false},
    {"lemma1-cos-power", "Lemma 1", "2^(n-1) cos^n x - cos nx as a cosine-power sum", true, false},
    {"lemma1-sin-ratio", "Lemma 1", "sin nx / sin x as a cosine-power sum", true, false},
    {"odd-sine-ratio", "Odd sine ratio lemma", "sum (-1)^(n-k) 4^k C(n+k,n-k) cos^(2k) x = sin((2n+1)x)/sin x", true, false},
    {"thm13-fib", "Theorem (quintic cosine sums)", "Fibonacci-weighted sum over c_k = cos(pi k/n)", false, true},
    {"thm13-lucas", "Theorem (quintic cosine sums)", "Lucas-weighted sum over c_k = cos(pi k/n)", false, true},
    {"waring-cos", "Waring formula", "sum (-1)^k n/(n-k) C(n-k,k) 2^(n-2k-1) cos^(n-2k) x = cos nx", true, false},
    {"waring-cos-even", "Waring formula", "even n: sine-power form of cos nx", true, false},
    {"waring-sin-odd", "Waring formula", "odd n: sine-power form of sin nx", true, false},
}};

// Relative rounding floor of the working precision, with a safety margin.
const Real& precision_floor() {
  static const Real eps = pow(Real(10), -static_cast<long>(kRealDigits) + 10);
  return eps;
}

Real nan_real() { return Real(std::numeric_limits<double>::quiet_NaN()); }

NumericCheck make_skip(std::string_view id, Index n, std::optional<Index> t, std::optional<Real> x,
                       std::string_view reason, double tol) {
  NumericCheck c;
  c.check_id = std::string(id);
  c.n = n;
  c.t = t;
  c.x = std::move(x);
  c.lhs = nan_real();
  c.rhs = nan_real();
  c.abs_error = nan_real();
  c.tol = tol;
  c.skipped = true;
  c.skip_reason = std::string(reason);
  return c;
}

NumericCheck finish(std::string_view id, Index n, std::optional<Index> t, std::optional<Real> x,
                    const CompensatedSum& lhs, const Real& rhs, double tol) {
  // When rounding of the largest summand alone could exceed the tolerance
  // the comparison says nothing about the identity.
  if (lhs.max_magnitude() * precision_floor() > Real(tol) / 1000) {
    return make_skip(id, n, t, std::move(x), kSkipPrecision, tol);
  }
  NumericCheck c;
  c.check_id = std::string(id);
  c.n = n;
  c.t = t;
  c.x = std::move(x);
  c.lhs = lhs.value();
  c.rhs = rhs;
  c.abs_error = abs(c.lhs - c.rhs);
  c.tol = tol;
  c.pass = c.abs_error <= Real(tol);
  return c;
}

double scaled(double base, Index count) { return base * static_cast<double>(std::max<Index>(1, count)); }

// sum over k of coeff(k) * base^power(k), each coefficient exact.
template <typename Coeff, typename Power>
CompensatedSum power_sum(Index k_lo, Index k_hi, const Real& base, Coeff coeff, Power power) {
  CompensatedSum sum;
  for (Index k = k_lo; k <= k_hi; ++k) {
    const Rational c = coeff(k);
    if (c == 0) continue;
    sum.add(to_real(c) * pow(base, static_cast<long>(power(k))));
  }
  return sum;
}

Rational two_pow(Index e) { return rational_pow(Rational(2), e); }

void require_positive(Index n, const char* who) {
  if (n < 1) throw std::domain_error(std::string(who) + ": n must be positive");
}

}  // namespace

std::span<const NumericCheckInfo> numeric_check_catalog() { return kChecks; }

std::vector<NumericCheck> lemma1_check(Index n, const Real& x, const NumericTolerances& tol) {
  require_positive(n, "lemma1_check");
  std::vector<NumericCheck> out;
  const Real c = cos(x);
  const Real s = sin(x);

  const Index h = n / 2;
  const auto cos_power = power_sum(
      1, h, c,
      [&](Index k) {
        return Rational(sign_pow(k - 1) * make_rational(n, k) * Rational(binom(n - k - 1, k - 1)) *
                        two_pow(n - 2 * k - 1));
      },
      [&](Index k) { return n - 2 * k; });
  out.push_back(finish("lemma1-cos-power", n, std::nullopt, x, cos_power,
                       pow(Real(2), static_cast<long>(n - 1)) * pow(c, static_cast<long>(n)) - cos(n * x),
                       scaled(tol.trig, h)));

  const Index h1 = (n - 1) / 2;
  if (abs(s) <= kDenominatorGuard) {
    out.push_back(make_skip("lemma1-sin-ratio", n, std::nullopt, x, kSkipSinX, scaled(tol.trig, h1 + 1)));
  } else {
    const auto ratio = power_sum(
        0, h1, c, [&](Index k) { return Rational(sign_pow(k) * Rational(binom(n - k - 1, k)) * two_pow(n - 2 * k - 1)); },
        [&](Index k) { return n - 2 * k - 1; });
    out.push_back(finish("lemma1-sin-ratio", n, std::nullopt, x, ratio, sin(n * x) / s, scaled(tol.trig, h1 + 1)));
  }
  return out;
}

std::vector<NumericCheck> waring_trig_check(Index n, const Real& x, const NumericTolerances& tol) {
  require_positive(n, "waring_trig_check");
  std::vector<NumericCheck> out;
  const Real c = cos(x);
  const Real s = sin(x);
  const Index h = n / 2;
  const Index h1 = (n - 1) / 2;
  const bool odd = n % 2 != 0;

  auto waring_coeff = [&](Index k) {
    return Rational(make_rational(n, n - k) * Rational(binom(n - k, k)) * two_pow(n - 2 * k - 1));
  };
  auto dual_coeff = [&](Index k) { return Rational(Rational(binom(n - k, k)) * two_pow(n - 2 * k)); };
  auto power = [&](Index k) { return n - 2 * k; };

  out.push_back(finish("waring-cos", n, std::nullopt, x,
                       power_sum(0, h, c, [&](Index k) { return Rational(sign_pow(k) * waring_coeff(k)); }, power),
                       cos(n * x), scaled(tol.trig, h + 1)));
  if (odd) {
    out.push_back(finish(
        "waring-sin-odd", n, std::nullopt, x,
        power_sum(0, h1, s, [&](Index k) { return Rational(sign_pow(h1 - k) * waring_coeff(k)); }, power),
        sin(n * x), scaled(tol.trig, h1 + 1)));
  } else {
    out.push_back(finish(
        "waring-cos-even", n, std::nullopt, x,
        power_sum(0, h, s, [&](Index k) { return Rational(sign_pow(h - k) * waring_coeff(k)); }, power), cos(n * x),
        scaled(tol.trig, h + 1)));
  }

  if (abs(s) <= kDenominatorGuard) {
    out.push_back(make_skip("dual-waring-cos", n, std::nullopt, x, kSkipSinX, scaled(tol.trig, h + 1)));
  } else {
    out.push_back(finish("dual-waring-cos", n, std::nullopt, x,
                         power_sum(0, h, c, [&](Index k) { return Rational(sign_pow(k) * dual_coeff(k)); }, power),
                         sin((n + 1) * x) / s, scaled(tol.trig, h + 1)));
  }

  const std::string_view dual_id = odd ? "dual-waring-sin-odd" : "dual-waring-cos-even";
  const Index top = odd ? h1 : h;
  if (abs(c) <= kDenominatorGuard) {
    out.push_back(make_skip(dual_id, n, std::nullopt, x, kSkipCosX, scaled(tol.trig, top + 1)));
  } else {
    const Real rhs = odd ? Real(sin((n + 1) * x) / c) : Real(cos((n + 1) * x) / c);
    out.push_back(finish(
        dual_id, n, std::nullopt, x,
        power_sum(0, top, s, [&](Index k) { return Rational(sign_pow(top - k) * dual_coeff(k)); }, power), rhs,
        scaled(tol.trig, top + 1)));
  }
  return out;
}

std::vector<NumericCheck> t_u_trig_check(Index n, const Real& x, const NumericTolerances& tol) {
  require_positive(n, "t_u_trig_check");
  std::vector<NumericCheck> out;
  const Real sh = sin(x / 2);
  const Real ch = cos(x / 2);
  const Real sh2 = sh * sh;
  const Real ch2 = ch * ch;
  const Real s = sin(x);
  const double t_tol = scaled(tol.trig, n + 1);

  auto core = [&](Index k) {
    return Rational(rational_pow(Rational(4), k) * make_rational(binom(n + k, n - k), n + k));
  };
  auto identity = [](Index k) { return k; };
  auto shifted = [](Index k) { return k - 1; };

  out.push_back(finish("half-angle-sin", n, std::nullopt, x,
                       power_sum(0, n, sh2, [&](Index k) { return Rational(n * sign_pow(k) * core(k)); }, identity),
                       cos(n * x), t_tol));
  out.push_back(finish(
      "half-angle-cos", n, std::nullopt, x,
      power_sum(0, n, ch2, [&](Index k) { return Rational(n * sign_pow(n - k) * core(k)); }, identity), cos(n * x),
      t_tol));

  if (abs(s) <= kDenominatorGuard) {
    out.push_back(make_skip("half-angle-u-sin", n, std::nullopt, x, kSkipSinX, scaled(tol.trig, n)));
    out.push_back(make_skip("half-angle-u-cos", n, std::nullopt, x, kSkipSinX, scaled(tol.trig, n)));
    out.push_back(make_skip("odd-sine-ratio", n, std::nullopt, x, kSkipSinX, t_tol));
    return out;
  }
  const Real u_rhs = 2 * sin(n * x) / s;
  out.push_back(finish(
      "half-angle-u-sin", n, std::nullopt, x,
      power_sum(1, n, sh2, [&](Index k) { return Rational(k * sign_pow(k - 1) * core(k)); }, shifted), u_rhs,
      scaled(tol.trig, n)));
  out.push_back(finish(
      "half-angle-u-cos", n, std::nullopt, x,
      power_sum(1, n, ch2, [&](Index k) { return Rational(k * sign_pow(n - k) * core(k)); }, shifted), u_rhs,
      scaled(tol.trig, n)));

  const Real c = cos(x);
  out.push_back(finish("odd-sine-ratio", n, std::nullopt, x,
                       power_sum(
                           0, n, Real(c * c),
                           [&](Index k) {
                             return Rational(sign_pow(n - k) * rational_pow(Rational(4), k) *
                                             Rational(binom(n + k, n - k)));
                           },
                           identity),
                       sin((2 * n + 1) * x) / s, t_tol));
  return out;
}

NumericCheck cosecant_sum_check(Index n, const Real& x, const NumericTolerances& tol) {
  require_positive(n, "cosecant_sum_check");
  const double c_tol = scaled(tol.cosecant, n);
  const Real c = cos(x);
  const Real s = sin(x);
  const Real snx = sin(n * x);
  if (abs(s) <= kDenominatorGuard) return make_skip("cosecant-sum", n, std::nullopt, x, kSkipSinX, c_tol);
  if (abs(snx) <= kDenominatorGuard) return make_skip("cosecant-sum", n, std::nullopt, x, kSkipSinNX, c_tol);

  const Real pi_n = pi_real() / n;
  CompensatedSum sum;
  for (Index k = 1; k <= n; ++k) {
    const Real d = c - cos(pi_n * k);
    if (abs(d) <= kDenominatorGuard) return make_skip("cosecant-sum", n, std::nullopt, x, kSkipPole, c_tol);
    sum.add(sign_pow(k) / d);
  }
  const Real rhs = (1 / (1 - c) + sign_pow(n) / (1 + c)) / 2 - n / (s * snx);
  return finish("cosecant-sum", n, std::nullopt, x, sum, rhs, c_tol);
}

std::vector<NumericCheck> quintic_cosine_sum_check(Index n, Index t, const NumericTolerances& tol) {
  require_positive(n, "quintic_cosine_sum_check");
  const double q_tol = scaled(tol.quintic_sums, n);
  const Mod5Class r = Mod5Class::of(n);
  if (r.residue == 0) {
    return {make_skip("thm13-lucas", n, t, std::nullopt, kSkipSingular, q_tol),
            make_skip("thm13-fib", n, t, std::nullopt, kSkipSingular, q_tol)};
  }
  const int sn = sign_pow(n);
  const int s5 = sign_pow(floor_div(n, 5));
  const bool near_end = r.in({1, 4});

  const Real pi_n = pi_real() / n;
  CompensatedSum lucas_sum;
  CompensatedSum fib_sum;
  const Real l_a = to_real(lucas(t - 1));
  const Real l_b = to_real(lucas(t)) * 2;
  const Real f_a = to_real(fib(t - 1));
  const Real f_b = to_real(fib(t)) * 2;
  for (Index k = 1; k <= n; ++k) {
    const Real ck = cos(pi_n * k);
    const Real den = 4 * ck * ck - 2 * ck - 1;
    const int sign = sign_pow(k - 1);
    lucas_sum.add(sign * (l_a + l_b * ck) / den);
    fib_sum.add(sign * (f_a + f_b * ck) / den);
  }

  const SeqValue l_sel = near_end ? lucas(t + 1) : lucas(t);
  const SeqValue f_sel = near_end ? fib(t + 1) : fib(t);
  const Rational lucas_rhs = make_rational(lucas(t + 2) + sn * fib(t - 1), 2) - Rational(2 * s5 * n * f_sel);
  const Rational fib_rhs = Rational(make_rational(fib(t + 2), 1) + make_rational(sn * lucas(t - 1), 5)) / 2 -
                           make_rational(2 * s5 * n * l_sel, 5);
  return {finish("thm13-lucas", n, t, std::nullopt, lucas_sum, to_real(lucas_rhs), q_tol),
          finish("thm13-fib", n, t, std::nullopt, fib_sum, to_real(fib_rhs), q_tol)};
}

std::vector<NumericCheck> quintic_cosine_corollary_check(Index n, const NumericTolerances& tol) {
  require_positive(n, "quintic_cosine_corollary_check");
  const double q_tol = scaled(tol.quintic_sums, n);
  const Mod5Class r = Mod5Class::of(n);
  static constexpr std::array<std::string_view, 4> ids{"cor10-sum1", "cor10-sum2", "cor10-sum3", "cor10-sum4"};
  std::vector<NumericCheck> out;
  if (r.residue == 0) {
    for (auto id : ids) out.push_back(make_skip(id, n, std::nullopt, std::nullopt, kSkipSingular, q_tol));
    return out;
  }
  const int sn = sign_pow(n);
  const int s5 = sign_pow(floor_div(n, 5));
  const bool near_end = r.in({1, 4});

  const Real pi_n = pi_real() / n;
  std::array<CompensatedSum, 4> sums;
  for (Index k = 1; k <= n; ++k) {
    const Real ck = cos(pi_n * k);
    const Real den = 4 * ck * ck - 2 * ck - 1;
    const Real half = cos(pi_n * k / 2);
    const int sign = sign_pow(k - 1);
    sums[0].add(sign * (4 * ck - 1) / den);
    sums[1].add(sign / den);
    sums[2].add(sign * half * half / den);
    sums[3].add(sign * ck / den);
  }
  const std::array<Rational, 4> rhs{
      make_rational(3 + sn, 2) - Rational(near_end ? 2 * s5 * n : 0),
      make_rational(5 - sn, 10) - make_rational(2 * s5 * n * (near_end ? 1 : 2), 5),
      make_rational(1, 2) - make_rational(s5 * n, 2),
      make_rational(5 + sn, 10) - make_rational(s5 * n * (near_end ? 3 : 1), 5),
  };
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out.push_back(finish(ids[i], n, std::nullopt, std::nullopt, sums[i], to_real(rhs[i]), q_tol));
  }
  return out;
}

std::vector<Real> default_sample_points() {
  std::vector<Real> out;
  for (const char* text : {"0.05", "0.3", "0.55", "0.7", "0.9", "1.1", "1.3", "1.7", "2.05", "2.3", "2.65", "3.05"}) {
    out.push_back(parse_real(text));
  }
  out.push_back(pi_real() / 5);
  out.push_back(pi_real() * 3 / 5);
  return out;
}

std::vector<NumericCheck> run_numeric_suite(const NumericSweep& sweep) {
  auto wanted = [&](std::string_view id) {
    return sweep.ids.empty() || std::find(sweep.ids.begin(), sweep.ids.end(), id) != sweep.ids.end();
  };
  auto any_wanted = [&](std::initializer_list<std::string_view> ids) {
    return std::any_of(ids.begin(), ids.end(), wanted);
  };
  for (const auto& id : sweep.ids) {
    const bool known = std::any_of(kChecks.begin(), kChecks.end(), [&](const auto& c) { return c.id == id; });
    if (!known) throw std::invalid_argument("unknown numeric check id: " + id);
  }
  if (!sweep.n_range.empty() && sweep.n_range.lo < 1) {
    throw std::domain_error("numeric checks need n >= 1");
  }

  const bool lemma1 = any_wanted({"lemma1-cos-power", "lemma1-sin-ratio"});
  const bool waring = any_wanted({"waring-cos", "waring-sin-odd", "waring-cos-even", "dual-waring-cos",
                                  "dual-waring-sin-odd", "dual-waring-cos-even"});
  const bool t_u = any_wanted({"half-angle-sin", "half-angle-cos", "half-angle-u-sin", "half-angle-u-cos",
                               "odd-sine-ratio"});
  const bool cosecant = wanted("cosecant-sum");
  const bool thm13 = any_wanted({"thm13-lucas", "thm13-fib"});
  const bool cor10 = any_wanted({"cor10-sum1", "cor10-sum2", "cor10-sum3", "cor10-sum4"});

  std::vector<std::vector<NumericCheck>> per_n(static_cast<std::size_t>(sweep.n_range.size()));
  parallel_for(sweep.n_range.size(), sweep.workers, [&](Index i) {
    const Index n = sweep.n_range.lo + i;
    auto& bucket = per_n[static_cast<std::size_t>(i)];
    auto take = [&](std::vector<NumericCheck> checks) {
      for (auto& c : checks) {
        if (wanted(c.check_id)) bucket.push_back(std::move(c));
      }
    };
    for (const Real& x : sweep.points) {
      if (lemma1) take(lemma1_check(n, x, sweep.tol));
      if (waring) take(waring_trig_check(n, x, sweep.tol));
      if (t_u) take(t_u_trig_check(n, x, sweep.tol));
      if (cosecant) take({cosecant_sum_check(n, x, sweep.tol)});
    }
    if (thm13) {
      for (Index t = sweep.t_range.lo; t <= sweep.t_range.hi; ++t) take(quintic_cosine_sum_check(n, t, sweep.tol));
    }
    if (cor10) take(quintic_cosine_corollary_check(n, sweep.tol));
  });

  std::vector<NumericCheck> out;
  for (auto& bucket : per_n) {
    for (auto& c : bucket) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace fibmod5
