#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fibmod5/parallel.hpp"
#include "fibmod5/real.hpp"

namespace fibmod5 {

/// Base tolerances. Each check scales its base linearly: trig expansions by
/// their term count, the cosecant sum and the quintic cosine sums by n.
struct NumericTolerances {
  double trig = 1e-9;
  double cosecant = 1e-9;
  double quintic_sums = 1e-8;
};

/// One floating-point identity evaluation. A skipped check has
/// abs_error = NaN and pass = false, so pass iff abs_error <= tol holds for
/// every record.
struct NumericCheck {
  std::string check_id;
  Index n = 0;
  std::optional<Index> t;
  std::optional<Real> x;
  Real lhs = 0;
  Real rhs = 0;
  Real abs_error = 0;
  double tol = 0;
  bool pass = false;
  bool skipped = false;
  std::string skip_reason;
};

struct NumericCheckInfo {
  std::string_view id;
  std::string_view anchor;
  std::string_view description;
  bool uses_x;
  bool uses_t;
};

/// Every check id produced by this module, sorted by id.
std::span<const NumericCheckInfo> numeric_check_catalog();

// Machine-readable skip reasons.
inline constexpr std::string_view kSkipSinX = "sin-x-near-zero";
inline constexpr std::string_view kSkipCosX = "cos-x-near-zero";
inline constexpr std::string_view kSkipSinNX = "sin-nx-near-zero";
inline constexpr std::string_view kSkipPole = "cos-x-equals-cos-pi-k-over-n";
inline constexpr std::string_view kSkipSingular = "singular-denominator-n-multiple-of-5";
inline constexpr std::string_view kSkipPrecision = "precision-limit";

/// Guard threshold for vanishing denominators.
inline constexpr double kDenominatorGuard = 1e-9;

/// cos-power expansion and sin(nx)/sin(x) expansion (lemma1-*).
std::vector<NumericCheck> lemma1_check(Index n, const Real& x, const NumericTolerances& tol = {});
/// Waring (cos nx, sin nx for odd n, cos nx for even n) and dual Waring
/// (sin((n+1)x)/sin x, and its sine-power variants) expansions.
std::vector<NumericCheck> waring_trig_check(Index n, const Real& x, const NumericTolerances& tol = {});
/// Half-angle T/U expansions and the sin((2n+1)x)/sin x expansion.
std::vector<NumericCheck> t_u_trig_check(Index n, const Real& x, const NumericTolerances& tol = {});
/// Alternating sum of 1/(cos x - cos(pi k/n)).
NumericCheck cosecant_sum_check(Index n, const Real& x, const NumericTolerances& tol = {});
/// Lucas and Fibonacci forms of the 4cos^2 - 2cos - 1 denominator sums.
std::vector<NumericCheck> quintic_cosine_sum_check(Index n, Index t, const NumericTolerances& tol = {});
/// The four t-free specializations of the quintic cosine sums.
std::vector<NumericCheck> quintic_cosine_corollary_check(Index n, const NumericTolerances& tol = {});

/// Twelve fixed points in (0, pi) that avoid rational multiples of pi,
/// followed by pi/5 and 3pi/5.
std::vector<Real> default_sample_points();

struct NumericSweep {
  IntRange n_range{1, 60};
  IntRange t_range{0, 0};
  std::vector<Real> points = default_sample_points();
  NumericTolerances tol;
  std::vector<std::string> ids;  // empty: every check
  unsigned workers = 1;
};

/// All selected checks over the grid, ordered by (n, check, x, t). The order
/// does not depend on the worker count.
std::vector<NumericCheck> run_numeric_suite(const NumericSweep& sweep);

}  // namespace fibmod5
