#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fibmod5/golden_ring.hpp"
#include "fibmod5/real.hpp"

namespace fibmod5 {

/// Power series in pi whose sums are golden-ring constants.
///
/// The Bernoulli families are partial sums of the sine-ratio expansion
///   sin(x t)/sin(t) = sum_k (-1)^k 2^(2k+1)/(2k+1)! B_{2k+1}((1+x)/2) t^(2k)
/// at t = pi/5 (families *-ber) or t = 3pi/5 (families *-ber2, the 9^k/25^k
/// variants) with Bernoulli argument 5m/2 + offset.
enum class SeriesFamily {
  ber_5m2,         // B(5m/2)              -> (-1)^(m-1)
  ber_5m2_half,    // B(5m/2 + 1/2), 2^2k  -> 0
  ber_5m2_one,     // B(5m/2 + 1)          -> (-1)^m
  series1_ber,     // B(5m/2 + 3/2)        -> (-1)^m alpha
  series2_ber,     // B(5m/2 + 2)          -> (-1)^m alpha
  ber2_5m2,
  ber2_5m2_half,
  ber2_5m2_one,
  series1_ber2,    // -> (-1)^m beta
  series2_ber2,    // printed without 9^k; see SeriesResult::corrected_*
  last1,           // sum_{k>=1} (-1)^k (pi/5)^(2k)/(2k)!               -> -beta^2/2
  last2,           // sum_{k>=1} (-1)^k 2^(2k+1) (pi/5)^(2k)/(2k)!      -> sqrt5 beta
  last2_bernoulli, // sum_{k>=1} (-1)^k 2^(4k+1)/(2k+1)! (pi/5)^(2k) B_{2k+1}(3/2) -> sqrt5 beta
};

struct SeriesTarget {
  SeriesFamily family = SeriesFamily::series1_ber;
  Index m = 0;  // ignored by last1/last2/last2_bernoulli
};

std::span<const SeriesFamily> all_series_families();
std::string_view series_id(SeriesFamily family);
std::optional<SeriesFamily> parse_series_id(std::string_view id);
std::string_view series_anchor(SeriesFamily family);
std::string_view series_description(SeriesFamily family);
bool series_uses_m(SeriesFamily family);

/// Exact limit of the series as printed.
GoldenFraction series_expected(const SeriesTarget& target);
/// Human-readable form of the limit, e.g. "(-1)^m alpha".
std::string_view series_expected_label(SeriesFamily family);

/// Exact coefficient (-1)^k 2^(2k+1)/(2k+1)! B_{2k+1}((1+x)/2).
Rational sin_ratio_series_coefficient(const Rational& x, Index k);

/// sum_{k=0}^{K-1} coefficient(x, k) t^(2k). Throws std::domain_error if
/// |t| >= pi or K < 1.
Real sin_ratio_series_partial(const Rational& x, const Real& t, Index terms);

/// j-th term (j = 0, 1, ...) of the target's series. `corrected` selects the
/// 9^k/25^k variant of series2-ber2 and is ignored elsewhere.
Real series_term(const SeriesTarget& target, Index j, bool corrected = false);

/// Partial sums after 1, 2, ..., terms terms.
std::vector<Real> series_partial_sums(const SeriesTarget& target, Index terms, bool corrected = false);

/// Raised when the first omitted term exceeds the tolerance: the term count
/// is too small to decide, which is not a verification failure.
class TailBoundError : public std::runtime_error {
 public:
  TailBoundError(const std::string& what, Real bound) : std::runtime_error(what), bound_(std::move(bound)) {}
  const Real& bound() const { return bound_; }

 private:
  Real bound_;
};

struct SeriesResult {
  SeriesTarget target;
  Index terms = 0;
  double tol = 0;
  Real partial_sum;
  Real expected;
  Real error;
  Real tail_bound;  // |first omitted term|
  bool pass = false;
  // series2-ber2 only: when the printed form fails, the 9^k-scaled variant is
  // evaluated too and its outcome recorded here.
  std::optional<Real> corrected_error;
  bool corrected_pass = false;

  /// pass, or the printed form failed and the corrected variant holds.
  bool resolved() const { return pass || corrected_pass; }
};

/// Evaluates the target's partial sum with `terms` terms and compares it to
/// the exact limit. Throws TailBoundError when the tail bound exceeds tol.
SeriesResult series_verify(const SeriesTarget& target, Index terms, double tol);

}  // namespace fibmod5
