#pragma once

// Bounds on the first Fourier coefficient index separating eigenforms of
// distinct weights on Gamma_0(N), and the theta-function inequalities behind
// them.  Every continuum claim about a step function is checked at its
// finitely many critical points (jumps and left limits).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "levelone/primes.hpp"
#include "levelone/real.hpp"

namespace levelone {

/// 3.965, the constant in |theta(x) - x| < 3.965 x / log^2 x (x > 1).
const Real& dusart_constant();

/// 8.356 as an exact rational; above it theta(2x) > x follows from Dusart.
const mpq_class& theta_threshold();

/// p^2 where p is the smallest prime not dividing N.
std::uint64_t murty_bound(std::uint64_t level);

/// 4 (log N + 1)^2.
Real main_bound(std::uint64_t level);
Real main_bound_from_log(const Real& log_level);

/// The three growth expressions with every implied constant set to 1.
/// They describe shape only: the true O-constants are unknown.
struct AsymptoticBounds {
  Real unconditional;  // (log N + (log N)^0.525)^2
  Real riemann;        // (log N + (log N)^0.5 log log N)^2
  Real cramer;         // (log N + (log log N)^2)^2
};

/// Throws std::invalid_argument for N <= 2.
AsymptoticBounds asymptotic_bounds(std::uint64_t level);
/// Throws std::invalid_argument unless log_level > 1.
AsymptoticBounds asymptotic_bounds_from_log(const Real& log_level);

struct BoundReport {
  std::uint64_t level = 0;
  std::uint64_t smallest_prime = 0;
  std::uint64_t murty = 0;
  Real main;
  std::optional<AsymptoticBounds> asymptotic;  // N >= 3 only
};

BoundReport bound_report(std::uint64_t level);

struct DusartReport {
  bool pass = true;
  std::size_t points_checked = 0;
  std::size_t violations = 0;
  /// min over checked points of 3.965 x / log^2 x - |theta(x) - x|.
  Real worst_slack;
  std::uint64_t worst_prime = 0;
  bool worst_is_left_limit = false;
};

/// Checks Dusart's inequality at every prime p <= limit, both at theta(p)
/// and at the left limit theta(p^-).  Requires limit >= 10.
DusartReport verify_dusart(const PrimeTable& table);

struct ThetaViolation {
  std::uint64_t prime;       // theta(2x + 2) = theta(prime) on the segment
  std::uint64_t next_prime;  // segment ends where 2x + 2 reaches this (or the table limit)
  Real margin;
};

struct LemmaThetaReport {
  bool pass = true;
  std::size_t segments_checked = 0;
  std::vector<ThetaViolation> violations;
  Real min_margin;
  std::uint64_t min_margin_prime = 0;
};

/// theta(2x + 2) > x for every x >= 0 with 2x + 2 <= limit.  On
/// [(p-2)/2, (p'-2)/2) the left side is theta(p), so the segment passes
/// iff theta(p) >= (p'-2)/2 (the supremum is not attained).  The final
/// segment up to the table limit is closed and needs strict inequality.
/// Requires limit >= 5.
LemmaThetaReport verify_lemma_theta(const PrimeTable& table);

/// Interval endpoint carried exactly: either a rational or log of an integer.
struct Endpoint {
  enum class Kind { Rational, LogOfInteger };
  Kind kind = Kind::Rational;
  mpq_class rational;    // Kind::Rational
  mpz_class log_of;      // Kind::LogOfInteger
  Real value;

  static Endpoint from_rational(const mpq_class& q);
  static Endpoint from_log(const mpz_class& n);
  std::string describe() const;  // "3/2", "log 210"
};

/// Half-open [lo, hi) on which theta(2x) <= x.
struct FailureInterval {
  Endpoint lo;
  Endpoint hi;
};

/// Maximal intervals in [0, x_max) where theta(2x) > x fails.  Requires
/// 2 * x_max <= table.limit().
std::vector<FailureInterval> failure_intervals(const PrimeTable& table, const mpq_class& x_max);
std::vector<FailureInterval> failure_intervals(const PrimeTable& table);  // x_max = 8.356

/// Levels N >= 1 with theta(2 log N) <= log N, i.e. where no prime
/// p <= 2 log N is guaranteed to miss N.  Needs table limit >= 17.
std::vector<std::uint64_t> exceptional_levels(const PrimeTable& table);

/// Direct test of theta(2 log N) <= log N.  Needs 2 log N <= table limit.
bool is_exceptional_level(std::uint64_t level, const PrimeTable& table);

/// "{1, ..., 4, 6, ..., 12, ...}" with runs of three or more collapsed.
std::string format_level_set(const std::vector<std::uint64_t>& levels);

}  // namespace levelone
