#pragma once

// Sieved primes with Chebyshev theta prefix sums.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "levelone/real.hpp"

namespace levelone {

class PrimeTable {
 public:
  /// All primes <= limit (limit >= 2) and theta(p) for each of them at
  /// Real precision.
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t count() const { return primes_.size(); }

  /// p_k, 1-indexed.  Throws std::out_of_range if k exceeds count().
  std::uint64_t prime(std::size_t k) const;

  bool is_prime(std::uint64_t n) const;

  /// Number of primes <= n (n <= limit).
  std::size_t pi(std::uint64_t n) const;

  /// theta(p_k) = log(p_1 ... p_k); theta_at_index(0) = 0.
  const Real& theta_at_index(std::size_t k) const { return theta_prefix_[k]; }

  /// log p_k.
  Real log_prime(std::size_t k) const { return theta_prefix_[k] - theta_prefix_[k - 1]; }

  /// theta(x) = sum_{p <= x} log p for 0 <= x <= limit.  Throws
  /// std::out_of_range beyond the table.
  Real theta(const Real& x) const;
  Real theta(std::uint64_t x) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
  std::vector<Real> theta_prefix_;  // theta_prefix_[k] = theta(p_k)
};

/// Least prime not dividing n (n >= 1).
std::uint64_t smallest_nondivisor_prime(std::uint64_t n);

/// Same for an arbitrary-size n, trial dividing by the table's primes in
/// order.  Throws std::out_of_range if every table prime divides n.
std::uint64_t smallest_nondivisor_prime(const mpz_class& n, const PrimeTable& table);

struct PrimorialRow {
  std::size_t k = 0;
  std::uint64_t prime = 0;  // p_k
  std::uint64_t gap = 0;    // p_{k+1} - p_k
  Real log_primorial;       // theta(p_k) = log N_k
};

/// Throws std::out_of_range unless p_{k+1} is in the table.
PrimorialRow primorial_row(std::size_t k, const PrimeTable& table);

/// N_k = p_1 ... p_k exactly.
mpz_class primorial(std::size_t k, const PrimeTable& table);

}  // namespace levelone
