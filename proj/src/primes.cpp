#include "levelone/primes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace levelone {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");

  // Odd-only sieve of Eratosthenes; composite[i] stands for 2i + 1.
  std::vector<bool> composite(limit / 2 + 1, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[m / 2] = true;
  }
  primes_.push_back(2);
  for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i)
    if (!composite[i]) primes_.push_back(2 * i + 1);

  theta_prefix_.reserve(primes_.size() + 1);
  theta_prefix_.emplace_back(0);
  for (const std::uint64_t p : primes_) theta_prefix_.push_back(theta_prefix_.back() + log(Real(p)));
}

std::uint64_t PrimeTable::prime(std::size_t k) const {
  if (k == 0 || k > primes_.size())
    throw std::out_of_range("PrimeTable: p_" + std::to_string(k) + " beyond limit " +
                            std::to_string(limit_));
  return primes_[k - 1];
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("PrimeTable: " + std::to_string(n) + " beyond limit");
  return std::binary_search(primes_.begin(), primes_.end(), n);
}

std::size_t PrimeTable::pi(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("PrimeTable: " + std::to_string(n) + " beyond limit");
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), n) - primes_.begin());
}

Real PrimeTable::theta(std::uint64_t x) const { return theta_prefix_[pi(x)]; }

Real PrimeTable::theta(const Real& x) const {
  if (x < 2) return Real(0);
  if (x > limit_) throw std::out_of_range("theta: x beyond table limit " + std::to_string(limit_));
  return theta(static_cast<std::uint64_t>(floor(x)));
}

std::uint64_t smallest_nondivisor_prime(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("smallest_nondivisor_prime: n must be >= 1");
  for (std::uint64_t p = 2;; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime && n % p != 0) return p;
  }
}

std::uint64_t smallest_nondivisor_prime(const mpz_class& n, const PrimeTable& table) {
  if (n <= 0) throw std::invalid_argument("smallest_nondivisor_prime: n must be >= 1");
  const auto& primes = table.primes();
  // Primes are taken in order, several per pass over n: one mpz reduction
  // modulo a word-sized product of consecutive primes, then word arithmetic.
  std::size_t i = 0;
  while (i < primes.size()) {
    std::size_t j = i;
    unsigned long modulus = 1;
    while (j < primes.size() && modulus <= ~0UL / primes[j]) modulus *= primes[j++];
    const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), modulus);
    for (; i < j; ++i)
      if (r % primes[i] != 0) return primes[i];
  }
  throw std::out_of_range("smallest_nondivisor_prime: every prime up to " +
                          std::to_string(table.limit()) + " divides n");
}

PrimorialRow primorial_row(std::size_t k, const PrimeTable& table) {
  if (k == 0) throw std::invalid_argument("primorial_row: k must be >= 1");
  if (k + 1 > table.count())
    throw std::out_of_range("primorial_row: p_" + std::to_string(k + 1) + " beyond table limit " +
                            std::to_string(table.limit()));
  return PrimorialRow{k, table.prime(k), table.prime(k + 1) - table.prime(k), table.theta_at_index(k)};
}

mpz_class primorial(std::size_t k, const PrimeTable& table) {
  mpz_class n = 1;
  for (std::size_t i = 1; i <= k; ++i) n *= static_cast<unsigned long>(table.prime(i));
  return n;
}

}  // namespace levelone
