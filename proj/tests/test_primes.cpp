#include <doctest.h>

#include "levelone/primes.hpp"

using namespace levelone;

namespace {

bool prime_by_trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Real tolerance() { return boost::multiprecision::ldexp(Real(1), -(kRealBits - 20)); }

}  // namespace

TEST_CASE("sieve") {
  CHECK(PrimeTable(10).primes() == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(PrimeTable(2).primes() == std::vector<std::uint64_t>{2});
  CHECK(PrimeTable(100).count() == 25);
  CHECK(PrimeTable(11).primes().back() == 11);
  CHECK_THROWS_AS(PrimeTable(1), std::invalid_argument);

  const PrimeTable t(10'000);
  std::size_t count = 0;
  for (std::uint64_t n = 0; n <= 10'000; ++n) {
    CHECK(t.is_prime(n) == prime_by_trial_division(n));
    if (prime_by_trial_division(n)) ++count;
    CHECK(t.pi(n) == count);
  }
  CHECK(t.prime(1) == 2);
  CHECK(t.prime(1229) == 9973);
  CHECK_THROWS_AS(t.prime(1230), std::out_of_range);
  CHECK_THROWS_AS(t.prime(0), std::out_of_range);
}

TEST_CASE("theta") {
  const PrimeTable t(1000);
  CHECK(t.theta(Real(1)) == 0);
  CHECK(t.theta(Real(0)) == 0);
  CHECK(abs(t.theta(Real(10)) - log(Real(210))) < tolerance());
  CHECK(abs(t.theta(Real(7)) - log(Real(210))) < tolerance());
  CHECK(abs(t.theta(Real("6.999")) - log(Real(30))) < tolerance());
  CHECK(t.theta(std::uint64_t{7}) == t.theta(Real(7)));
  CHECK_THROWS_AS(t.theta(Real(1001)), std::out_of_range);

  for (std::size_t k = 1; k <= t.count(); ++k) {
    CHECK(abs(t.theta_at_index(k) - t.theta_at_index(k - 1) - log(Real(t.prime(k)))) < tolerance());
    // right-continuous: theta is flat just below the next prime
    CHECK(t.theta(Real(t.prime(k))) == t.theta_at_index(k));
    CHECK(t.theta(Real(t.prime(k)) - Real("1e-30")) == t.theta_at_index(k - 1));
  }
}

TEST_CASE("theta reproduces exact primorials") {
  const PrimeTable t(2000);
  for (std::size_t k = 1; k <= 300; ++k) {
    CAPTURE(k);
    const Real exact(primorial(k, t).get_str());
    const Real rebuilt = exp(t.theta_at_index(k));
    CHECK(abs(rebuilt / exact - 1) < tolerance());
  }
}

TEST_CASE("smallest prime not dividing N") {
  CHECK(smallest_nondivisor_prime(1) == 2);
  CHECK(smallest_nondivisor_prime(210) == 11);
  CHECK(smallest_nondivisor_prime(33) == 2);
  CHECK(smallest_nondivisor_prime(2) == 3);
  CHECK(smallest_nondivisor_prime(6) == 5);
  CHECK(smallest_nondivisor_prime(30030) == 17);
  CHECK_THROWS_AS(smallest_nondivisor_prime(0), std::invalid_argument);

  const PrimeTable t(100);
  CHECK(smallest_nondivisor_prime(mpz_class(210), t) == 11);
  CHECK(smallest_nondivisor_prime(mpz_class(1), t) == 2);
  for (std::uint64_t n = 1; n <= 5000; ++n) CHECK(smallest_nondivisor_prime(mpz_class(n), t) == smallest_nondivisor_prime(n));
  CHECK_THROWS_AS(smallest_nondivisor_prime(primorial(25, t), t), std::out_of_range);
}

TEST_CASE("primorial rows") {
  const PrimeTable t(100);
  const PrimorialRow r1 = primorial_row(1, t);
  CHECK(r1.prime == 2);
  CHECK(r1.gap == 1);
  CHECK(abs(r1.log_primorial - log(Real(2))) < tolerance());

  const PrimorialRow r4 = primorial_row(4, t);
  CHECK(r4.prime == 7);
  CHECK(r4.gap == 4);
  CHECK(abs(r4.log_primorial - log(Real(210))) < tolerance());

  const PrimorialRow r5 = primorial_row(5, t);
  CHECK(r5.prime == 11);
  CHECK(r5.gap == 2);
  CHECK(abs(r5.log_primorial - log(Real(2310))) < tolerance());

  CHECK_THROWS_AS(primorial_row(25, t), std::out_of_range);  // p_26 = 101 > 100
  CHECK_THROWS_AS(primorial_row(0, t), std::invalid_argument);

  Real prev(-1);
  for (std::size_t k = 1; k < t.count(); ++k) {
    const PrimorialRow r = primorial_row(k, t);
    CHECK(r.gap >= 1);
    if (k >= 2) CHECK(r.gap % 2 == 0);
    CHECK(r.log_primorial > prev);
    prev = r.log_primorial;
  }
}

TEST_CASE("primorial law for the first 500 primorials") {
  const PrimeTable t(5000);
  mpz_class n = 1;
  for (std::size_t k = 1; k <= 500; ++k) {
    n *= static_cast<unsigned long>(t.prime(k));
    CHECK(smallest_nondivisor_prime(n, t) == t.prime(k + 1));
  }
}
