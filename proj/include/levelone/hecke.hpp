#pragma once

// The Hecke operator T_2 on S_k(SL2(Z)), expressed on the Miller basis.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "levelone/modforms.hpp"
#include "levelone/series.hpp"

namespace levelone {

/// Coefficient of q^j in T_2 f for f of weight k:
/// a_{2j}(f) + 2^{k-1} a_{j/2}(f), the second term only for even j.
/// Throws std::out_of_range if f is not known to q^{2j}.
mpz_class t2_coefficient(const IntSeries& f, std::size_t j, int k);

struct TraceResult {
  int dim = 0;
  mpz_class trace;
};

/// (dim S_k, trace of T_2) from the Miller basis at precision 2d.
TraceResult trace_t2(int k);
TraceResult trace_t2(const MillerBasis& basis);

/// Column i holds the Miller coordinates of T_2 f_{i+1}.
struct T2Matrix {
  int weight = 0;
  int dim = 0;
  std::vector<mpz_class> entries;  // row-major, dim x dim

  const mpz_class& at(int row, int col) const { return entries[row * dim + col]; }
  mpz_class trace() const;
};

T2Matrix t2_matrix(int k);
T2Matrix t2_matrix(const MillerBasis& basis);

/// Monic characteristic polynomial, coeffs[i] is the coefficient of x^i.
struct CharPoly {
  int weight = 0;
  std::vector<mpz_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// det(xI - M) by Berkowitz's division-free algorithm.
std::vector<mpz_class> charpoly(const T2Matrix& m);
CharPoly charpoly_t2(int k);

struct IrreducibilityVerdict {
  enum class Kind { Irreducible, Reducible, Inconclusive };
  Kind kind = Kind::Inconclusive;
  /// Irreducible: a prime modulo which the polynomial stays irreducible
  /// (0 for degree <= 1, which needs no witness).
  std::uint64_t witness_prime = 0;
  /// Reducible: degrees of a certified splitting f = g*h (not necessarily
  /// into irreducibles).
  std::vector<int> factor_degrees;
  /// Number of primes actually examined.
  int primes_tried = 0;
};

const char* to_string(IrreducibilityVerdict::Kind kind);

/// 25 primes per degree, at least 25.
int default_prime_budget(int degree);

/// Certifies irreducibility over Q of a monic integer polynomial by finding a
/// prime modulo which it is irreducible, or reducibility by a repeated factor,
/// a zero constant term, or a small integer root.  Otherwise Inconclusive.
/// Throws std::invalid_argument unless coeffs is monic of degree >= 1.
IrreducibilityVerdict check_irreducible(std::span<const mpz_class> coeffs, int prime_budget);
IrreducibilityVerdict check_irreducible(const CharPoly& p, int prime_budget);

/// a_1..a_{n_max} of the normalized eigenform for the weights with
/// dim S_k = 1 (12, 16, 18, 20, 22, 26).  Throws otherwise.
std::vector<mpz_class> eigenform_coeffs(int k, std::size_t n_max);

struct DistinguishResult {
  /// Smallest n with a_n(A) != a_n(B), if one exists up to scanned.
  std::optional<std::size_t> index;
  std::size_t scanned = 0;
};

/// Sequences hold a_1, a_2, ... (element 0 is a_1).  Throws
/// std::invalid_argument if either is shorter than n_max.
DistinguishResult distinguish(std::span<const mpz_class> a, std::span<const mpz_class> b,
                              std::size_t n_max);

}  // namespace levelone
