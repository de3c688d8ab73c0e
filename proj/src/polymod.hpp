#pragma once

// Dense polynomials over F_p for p < 2^32, coefficients stored low degree
// first with no trailing zeros (the zero polynomial is empty).

#include <cstdint>
#include <vector>

namespace levelone::polymod {

using Poly = std::vector<std::uint64_t>;

void normalize(Poly& f);
int degree(const Poly& f);  // -1 for zero

Poly sub(const Poly& f, const Poly& g, std::uint64_t p);
Poly mul(const Poly& f, const Poly& g, std::uint64_t p);
Poly rem(Poly f, const Poly& g, std::uint64_t p);
Poly quot(Poly f, const Poly& g, std::uint64_t p);
Poly derivative(const Poly& f, std::uint64_t p);

/// Monic gcd.
Poly gcd(Poly f, Poly g, std::uint64_t p);

/// base^e mod m.
Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p);

/// Degrees of the irreducible factors of a monic squarefree f, one entry per
/// factor, in nondecreasing order.  Distinct-degree factorization.
std::vector<int> factor_degrees(Poly f, std::uint64_t p);

}  // namespace levelone::polymod
