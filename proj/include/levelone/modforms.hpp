#pragma once

// q-expansions of level-one modular forms.

#include <vector>

#include <gmpxx.h>

#include "levelone/series.hpp"

namespace levelone {

/// Bernoulli number B_n with B_1 = -1/2.  Memoized; safe to call concurrently.
mpq_class bernoulli(unsigned n);

/// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
/// Throws std::invalid_argument for odd k or k < 4.
IntSeries eisenstein(int k, std::size_t prec);

/// Delta = (E4^3 - E6^2) / 1728.
IntSeries delta(std::size_t prec);

/// dim S_k(SL2(Z)) for any integer k.
int dim_cusp(int k);

/// The Victor Miller basis of S_k(SL2(Z)): forms f_1..f_d with
/// f_j = q^j + O(q^{d+1}), all coefficients integral.
struct MillerBasis {
  int weight = 0;
  int dim = 0;
  std::vector<IntSeries> forms;
};

/// Builds the basis from the triangular generators
/// Delta^j * E6^(2(d-j)) * E4^a * E6^b and back-substitutes to echelon form.
/// Requires prec >= 2*dim_cusp(k); throws std::invalid_argument for odd k
/// or insufficient precision.  Returns an empty basis when the space is 0.
MillerBasis miller_basis(int k, std::size_t prec);

/// Same basis, built by exact rational row reduction of every product
/// Delta^i * E4^a * E6^b of weight k, followed by an integrality check.
/// Much slower; used to cross-check miller_basis.
MillerBasis miller_basis_by_elimination(int k, std::size_t prec);

}  // namespace levelone
