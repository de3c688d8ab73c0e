#include "levelone/modforms.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace levelone {

mpq_class bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<mpq_class> memo{mpq_class(1)};

  std::lock_guard<std::mutex> lock(mu);
  while (memo.size() <= n) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m.
    const unsigned m = static_cast<unsigned>(memo.size());
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (unsigned j = 0; j < m; ++j) {
      acc += binom * memo[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    memo.push_back(-acc / mpz_class(m + 1));
  }
  return memo[n];
}

IntSeries eisenstein(int k, std::size_t prec) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("eisenstein: weight must be even and >= 4, got " + std::to_string(k));

  const mpq_class factor = mpq_class(-2 * k) / bernoulli(static_cast<unsigned>(k));
  // -2k/B_k is integral for k = 4, 6, 8, 10, 14; other weights are not used here.
  if (factor.get_den() != 1)
    throw std::invalid_argument("eisenstein: E_" + std::to_string(k) +
                                " has no integral normalization with constant term 1");

  std::vector<mpz_class> sigma(prec + 1);
  for (std::size_t d = 1; d <= prec; ++d) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), d, static_cast<unsigned long>(k - 1));
    for (std::size_t m = d; m <= prec; m += d) sigma[m] += power;
  }
  sigma[0] = 1;
  for (std::size_t n = 1; n <= prec; ++n) sigma[n] *= factor.get_num();
  return IntSeries(std::move(sigma));
}

IntSeries delta(std::size_t prec) {
  const IntSeries e4 = eisenstein(4, prec);
  const IntSeries e6 = eisenstein(6, prec);
  const IntSeries num = linear(mpz_class(1), pow(e4, 3), mpz_class(-1), pow(e6, 2));
  auto q = divide_exact(num, mpz_class(1728));
  if (!q) throw std::logic_error("delta: E4^3 - E6^2 not divisible by 1728");
  return *q;
}

int dim_cusp(int k) {
  if (k < 12 || k % 2 != 0 || k == 14) return 0;
  if (k % 12 == 2) return k / 12 - 1;
  return k / 12;
}

namespace {

void require_even(int k, const char* who) {
  if (k % 2 != 0) throw std::invalid_argument(std::string(who) + ": odd weight " + std::to_string(k));
}

void require_prec(int d, std::size_t prec, const char* who) {
  if (prec < static_cast<std::size_t>(2 * d))
    throw std::invalid_argument(std::string(who) + ": precision " + std::to_string(prec) +
                                " below 2*dim = " + std::to_string(2 * d));
}

}  // namespace

MillerBasis miller_basis(int k, std::size_t prec) {
  require_even(k, "miller_basis");
  MillerBasis basis;
  basis.weight = k;
  basis.dim = dim_cusp(k);
  const int d = basis.dim;
  if (d == 0) return basis;
  require_prec(d, prec, "miller_basis");

  // k = 12d + 4a + 6b with the smallest (a, b) for this residue mod 12.
  static constexpr int kE4Exp[6] = {0, 2, 1, 0, 2, 1};
  static constexpr int kE6Exp[6] = {0, 1, 0, 1, 0, 1};
  const int r = (k % 12) / 2;
  const unsigned a = kE4Exp[r];
  const unsigned b = kE6Exp[r];

  const IntSeries e4 = eisenstein(4, prec);
  const IntSeries e6 = eisenstein(6, prec);
  const IntSeries dl = delta(prec);
  const IntSeries e6sq = mul(e6, e6);
  const IntSeries tail = mul(pow(e4, a), pow(e6, b));

  // g_j = Delta^j * (E6^2)^(d-j) * tail = q^j + O(q^{j+1}).
  std::vector<IntSeries> delta_pow;
  delta_pow.reserve(d);
  delta_pow.push_back(dl);
  for (int j = 1; j < d; ++j) delta_pow.push_back(mul(delta_pow.back(), dl));

  std::vector<IntSeries> forms;
  forms.reserve(d);
  IntSeries e6_part = tail;  // tail * (E6^2)^(d-j), starting at j = d
  for (int j = d; j >= 1; --j) {
    forms.push_back(mul(delta_pow[j - 1], e6_part));
    if (j > 1) e6_part = mul(e6_part, e6sq);
  }
  std::reverse(forms.begin(), forms.end());

  // Clear a_i(f_j) for j < i <= d, bottom row first.
  for (int j = d - 2; j >= 0; --j) {
    std::vector<mpz_class> row(forms[j].coeffs().begin(), forms[j].coeffs().end());
    for (int i = j + 1; i < d; ++i) {
      const mpz_class c = row[i + 1];
      if (c == 0) continue;
      const IntSeries& fi = forms[i];
      for (std::size_t n = i + 1; n <= prec; ++n)
        mpz_submul(row[n].get_mpz_t(), c.get_mpz_t(), fi[n].get_mpz_t());
    }
    forms[j] = IntSeries(std::move(row));
  }
  basis.forms = std::move(forms);
  return basis;
}

MillerBasis miller_basis_by_elimination(int k, std::size_t prec) {
  require_even(k, "miller_basis_by_elimination");
  MillerBasis basis;
  basis.weight = k;
  basis.dim = dim_cusp(k);
  const int d = basis.dim;
  if (d == 0) return basis;
  require_prec(d, prec, "miller_basis_by_elimination");

  const RatSeries e4 = to_rational(eisenstein(4, prec));
  const RatSeries e6 = to_rational(eisenstein(6, prec));
  const RatSeries dl = to_rational(delta(prec));

  std::vector<std::vector<mpq_class>> rows;
  for (int i = 1; 12 * i <= k; ++i) {
    const int rest = k - 12 * i;
    for (int a = 0; 4 * a <= rest; ++a) {
      if ((rest - 4 * a) % 6 != 0) continue;
      const int b = (rest - 4 * a) / 6;
      const RatSeries g = mul(mul(pow(dl, i), pow(e4, a)), pow(e6, b));
      rows.emplace_back(g.coeffs().begin(), g.coeffs().end());
    }
  }

  // Reduced row echelon form over Q.
  const std::size_t ncols = prec + 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const mpq_class inv = 1 / rows[rank][col];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const mpq_class c = rows[r][col];
      for (std::size_t n = col; n < ncols; ++n) rows[r][n] -= c * rows[rank][n];
    }
    ++rank;
  }
  if (rank < static_cast<std::size_t>(d))
    throw std::logic_error("miller_basis_by_elimination: spanning set has rank " +
                           std::to_string(rank) + " < " + std::to_string(d));

  for (int j = 0; j < d; ++j) {
    auto f = to_integral(RatSeries(std::move(rows[j])));
    if (!f) throw std::logic_error("miller_basis_by_elimination: non-integral echelon form");
    basis.forms.push_back(std::move(*f));
  }
  return basis;
}

}  // namespace levelone
