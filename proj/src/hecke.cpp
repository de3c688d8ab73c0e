#include "levelone/hecke.hpp"

#include <stdexcept>
#include <string>

#include "polymod.hpp"

namespace levelone {

mpz_class t2_coefficient(const IntSeries& f, std::size_t j, int k) {
  if (j == 0) throw std::invalid_argument("t2_coefficient: index must be positive");
  if (k < 1) throw std::invalid_argument("t2_coefficient: weight must be positive");
  mpz_class result = f.at(2 * j);
  if (j % 2 == 0) {
    mpz_class twist;
    mpz_mul_2exp(twist.get_mpz_t(), f.at(j / 2).get_mpz_t(), static_cast<mp_bitcnt_t>(k - 1));
    result += twist;
  }
  return result;
}

TraceResult trace_t2(const MillerBasis& basis) {
  TraceResult out{basis.dim, 0};
  for (int j = 1; j <= basis.dim; ++j)
    out.trace += t2_coefficient(basis.forms[j - 1], static_cast<std::size_t>(j), basis.weight);
  return out;
}

TraceResult trace_t2(int k) {
  if (k % 2 != 0) return {0, 0};
  return trace_t2(miller_basis(k, 2 * static_cast<std::size_t>(dim_cusp(k))));
}

mpz_class T2Matrix::trace() const {
  mpz_class t = 0;
  for (int i = 0; i < dim; ++i) t += at(i, i);
  return t;
}

T2Matrix t2_matrix(const MillerBasis& basis) {
  T2Matrix m;
  m.weight = basis.weight;
  m.dim = basis.dim;
  m.entries.resize(static_cast<std::size_t>(m.dim) * m.dim);
  // Echelon shape: the coordinate on f_{j+1} is the coefficient of q^{j+1}.
  for (int col = 0; col < m.dim; ++col)
    for (int row = 0; row < m.dim; ++row)
      m.entries[row * m.dim + col] =
          t2_coefficient(basis.forms[col], static_cast<std::size_t>(row + 1), basis.weight);
  return m;
}

T2Matrix t2_matrix(int k) {
  if (k % 2 != 0) return T2Matrix{k, 0, {}};
  return t2_matrix(miller_basis(k, 2 * static_cast<std::size_t>(dim_cusp(k))));
}

std::vector<mpz_class> charpoly(const T2Matrix& m) {
  const int n = m.dim;
  if (n == 0) return {mpz_class(1)};

  // Berkowitz: c holds the characteristic polynomial of the leading r x r
  // block, highest degree first.
  std::vector<mpz_class> c{1, -m.at(0, 0)};
  for (int r = 1; r < n; ++r) {
    // Toeplitz column [1, -a, -R S, -R M S, ..., -R M^{r-1} S].
    std::vector<mpz_class> t(r + 2);
    t[0] = 1;
    t[1] = -m.at(r, r);
    std::vector<mpz_class> col(r), next(r);
    for (int i = 0; i < r; ++i) col[i] = m.at(i, r);
    for (int s = 2; s <= r + 1; ++s) {
      mpz_class dot = 0;
      for (int i = 0; i < r; ++i) mpz_addmul(dot.get_mpz_t(), m.at(r, i).get_mpz_t(), col[i].get_mpz_t());
      t[s] = -dot;
      if (s == r + 1) break;
      for (int i = 0; i < r; ++i) {
        next[i] = 0;
        for (int l = 0; l < r; ++l)
          mpz_addmul(next[i].get_mpz_t(), m.at(i, l).get_mpz_t(), col[l].get_mpz_t());
      }
      std::swap(col, next);
    }
    std::vector<mpz_class> updated(r + 2);
    for (int i = 0; i <= r + 1; ++i)
      for (int j = 0; j <= std::min(i, r); ++j)
        mpz_addmul(updated[i].get_mpz_t(), t[i - j].get_mpz_t(), c[j].get_mpz_t());
    c = std::move(updated);
  }
  return {c.rbegin(), c.rend()};
}

CharPoly charpoly_t2(int k) {
  const T2Matrix m = t2_matrix(k);
  return CharPoly{k, charpoly(m)};
}

const char* to_string(IrreducibilityVerdict::Kind kind) {
  switch (kind) {
    case IrreducibilityVerdict::Kind::Irreducible: return "irreducible";
    case IrreducibilityVerdict::Kind::Reducible: return "reducible";
    case IrreducibilityVerdict::Kind::Inconclusive: return "inconclusive";
  }
  return "?";
}

int default_prime_budget(int degree) { return std::max(25, 25 * degree); }

namespace {

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

mpz_class eval(std::span<const mpz_class> coeffs, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Degree of gcd(f, f') over Q; positive means a repeated factor.
int repeated_factor_degree(std::span<const mpz_class> coeffs) {
  std::vector<mpq_class> a(coeffs.begin(), coeffs.end());
  std::vector<mpq_class> b;
  for (std::size_t i = 1; i < a.size(); ++i) b.push_back(mpq_class(a[i] * static_cast<long>(i)));
  auto trim = [](std::vector<mpq_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    while (a.size() >= b.size()) {
      const mpq_class c = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// Integer roots of a monic polynomial divide the constant term.
std::optional<long> small_integer_root(std::span<const mpz_class> coeffs, long bound) {
  const mpz_class& c0 = coeffs[0];
  for (long r = 1; r <= bound; ++r) {
    if (!mpz_divisible_ui_p(c0.get_mpz_t(), static_cast<unsigned long>(r))) continue;
    if (eval(coeffs, mpz_class(r)) == 0) return r;
    if (eval(coeffs, mpz_class(-r)) == 0) return -r;
  }
  return std::nullopt;
}

}  // namespace

IrreducibilityVerdict check_irreducible(std::span<const mpz_class> coeffs, int prime_budget) {
  if (coeffs.size() < 2 || coeffs.back() != 1)
    throw std::invalid_argument("check_irreducible: need a monic polynomial of degree >= 1");
  const int d = static_cast<int>(coeffs.size()) - 1;
  using Kind = IrreducibilityVerdict::Kind;
  IrreducibilityVerdict v;

  if (d == 1) {
    v.kind = Kind::Irreducible;
    return v;
  }
  if (coeffs[0] == 0) {
    v.kind = Kind::Reducible;
    v.factor_degrees = {1, d - 1};
    return v;
  }

  std::uint64_t q = 1;
  while (v.primes_tried < prime_budget) {
    do ++q; while (!is_small_prime(q));
    ++v.primes_tried;
    polymod::Poly f(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) f[i] = mpz_fdiv_ui(coeffs[i].get_mpz_t(), q);
    polymod::normalize(f);
    // A repeated factor mod q says nothing; move on.
    if (polymod::degree(polymod::gcd(f, polymod::derivative(f, q), q)) > 0) continue;
    const auto degrees = polymod::factor_degrees(f, q);
    if (degrees.size() == 1) {
      v.kind = Kind::Irreducible;
      v.witness_prime = q;
      return v;
    }
  }

  if (const int g = repeated_factor_degree(coeffs); g > 0) {
    v.kind = Kind::Reducible;
    v.factor_degrees = {g, d - g};
    return v;
  }
  if (small_integer_root(coeffs, 1'000'000)) {
    v.kind = Kind::Reducible;
    v.factor_degrees = {1, d - 1};
    return v;
  }
  v.kind = Kind::Inconclusive;
  return v;
}

IrreducibilityVerdict check_irreducible(const CharPoly& p, int prime_budget) {
  return check_irreducible(std::span<const mpz_class>(p.coeffs), prime_budget);
}

std::vector<mpz_class> eigenform_coeffs(int k, std::size_t n_max) {
  if (dim_cusp(k) != 1)
    throw std::invalid_argument("eigenform_coeffs: dim S_" + std::to_string(k) + " is " +
                                std::to_string(dim_cusp(k)) + ", need 1");
  if (n_max == 0) throw std::invalid_argument("eigenform_coeffs: n_max must be positive");
  const MillerBasis basis = miller_basis(k, std::max<std::size_t>(n_max, 2));
  const auto c = basis.forms[0].coeffs();
  return {c.begin() + 1, c.begin() + 1 + n_max};
}

DistinguishResult distinguish(std::span<const mpz_class> a, std::span<const mpz_class> b,
                              std::size_t n_max) {
  if (a.size() < n_max || b.size() < n_max)
    throw std::invalid_argument("distinguish: sequences shorter than n_max");
  DistinguishResult r;
  r.scanned = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (a[n - 1] != b[n - 1]) {
      r.index = n;
      break;
    }
  }
  return r;
}

}  // namespace levelone
