#include "levelone/series.hpp"

#include <algorithm>

namespace levelone {
namespace {

template <class Coeff>
Series<Coeff> linear_impl(const Coeff& a, const Series<Coeff>& f, const Coeff& b,
                          const Series<Coeff>& g) {
  const std::size_t prec = std::min(f.prec(), g.prec());
  std::vector<Coeff> out(prec + 1);
  for (std::size_t n = 0; n <= prec; ++n) out[n] = a * f[n] + b * g[n];
  return Series<Coeff>(std::move(out));
}

}  // namespace

RatSeries linear(const mpq_class& a, const RatSeries& f, const mpq_class& b, const RatSeries& g) {
  return linear_impl(a, f, b, g);
}

IntSeries linear(const mpz_class& a, const IntSeries& f, const mpz_class& b, const IntSeries& g) {
  return linear_impl(a, f, b, g);
}

IntSeries mul(const IntSeries& f, const IntSeries& g) {
  const std::size_t prec = std::min(f.prec(), g.prec());
  std::vector<mpz_class> out(prec + 1);
  const auto vf = f.valuation();
  const auto vg = g.valuation();
  if (!vf || !vg) return IntSeries(std::move(out));

  // Skipping the leading zeros matters: Delta^j has valuation j.
  for (std::size_t i = *vf; i + *vg <= prec; ++i) {
    const mpz_srcptr fi = f[i].get_mpz_t();
    if (mpz_sgn(fi) == 0) continue;
    for (std::size_t j = *vg; i + j <= prec; ++j)
      mpz_addmul(out[i + j].get_mpz_t(), fi, g[j].get_mpz_t());
  }
  return IntSeries(std::move(out));
}

RatSeries mul(const RatSeries& f, const RatSeries& g) {
  const std::size_t prec = std::min(f.prec(), g.prec());
  std::vector<mpq_class> out(prec + 1);
  for (std::size_t i = 0; i <= prec; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j <= prec; ++j) out[i + j] += f[i] * g[j];
  }
  return RatSeries(std::move(out));
}

namespace {

template <class Coeff>
Series<Coeff> pow_impl(const Series<Coeff>& f, unsigned e) {
  Series<Coeff> result = Series<Coeff>::one(f.prec());
  Series<Coeff> base = f;
  bool first = true;
  while (e > 0) {
    if (e & 1u) {
      result = first ? base : mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

}  // namespace

IntSeries pow(const IntSeries& f, unsigned e) { return pow_impl(f, e); }
RatSeries pow(const RatSeries& f, unsigned e) { return pow_impl(f, e); }

std::optional<IntSeries> divide_exact(const IntSeries& f, const mpz_class& c) {
  if (c == 0) return std::nullopt;
  std::vector<mpz_class> out(f.prec() + 1);
  for (std::size_t n = 0; n <= f.prec(); ++n) {
    if (!mpz_divisible_p(f[n].get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    mpz_divexact(out[n].get_mpz_t(), f[n].get_mpz_t(), c.get_mpz_t());
  }
  return IntSeries(std::move(out));
}

RatSeries to_rational(const IntSeries& f) {
  std::vector<mpq_class> out;
  out.reserve(f.prec() + 1);
  for (const auto& c : f.coeffs()) out.emplace_back(c);
  return RatSeries(std::move(out));
}

std::optional<IntSeries> to_integral(const RatSeries& f) {
  std::vector<mpz_class> out;
  out.reserve(f.prec() + 1);
  for (const auto& c : f.coeffs()) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  return IntSeries(std::move(out));
}

}  // namespace levelone
