#pragma once

// Exact truncated power series in q.  A series of precision P stores the
// coefficients of q^0 .. q^P; everything above q^P is unknown.  Binary
// operations truncate to the smaller operand precision.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace levelone {

template <class Coeff>
class Series {
 public:
  /// Zero series known up to and including q^prec.
  explicit Series(std::size_t prec) : coeffs_(prec + 1) {}

  /// Takes ownership of coefficients 0..n; the precision is n.
  explicit Series(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("Series: need at least the q^0 coefficient");
  }

  static Series one(std::size_t prec) {
    Series s(prec);
    s.coeffs_[0] = 1;
    return s;
  }

  /// q^n at the given precision (zero if n > prec).
  static Series monomial(std::size_t n, std::size_t prec) {
    Series s(prec);
    if (n <= prec) s.coeffs_[n] = 1;
    return s;
  }

  std::size_t prec() const { return coeffs_.size() - 1; }

  const Coeff& operator[](std::size_t n) const { return coeffs_[n]; }

  const Coeff& at(std::size_t n) const {
    if (n > prec())
      throw std::out_of_range("coefficient of q^" + std::to_string(n) +
                              " requested from a series known to q^" + std::to_string(prec()));
    return coeffs_[n];
  }

  std::span<const Coeff> coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient, if any.
  std::optional<std::size_t> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return i;
    return std::nullopt;
  }

  Series truncated(std::size_t prec) const {
    if (prec >= this->prec()) return *this;
    return Series(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + prec + 1));
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Coeff> coeffs_;
};

using IntSeries = Series<mpz_class>;
using RatSeries = Series<mpq_class>;

/// a*f + b*g at the common precision.
RatSeries linear(const mpq_class& a, const RatSeries& f, const mpq_class& b, const RatSeries& g);
IntSeries linear(const mpz_class& a, const IntSeries& f, const mpz_class& b, const IntSeries& g);

/// Cauchy product truncated to min(prec(f), prec(g)).
IntSeries mul(const IntSeries& f, const IntSeries& g);
RatSeries mul(const RatSeries& f, const RatSeries& g);

/// f^e at the precision of f by repeated squaring; f^0 = 1.
IntSeries pow(const IntSeries& f, unsigned e);
RatSeries pow(const RatSeries& f, unsigned e);

/// f / c coefficientwise; nullopt unless c divides every coefficient.
std::optional<IntSeries> divide_exact(const IntSeries& f, const mpz_class& c);

RatSeries to_rational(const IntSeries& f);

/// Succeeds iff every coefficient has denominator 1.
std::optional<IntSeries> to_integral(const RatSeries& f);

}  // namespace levelone
