#include "polymod.hpp"

#include <algorithm>
#include <stdexcept>

namespace levelone::polymod {
namespace {

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  // p is prime: a^(p-2).
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly sub(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = (out[i] + p - g[i]) % p;
  normalize(out);
  return out;
}

Poly mul(const Poly& f, const Poly& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = (out[i + j] + f[i] * g[j]) % p;
  }
  normalize(out);
  return out;
}

namespace {

// Long division; returns the quotient and leaves the remainder in f.
Poly divide(Poly& f, const Poly& g, std::uint64_t p) {
  if (g.empty()) throw std::domain_error("polymod: division by zero polynomial");
  const int dg = degree(g);
  const std::uint64_t lead_inv = inverse(g.back(), p);
  Poly q;
  if (degree(f) >= dg) q.assign(f.size() - g.size() + 1, 0);
  for (int i = degree(f); i >= dg; --i) {
    const std::uint64_t c = f[i] * lead_inv % p;
    if (c == 0) continue;
    q[i - dg] = c;
    for (int j = 0; j <= dg; ++j) f[i - dg + j] = (f[i - dg + j] + p - c * g[j] % p) % p;
  }
  normalize(f);
  normalize(q);
  return q;
}

}  // namespace

Poly rem(Poly f, const Poly& g, std::uint64_t p) {
  divide(f, g, p);
  return f;
}

Poly quot(Poly f, const Poly& g, std::uint64_t p) { return divide(f, g, p); }

Poly derivative(const Poly& f, std::uint64_t p) {
  Poly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * (i % p) % p);
  normalize(out);
  return out;
}

Poly gcd(Poly f, Poly g, std::uint64_t p) {
  while (!g.empty()) {
    Poly r = rem(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    const std::uint64_t inv = inverse(f.back(), p);
    for (auto& c : f) c = c * inv % p;
  }
  return f;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  result = rem(result, m, p);
  base = rem(std::move(base), m, p);
  while (e) {
    if (e & 1) result = rem(mul(result, base, p), m, p);
    e >>= 1;
    if (e) base = rem(mul(base, base, p), m, p);
  }
  return result;
}

std::vector<int> factor_degrees(Poly f, std::uint64_t p) {
  std::vector<int> degrees;
  const Poly x{0, 1};
  Poly h = rem(x, f, p);  // x^(p^i) mod f
  for (int i = 1; 2 * i <= degree(f); ++i) {
    h = powmod(h, p, f, p);
    const Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      for (int c = 0; c < degree(g) / i; ++c) degrees.push_back(i);
      f = quot(f, g, p);
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) degrees.push_back(degree(f));
  return degrees;
}

}  // namespace levelone::polymod
