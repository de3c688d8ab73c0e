#!/usr/bin/env python3
"""Independent reference values for the level-1 test suite.

Everything here is computed by routes that do not share code with the C++
library: Delta from the product q*prod(1-q^n)^24, Eisenstein series from
divisor sums, the Miller basis by sympy row reduction of the full monomial
spanning set, characteristic polynomials by sympy determinants.
"""
from fractions import Fraction
from math import comb
import sympy


def bernoulli(n):
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(comb(m + 1, j) * b[j] for j in range(m)) / Fraction(m + 1))
    return b[n]


def sigma(n, r):
    return sum(d ** r for d in range(1, n + 1) if n % d == 0)


def eisenstein(k, prec):
    c = Fraction(-2 * k) / bernoulli(k)
    assert c.denominator == 1
    return [1] + [int(c) * sigma(n, k - 1) for n in range(1, prec + 1)]


def mul(f, g):
    p = min(len(f), len(g))
    return [sum(f[i] * g[n - i] for i in range(n + 1)) for n in range(p)]


def delta_product(prec):
    s = [1] + [0] * prec
    for n in range(1, prec + 1):
        for _ in range(24):
            s = [s[i] - (s[i - n] if i >= n else 0) for i in range(prec + 1)]
    return [0] + s[:prec]


def miller_basis(k, prec):
    d = dim_by_monomials(k)
    if d <= 0:
        return []
    e4, e6, dl = eisenstein(4, prec), eisenstein(6, prec), delta_product(prec)
    rows = []
    for i in range(1, k // 12 + 1):
        rest = k - 12 * i
        for a in range(rest // 4 + 1):
            if (rest - 4 * a) % 6 == 0:
                b = (rest - 4 * a) // 6
                f = [1] + [0] * prec
                for _ in range(i):
                    f = mul(f, dl)
                for _ in range(a):
                    f = mul(f, e4)
                for _ in range(b):
                    f = mul(f, e6)
                rows.append(f)
    m = sympy.Matrix(rows).rref()[0]
    out = [list(m.row(r)) for r in range(d)]
    for f in out:
        assert all(sympy.Rational(x).q == 1 for x in f)
    return [[int(x) for x in f] for f in out]


def dim_by_monomials(k):
    if k < 4 or k % 2:
        return 0
    return sum(1 for a in range(k // 4 + 1) if (k - 4 * a) % 6 == 0) - 1


def t2_matrix(k):
    d = dim_by_monomials(k)
    basis = miller_basis(k, 2 * d)
    m = sympy.zeros(d, d)
    for i, f in enumerate(basis):
        for j in range(d):
            n = j + 1
            m[j, i] = f[2 * n] + (2 ** (k - 1) * f[n // 2] if n % 2 == 0 else 0)
    return m


if __name__ == "__main__":
    print("B12 =", bernoulli(12))
    print("E4 prec 3 =", eisenstein(4, 3))
    print("E6 prec 2 =", eisenstein(6, 2))
    print("Delta prec 10 =", delta_product(10))
    print("dims 12,26,2 =", [dim_by_monomials(k) for k in (12, 26, 2)])
    for k in (12, 16, 18, 20, 22, 26):
        print("eigenform", k, miller_basis(k, 12)[0][1:12])
    print("miller 24 prec 4 =", miller_basis(24, 4))
    for k in (12, 16, 24, 36, 48):
        m = t2_matrix(k)
        x = sympy.symbols("x")
        cp = sympy.Poly((x * sympy.eye(m.shape[0]) - m).det(), x)
        print("k", k, "trace", m.trace(), "charpoly", cp.all_coeffs(),
              "irreducible", cp.is_irreducible)
    import math
    print("log 210 =", sympy.N(sympy.log(210), 30))
    print("4(log10+1)^2 =", sympy.N(4 * (sympy.log(10) + 1) ** 2, 30))
    print("0.5*exp(sqrt(7.93)) =", sympy.N(sympy.exp(sympy.sqrt(sympy.Rational(793, 100))) / 2, 20))
