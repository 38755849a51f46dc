"""
Independent sympy computations used as ground truth: everything is multiplied out as
rational functions, with no windowed Laurent machinery and no split of the integrand.
"""

from functools import reduce
from operator import mul

from sympy import Poly, Rational, binomial, cancel, expand, residue, series, symbols

from thom.qpoly import builtin_q


def _product(factors):
    return reduce(mul, factors, 1)


def morin_forms(z):
    k = len(z)
    return [
        z[m - 1] + z[r - 1] - z[l - 1]
        for l in range(2, k + 1)
        for m in range(1, l)
        for r in range(m, l)
        if m + r <= l
    ]


def coefficient_at_infinity(expr, variables):
    """
    Coefficient of z_1^-1 ... z_k^-1 in the expansion of a rational function in the
    domain z_1 << ... << z_k: peel off the largest variable first, each time as the
    z^-1 coefficient at infinity.
    """
    w = symbols("w")
    for z in reversed(variables):
        expr = residue(cancel(expr.subs(z, 1 / w) / w**2), w, 0)
    return expand(expr)


def one_variable_tp2(top: int):
    """Coefficients of x^0..x^top in (1 - x)/(1 - 2x)."""
    x = symbols("x")
    expansion = series((1 - x) / (1 - 2 * x), x, 0, top + 1).removeO()
    return [expansion.coeff(x, s) for s in range(top + 1)]


def ggl_degree_polynomial(n: int, delta: Rational) -> Poly:
    """
    I(n, delta, d) by brute force: Q V I(z, h) prod_l s(h/z_l) / (Morin (z_1...z_n)^n),
    with s the Segre series of a degree-d hypersurface in P^(n+1), then the h^n part times d.
    """
    z = symbols(f"z1:{n + 1}")
    h, d, t = symbols("h d t")
    total = sum(z)
    pairs = binomial(n + 1, 2)
    alpha = delta * n**2 * pairs
    beta = 2 * n**4 - n**2 * delta * (n + 2) * pairs - 2 * n**2
    integrand = (total + 2 * n**2 * h) ** (n**2 - 1) * (total - alpha * d * h - beta * h)

    q = sum(
        c * _product(zi**e for zi, e in zip(z, exps)) for exps, c in builtin_q(n).terms
    )
    vandermonde = _product(z[m] - z[l] for m in range(n) for l in range(m + 1, n))

    segre = series((1 + d * t) * (1 + t) ** (-(n + 2)), t, 0, n + 1).removeO()
    tails = [
        sum(segre.coeff(t, j) * h**j * zl ** (-j) for j in range(n + 1)) for zl in z
    ]

    # powers of h above n cannot reach the h^n coefficient
    numerator = sum(
        coeff * h**j
        for (j,), coeff in Poly(expand(q * vandermonde * integrand), h).terms()
        if j <= n
    )
    expr = numerator * _product(tails) / (
        _product(morin_forms(z)) * _product(zl**n for zl in z)
    )
    value = coefficient_at_infinity(expr, list(z))
    top = Poly(value, h).coeff_monomial(h**n)
    return Poly(expand(top * d), d, domain="QQ")
