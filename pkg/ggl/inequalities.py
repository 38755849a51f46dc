"""
Exact checks of the coefficient estimates behind the positivity of the degree polynomial:
the closed forms of the first residue factor, the ratios C_(a,b), the rho-sum bounds,
the final n^(10l) comparison and the B-coefficient bound.
"""

from itertools import combinations, product
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import structlog
from sympy.polys.domains import QQ

from algebra.builders import morin_factors
from algebra.laurent import LaurentSeries, unit_vector
from algebra.polynomial import GradedPolynomial
from algebra.rational import format_rational, to_rational
from algebra.residue import laurent_coefficients
from algebra.symbols import GradedSymbol, SymbolContext
from ggl.integrand import (
    D,
    H,
    b_sequence,
    check_dimension,
    default_delta,
    ggl_context,
    ggl_numerator,
    integrand_constants,
    resolve_delta,
)
from ggl.intersection import degree_polynomial
from ggl.rho import b_bound_holds, b_box, b_coefficient, compositions, rho_window
from schemas.ggl import InequalityCheck, InequalityEntry, InequalityReport
from schemas.thom import VerdictEnum
from thom.qpoly import QPoly, resolve_q

logger = structlog.get_logger()

Index = Tuple[int, ...]


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def first_order_coefficient(n: int, delta, m: int, rho) -> object:
    """Coefficient of (dh) h^(m-1) z^i in the first factor, with rho = rho_i and m = -sum(i)."""
    alpha, _ = integrand_constants(n, delta)
    return -alpha * rho * _binom(n * n - 1, m - 1) * (2 * n * n) ** max(m - 1, 0)


def zeroth_order_coefficient(n: int, delta, m: int, rho) -> object:
    """Coefficient of h^m z^i without d in the first factor."""
    _, beta = integrand_constants(n, delta)
    top = n * n - 1
    value = QQ(_binom(top, m) * (2 * n * n) ** m)
    if m >= 1:
        value -= beta * _binom(top, m - 1) * (2 * n * n) ** (m - 1)
    return value * rho


def sample_degree(n: int) -> int:
    return 2 * n**10


def _verdict(entries: Sequence[InequalityEntry]) -> VerdictEnum:
    return VerdictEnum.PASS if all(e.holds for e in entries) else VerdictEnum.FAIL


def _key(i: Sequence[int]) -> str:
    return "(" + ",".join(str(e) for e in i) + ")"


def rho_windows(n: int, q: QPoly) -> Dict[int, Dict[Index, int]]:
    """rho_i on the box [-1, n]^n for every m = -sum(i) in 0..n."""
    box = ((-1, n),) * n
    return {m: rho_window(n, n * n - m, box, q) for m in range(n + 1)}


def first_factor_expansion(n: int, q: QPoly, delta) -> LaurentSeries:
    context = ggl_context(n)
    return laurent_coefficients(
        ggl_numerator(n, q, context, delta),
        morin_factors(n, context),
        (),
        ((-1, 1),) * n,
    )


def closed_form_check(
    n: int, delta, expansion: LaurentSeries, windows: Dict[int, Dict[Index, int]]
) -> InequalityCheck:
    context = expansion.context
    h = GradedPolynomial.symbol(context, H)
    d = GradedPolynomial.symbol(context, D)
    entries = []
    for i in product((-1, 0, 1), repeat=n):
        m = -sum(i)
        direct = expansion.coefficient(i)
        if 0 <= m <= n:
            rho = windows[m].get(i, 0)
            expected = h**m * (
                d * first_order_coefficient(n, delta, m, rho)
                + zeroth_order_coefficient(n, delta, m, rho)
            )
        else:
            expected = GradedPolynomial.zero(context)
        if direct.is_zero() and expected.is_zero():
            continue
        entries.append(
            InequalityEntry(key=f"i={_key(i)}", lhs=str(direct), rhs=str(expected), holds=direct == expected)
        )
    return InequalityCheck(
        item="a",
        description="closed forms of the first residue factor against direct expansion",
        verdict=_verdict(entries),
        entries=entries,
    )


def ratio_check(n: int, expansion: LaurentSeries, sample_d) -> InequalityCheck:
    """C_(a,b) = A_(h^m z^(a-b)) / (d A_((dh) h^(m-1) z^(a-b))) at d = sample_d."""
    context = expansion.context
    hpos, dpos = context.index(H), context.index(D)
    lower = QQ(n - 1, n)
    upper = QQ(n + 1, n)
    ratios: Dict[int, set] = {}
    for i in product((-1, 0, 1), repeat=n):
        m = -sum(i)
        if m < 1:
            continue
        poly = expansion.coefficient(i)
        first = zeroth = QQ.zero
        for exps, c in poly.terms():
            if exps[hpos] != m:
                continue
            if exps[dpos] == 1:
                first += c
            elif exps[dpos] == 0:
                zeroth += c
        if not first:
            continue
        ratios.setdefault(m, set()).add((zeroth + sample_d * first) / (sample_d * first))
    entries = []
    for m in sorted(ratios):
        for value in sorted(ratios[m]):
            entries.append(
                InequalityEntry(
                    key=f"m={m}",
                    lhs=format_rational(value),
                    rhs=f"({format_rational(lower)}, {format_rational(upper)})",
                    holds=lower < abs(value) < upper,
                )
            )
    return InequalityCheck(
        item="b",
        description=f"1 - 1/n < |C_(a,b)| < 1 + 1/n at d = {format_rational(sample_d)}",
        verdict=_verdict(entries),
        entries=entries,
    )


def rho_sum(n: int, r: int, m: int, window: Dict[Index, int]) -> int:
    """sum of rho_(a-b) over b in {0,1}^n with |b| = r, a >= 0 with |a| = r - m and a b = 0."""
    total = 0
    for ones in combinations(range(n), r):
        free = [pos for pos in range(n) if pos not in ones]
        for a in compositions(r - m, len(free)):
            i = [0] * n
            for pos in ones:
                i[pos] = -1
            for pos, e in zip(free, a):
                i[pos] = e
            total += window.get(tuple(i), 0)
    return total


def rho_sum_check(n: int, windows: Dict[int, Dict[Index, int]]) -> InequalityCheck:
    rho_0 = windows[0].get((0,) * n, 0)
    entries = []
    for r in range(n + 1):
        for m in range(r + 1):
            lhs = rho_sum(n, r, m, windows[m])
            rhs = n ** (8 * r - 7 * m) * rho_0
            if r == 0:
                entries.append(
                    InequalityEntry(key="r=0,m=0", lhs=str(lhs), rhs=str(rhs), holds=lhs == rhs, note="equality")
                )
                continue
            entries.append(InequalityEntry(key=f"r={r},m={m}", lhs=str(lhs), rhs=str(rhs), holds=lhs < rhs))
    return InequalityCheck(
        item="c",
        description="sum of rho_(a-b) < n^(8r-7m) rho_0",
        verdict=_verdict(entries),
        entries=entries,
    )


def coefficient_ratio_check(n: int, coeffs: Sequence[object]) -> InequalityCheck:
    """|p_(n+1-l)| < n^(10l) p_(n+1) for l = 1..n."""
    top = coeffs[n + 1]
    entries = []
    for l in range(1, n + 1):
        lhs = abs(coeffs[n + 1 - l])
        rhs = n ** (10 * l) * top
        entries.append(
            InequalityEntry(key=f"l={l}", lhs=format_rational(lhs), rhs=format_rational(rhs), holds=lhs < rhs)
        )
    return InequalityCheck(
        item="d",
        description="|p_(n+1-l)| < n^(10l) p_(n+1)",
        verdict=_verdict(entries),
        entries=entries,
    )


def h_tail_product(n: int, top: int) -> LaurentSeries:
    """prod_s (1 + h/z_s)^-(n+2) with every per-variable tail cut after h^top."""
    context = SymbolContext((GradedSymbol(H, 1),), QQ)
    b = b_sequence(n, top)
    result = LaurentSeries.one(n, context)
    for var in range(n):
        tail = LaurentSeries(
            n, context, {unit_vector(n, var, -j) + (j,): b[j] for j in range(top + 1)}
        )
        result = result.mul(tail)
    return result


def b_coefficient_check(n: int, top: int = 2) -> InequalityCheck:
    expansion = h_tail_product(n, top)
    entries = []
    for i in b_box(n, top):
        value = b_coefficient(i, n)
        direct = expansion.coefficient(tuple(-e for e in i)).coefficient((sum(i),))
        entries.append(
            InequalityEntry(
                key=f"i={_key(i)}",
                lhs=str(value),
                rhs=str((n + 2) ** sum(i)),
                holds=direct == value and b_bound_holds(i, n),
                note=None if direct == value else f"expansion gives {format_rational(direct)}",
            )
        )
    return InequalityCheck(
        item="B",
        description="|B_(z^i)| <= (n+2)^|i| and agreement with the expansion",
        verdict=_verdict(entries),
        entries=entries,
    )


def inequality_suite(
    n: int,
    delta=None,
    q: Optional[QPoly] = None,
    sample_d=None,
) -> InequalityReport:
    check_dimension(n)
    q = resolve_q(n, q)
    q.check_balance()
    delta = default_delta(n) if delta is None else resolve_delta(delta)
    sample_d = to_rational(sample_degree(n) if sample_d is None else sample_d)

    windows = rho_windows(n, q)
    expansion = first_factor_expansion(n, q, delta)
    poly = degree_polynomial(n, delta, q, verify=False)
    checks: List[InequalityCheck] = [
        closed_form_check(n, delta, expansion, windows),
        ratio_check(n, expansion, sample_d),
        rho_sum_check(n, windows),
        coefficient_ratio_check(n, poly.coeffs),
        b_coefficient_check(n),
    ]
    passed = all(c.verdict == VerdictEnum.PASS for c in checks)
    verdict = VerdictEnum.PASS if passed else VerdictEnum.FAIL
    logger.info(
        "inequality_suite",
        n=n,
        verdict=verdict.value,
        items={c.item: c.verdict.value for c in checks},
    )
    return InequalityReport(
        verdict=verdict,
        n=n,
        delta=format_rational(delta),
        sample_d=format_rational(sample_d),
        checks=checks,
    )
