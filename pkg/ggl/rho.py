"""The integer coefficients rho_i and the binomial coefficients B_(z^i) of the h-tail."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Dict, Iterator, Optional, Sequence, Tuple

import structlog
from sympy.polys.domains import ZZ

from algebra.builders import morin_factors, vandermonde, z_sum
from algebra.laurent import LaurentSeries
from algebra.residue import laurent_coefficients
from algebra.symbols import SymbolContext
from common.exceptions import InvalidStateException, ValidationException
from thom.qpoly import QPoly, resolve_q
from thom.series import tp_box

logger = structlog.get_logger()

Index = Tuple[int, ...]

SCALARS = SymbolContext((), ZZ)


@dataclass(frozen=True)
class RhoValue:
    """rho_i together with whether the requested power of S was the homogeneous one."""

    i: Index
    value: int
    power: int
    consistent: bool = True


def rho_numerator(n: int, power: int, q: QPoly) -> LaurentSeries:
    """Q_n prod_(m<l) (z_m - z_l) (z_1 + ... + z_n)^power / (z_1 ... z_n)^n."""
    element = vandermonde(n, SCALARS) * q.to_ring_element(SCALARS) * z_sum(n, SCALARS) ** power
    return LaurentSeries.from_ring_element(n, SCALARS, element).shift((-n,) * n)


def rho_window(
    n: int,
    power: int,
    box: Sequence[Tuple[int, int]],
    q: Optional[QPoly] = None,
    check_stability: Optional[bool] = None,
) -> Dict[Index, int]:
    """
    Every nonzero coefficient z^i, i in ``box``, of the rho generating expression with S^power.
    Only keys with sum(i) = power - n^2 can be nonzero.
    """
    if power < 0:
        raise ValidationException(message=f"negative power {power} of z_1 + ... + z_n")
    q = resolve_q(n, q)
    q.check_balance()
    series = laurent_coefficients(
        rho_numerator(n, power, q),
        morin_factors(n, SCALARS),
        (),
        tuple(box),
        check_stability=check_stability,
    )
    values = {key[:n]: int(c) for key, c in series.raw.items()}
    logger.debug("rho_window", n=n, power=power, box=list(box), nonzero=len(values))
    return values


def rho_coefficient(
    i: Sequence[int], n: int, q: Optional[QPoly] = None, power: Optional[int] = None
) -> RhoValue:
    """
    Coefficient of z^i in Q_n prod(z_m - z_l) S^(n^2 + sum i) / (prod(z_m + z_r - z_l) (z_1...z_n)^n).
    A power other than n^2 + sum(i), or a negative one, gives a flagged zero.
    """
    i = tuple(int(e) for e in i)
    if len(i) != n:
        raise ValidationException(message=f"rho index {i} needs {n} entries")
    natural = n * n + sum(i)
    if power is None:
        power = natural
    if power != natural or power < 0:
        return RhoValue(i, 0, power, consistent=False)
    value = rho_window(n, power, tuple((e, e) for e in i), q).get(i, 0)
    return RhoValue(i, value, power)


def compositions(total: int, parts: int) -> Iterator[Index]:
    """Nonnegative integer vectors of length ``parts`` summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def multinomial(total: int, parts: Sequence[int]) -> int:
    value = factorial(total)
    for p in parts:
        value //= factorial(p)
    return value


@lru_cache(maxsize=None)
def _rho0_generating(n: int, q: QPoly) -> int:
    top = n * n
    table = tp_box(n, q, (n - top,) * n, (n,) * n)
    total = 0
    for i in compositions(top, n):
        tp = table[tuple(n - e for e in i)]
        if tp:
            total += tp * multinomial(top, i)
    return total


def rho0_generating(n: int, q: Optional[QPoly] = None) -> int:
    """sum over i >= 0 with sum(i) = n^2 of Tp_((n,...,n) - i) multinomial(n^2; i)."""
    if n < 1:
        raise ValidationException(message="n must be at least 1")
    return _rho0_generating(n, resolve_q(n, q))


def rho0(n: int, q: Optional[QPoly] = None) -> int:
    value = rho_coefficient((0,) * n, n, q).value
    generated = rho0_generating(n, q)
    if value != generated:
        raise InvalidStateException(
            message=f"rho_0 differs between the residue ({value}) and the Thom series ({generated})"
        )
    return value


def b_coefficient(i: Sequence[int], n: int) -> int:
    """B_(z^i) = (-1)^|i| prod_s binom(n + i_s + 1, i_s), the z^-i h^|i| coefficient of prod (1 + h/z_s)^-(n+2)."""
    if any(e < 0 for e in i):
        raise ValidationException(message=f"B coefficients need a nonnegative index, got {list(i)}")
    value = 1
    for e in i:
        value *= comb(n + e + 1, e)
    return -value if sum(i) % 2 else value


def b_bound_holds(i: Sequence[int], n: int) -> bool:
    """|B_(z^i)| <= (n + 2)^|i|."""
    return abs(b_coefficient(i, n)) <= (n + 2) ** sum(i)


def b_box(n: int, top: int) -> Iterator[Index]:
    return product(range(top + 1), repeat=n)
