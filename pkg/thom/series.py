"""Thom-series coefficients Tp_i on finite exponent boxes."""

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

import structlog
from sympy.polys.domains import QQ, ZZ
from sympy.polys.ring_series import rs_mul, rs_series_inversion
from sympy.polys.rings import ring

from algebra.builders import morin_factors, vandermonde
from algebra.laurent import LaurentSeries
from algebra.rational import as_integer
from algebra.residue import laurent_coefficients
from algebra.symbols import SymbolContext
from common.exceptions import InvalidStateException, ValidationException
from schemas.thom import TpEntry, TpTableExport
from thom.qpoly import QPoly, resolve_q

logger = structlog.get_logger()

Index = Tuple[int, ...]

SCALARS = SymbolContext((), ZZ)


@dataclass(frozen=True)
class TpWindowTable:
    """Tp_i for every i with sum(i) = 0 and lo <= i <= hi; only nonzero values are stored."""

    k: int
    lo: Index
    hi: Index
    values: Mapping[Index, int]

    def __post_init__(self):
        for i in self.values:
            if sum(i) != 0:
                raise InvalidStateException(message=f"Thom-series key {i} has nonzero sum")
            if not self.in_box(i):
                raise InvalidStateException(message=f"Thom-series key {i} outside its box")

    @property
    def radius(self) -> Optional[int]:
        radii = {-lo for lo in self.lo} | set(self.hi)
        return radii.pop() if len(radii) == 1 else None

    def in_box(self, i: Sequence[int]) -> bool:
        return len(i) == self.k and all(l <= e <= h for e, l, h in zip(i, self.lo, self.hi))

    def get(self, i: Sequence[int]) -> Optional[int]:
        """None when i is outside the computed box."""
        i = tuple(i)
        if not self.in_box(i):
            return None
        return self.values.get(i, 0)

    def __getitem__(self, i: Sequence[int]) -> int:
        value = self.get(i)
        if value is None:
            raise KeyError(f"{tuple(i)} outside the box {self.lo}..{self.hi}")
        return value

    def keys(self) -> Iterator[Index]:
        """Every zero-sum vector of the box, in sorted order."""
        ranges = [range(l, h + 1) for l, h in zip(self.lo[:-1], self.hi[:-1])]
        for head in product(*ranges):
            last = -sum(head)
            if self.lo[-1] <= last <= self.hi[-1]:
                yield head + (last,)

    def positive(self) -> Dict[Index, int]:
        return {i: v for i, v in sorted(self.values.items()) if v > 0}

    def negative(self) -> Dict[Index, int]:
        return {i: v for i, v in sorted(self.values.items()) if v < 0}

    def export(self) -> TpTableExport:
        return TpTableExport(
            k=self.k,
            lo=list(self.lo),
            hi=list(self.hi),
            entries=[TpEntry(i=list(i), tp=str(v)) for i, v in sorted(self.values.items())],
        )


def generating_numerator(k: int, q: QPoly, context: SymbolContext = SCALARS) -> LaurentSeries:
    """prod_{m<l} (z_m - z_l) * Q_k as an exact series."""
    return LaurentSeries.from_ring_element(k, context, vandermonde(k, context) * q.to_ring_element(context))


def tp_box(
    k: int,
    q: Optional[QPoly],
    lo: Sequence[int],
    hi: Sequence[int],
    margin: int = 0,
    check_stability: Optional[bool] = None,
) -> TpWindowTable:
    if k < 1:
        raise ValidationException(message="k must be at least 1")
    q = resolve_q(k, q)
    q.check_balance()
    lo, hi = tuple(lo), tuple(hi)
    if len(lo) != k or len(hi) != k:
        raise ValidationException(message=f"box bounds must have {k} entries")
    series = laurent_coefficients(
        generating_numerator(k, q),
        morin_factors(k, SCALARS),
        (),
        tuple(zip(lo, hi)),
        margin=margin,
        check_stability=check_stability,
    )
    values = {key[:k]: int(c) for key, c in series.raw.items()}
    logger.debug("tp_box", k=k, lo=lo, hi=hi, nonzero=len(values))
    return TpWindowTable(k, lo, hi, values)


def tp_window(
    k: int,
    q: Optional[QPoly] = None,
    radius: int = 5,
    margin: int = 0,
    check_stability: Optional[bool] = None,
) -> TpWindowTable:
    if radius < 0:
        raise ValidationException(message="radius must be nonnegative")
    return tp_box(k, q, (-radius,) * k, (radius,) * k, margin, check_stability)


def tp2_closed_form(s: int) -> int:
    """Tp_(s,-s) for k = 2 from the one-variable expansion of (1 - x)/(1 - 2x), x = z_1/z_2."""
    if s < 0:
        return 0
    return 1 if s == 0 else 2 ** (s - 1)


def tp3_series(radius: int) -> Dict[Tuple[int, int], int]:
    """
    Coefficients of (1-a)/(1-2a) * (1-ab)/(1-2ab) * (1-b)/(1-b-ab) for a, b exponents up to radius.
    """
    R, a, b = ring("a,b", QQ)
    prec = radius + 1

    def clip(p):
        return R.from_dict({m: c for m, c in p.items() if m[0] <= radius and m[1] <= radius})

    first = rs_mul(1 - a, rs_series_inversion(1 - 2 * a, a, prec), a, prec)
    second = clip(rs_mul(1 - a * b, rs_series_inversion(1 - 2 * a * b, a, prec), a, prec))
    third = clip(rs_mul(1 - b, rs_series_inversion(1 - b - a * b, b, prec), b, prec))
    total = clip(rs_mul(clip(rs_mul(first, second, a, prec)), third, a, prec))
    return {(m[0], m[1]): as_integer(c) for m, c in total.items()}


def tp3_factorized(radius: int) -> TpWindowTable:
    """The k = 3 table rebuilt from the factorized generating function; a^p b^q -> (p, q-p, -q)."""
    values = {}
    for (p, q), c in tp3_series(radius).items():
        i = (p, q - p, -q)
        if all(abs(e) <= radius for e in i) and c:
            values[i] = c
    return TpWindowTable(3, (-radius,) * 3, (radius,) * 3, values)
