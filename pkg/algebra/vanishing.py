"""Degree criteria that certify an iterated residue vanishes without computing it."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.laurent import LaurentSeries, LinearForm
from common.exceptions import ValidationException


@dataclass(frozen=True)
class VanishingCheck:
    level: int  # 1-based variable index l
    option: int
    holds: bool
    lhs: Optional[int]
    rhs: Optional[int]


@dataclass
class VanishingReport:
    checks: List[VanishingCheck] = field(default_factory=list)

    @property
    def certified(self) -> Optional[VanishingCheck]:
        for check in self.checks:
            if check.holds:
                return check
        return None

    @property
    def verdict(self) -> str:
        hit = self.certified
        if hit is None:
            return "no vanishing certified"
        return f"vanishes by option {hit.option} at l = {hit.level}"


def substituted_degree(p: LaurentSeries, subset: Sequence[int]) -> Optional[int]:
    """
    Degree in t of p after z_m -> t for m in ``subset`` (1-based) and z_m -> 1 otherwise.
    None when the substitution cancels p completely.
    """
    k = p.k
    positions = [m - 1 for m in subset]
    zero = p.context.domain.zero
    sums: Dict[Tuple[int, Tuple[int, ...]], object] = {}
    for key, coeff in p.raw.items():
        if any(e < 0 for e in key[:k]):
            raise ValidationException(message="vanishing criteria need a polynomial numerator")
        slot = (sum(key[pos] for pos in positions), key[k:])
        sums[slot] = sums.get(slot, zero) + coeff
    degrees = [degree for (degree, _), value in sums.items() if value]
    return max(degrees) if degrees else None


def form_degree(form: LinearForm, subset: Sequence[int]) -> Optional[int]:
    inside = sum(form.zcoeffs[m - 1] for m in subset)
    if inside:
        return 1
    outside = sum(a for index, a in enumerate(form.zcoeffs) if index + 1 not in subset)
    if outside or not form.constant.is_zero():
        return 0
    return None


def product_degree(factors: Sequence[LinearForm], subset: Sequence[int]) -> Optional[int]:
    total = 0
    for form in factors:
        degree = form_degree(form, subset)
        if degree is None:
            return None
        total += degree
    return total


def lead_count(factors: Sequence[LinearForm], level: int) -> int:
    """Number of factors whose highest nonzero z-index is ``level`` (1-based)."""
    return sum(1 for form in factors if form.leading_index + 1 == level)


def vanishing_predicates(p: LaurentSeries, factors: Sequence[LinearForm]) -> VanishingReport:
    if not factors:
        raise ValidationException(message="vanishing criteria need at least one denominator factor")
    k = p.k
    report = VanishingReport()
    for level in range(1, k + 1):
        tail = list(range(level, k + 1))
        p_deg = substituted_degree(p, tail)
        q_deg = product_degree(factors, tail)
        lhs = None if p_deg is None else p_deg + k - level + 1
        holds = lhs is not None and q_deg is not None and lhs < q_deg
        report.checks.append(VanishingCheck(level, 1, holds, lhs, q_deg))

        p_deg = substituted_degree(p, [level])
        q_deg = product_degree(factors, [level])
        lhs = None if p_deg is None else p_deg + 1
        holds = (
            lhs is not None
            and q_deg is not None
            and lhs < q_deg
            and q_deg == lead_count(factors, level)
        )
        report.checks.append(VanishingCheck(level, 2, holds, lhs, q_deg))
    return report
