"""Finite scans of the positivity and connectedness conjecture on Thom-series coefficients."""

from itertools import combinations_with_replacement
from typing import List, Optional, Sequence, Set, Tuple

import structlog
from sympy.polys.domains import QQ

from algebra.rational import format_rational
from common.exceptions import ValidationException
from schemas.thom import PredecessorWitness, RatioPair, ScanReport, Tp3Report, TpEntry, VerdictEnum
from thom.qpoly import QPoly
from thom.series import TpWindowTable, tp3_factorized, tp_window

logger = structlog.get_logger()

Index = Tuple[int, ...]


def _compositions(total: int, slots: Sequence[int], k: int):
    """Nonnegative vectors of length k supported on ``slots`` with the given sum."""
    if total == 0:
        yield (0,) * k
        return
    if not slots:
        return
    for choice in combinations_with_replacement(slots, total):
        vector = [0] * k
        for s in choice:
            vector[s] += 1
        yield tuple(vector)


def predecessors(i: Sequence[int]) -> Set[Index]:
    """
    All j with j^+ = i^+ - e_s for a position s of maximal positive coordinate,
    and j^- of sum |i^+| - 1 supported off j^+.
    """
    i = tuple(int(e) for e in i)
    if sum(i) != 0:
        raise ValidationException(message=f"{i} does not sum to zero")
    if not any(i):
        raise ValidationException(message="the zero vector has no predecessors")
    k = len(i)
    plus = tuple(max(e, 0) for e in i)
    top = max(plus)
    total = sum(plus) - 1
    out: Set[Index] = set()
    for s in range(k):
        if plus[s] != top:
            continue
        jplus = list(plus)
        jplus[s] -= 1
        free = [pos for pos in range(k) if jplus[pos] == 0]
        for jminus in _compositions(total, free, k):
            out.add(tuple(a - b for a, b in zip(jplus, jminus)))
    return out


def _witness(
    table: TpWindowTable, i: Index, bound
) -> Tuple[str, Optional[PredecessorWitness]]:
    """'ok', 'inconclusive' or 'violation' for a positive coefficient i, with its witness."""
    value = table[i]
    best = None
    outside = False
    for j in sorted(predecessors(i)):
        tj = table.get(j)
        if tj is None:
            outside = True
            continue
        if tj > 0:
            ratio = QQ(value, tj)
            if best is None or ratio < best[0]:
                best = (ratio, j)
    if best is not None and best[0] < bound:
        return "ok", None
    witness = PredecessorWitness(
        i=list(i),
        tp=str(value),
        predecessor=None if best is None else list(best[1]),
        predecessor_tp=None if best is None else str(table[best[1]]),
        ratio=None if best is None else format_rational(best[0]),
    )
    return ("inconclusive" if outside else "violation"), witness


def _predecessor_pass(table: TpWindowTable, bound):
    violations: List[PredecessorWitness] = []
    inconclusive: List[PredecessorWitness] = []
    for i in table.positive():
        if not any(i):
            continue
        status, witness = _witness(table, i, bound)
        if status == "violation":
            violations.append(witness)
        elif status == "inconclusive":
            inconclusive.append(witness)
    return violations, inconclusive


def scan_conjecture(k: int, radius: int, q: Optional[QPoly] = None) -> ScanReport:
    table = tp_window(k, q, radius)
    bound = QQ(k * k)
    negatives = [TpEntry(i=list(i), tp=str(v)) for i, v in table.negative().items()]
    violations, inconclusive = _predecessor_pass(table, bound)
    logger.info(
        "scan_conjecture",
        k=k,
        radius=radius,
        negatives=len(negatives),
        violations=len(violations),
        inconclusive=len(inconclusive),
    )
    return ScanReport(
        verdict=VerdictEnum.FAIL if negatives or violations else VerdictEnum.PASS,
        k=k,
        radius=radius,
        keys=sum(1 for _ in table.keys()),
        positive=len(table.positive()),
        negatives=negatives,
        violations=violations,
        inconclusive=inconclusive,
        ratio_bound=format_rational(bound),
    )


def _neighbour_ratios(table: TpWindowTable, bound):
    """Tp_(i + e_l - e_m) / Tp_i over in-box pairs where both are positive."""
    worst = None
    bad: List[RatioPair] = []
    positive = table.positive()
    k = table.k
    for i, value in positive.items():
        for l in range(k):
            for m in range(k):
                if l == m:
                    continue
                j = list(i)
                j[l] += 1
                j[m] -= 1
                tj = positive.get(tuple(j))
                if tj is None:
                    continue
                ratio = QQ(tj, value)
                if worst is None or ratio > worst:
                    worst = ratio
                if ratio >= bound:
                    bad.append(RatioPair(i=list(i), j=j, ratio=format_rational(ratio)))
    return bad, worst


def tp3_report(radius: int = 6) -> Tp3Report:
    """Cross-check of the k = 3 table against the factorized generating function."""
    if radius < 0:
        raise ValidationException(message="radius must be nonnegative")
    direct = tp_window(3, None, radius)
    factorized = tp3_factorized(radius)
    mismatches = [list(i) for i in direct.keys() if direct[i] != factorized[i]]
    bound = QQ(9)
    negatives = [TpEntry(i=list(i), tp=str(v)) for i, v in factorized.negative().items()]
    ratio_bad, worst = _neighbour_ratios(factorized, bound)
    violations, inconclusive = _predecessor_pass(factorized, bound)
    # every positive coefficient needs an in-box predecessor here, so boundary cases count
    failures = violations + inconclusive
    ok = not (mismatches or negatives or ratio_bad or failures)
    return Tp3Report(
        verdict=VerdictEnum.PASS if ok else VerdictEnum.FAIL,
        radius=radius,
        keys=sum(1 for _ in factorized.keys()),
        mismatches=mismatches,
        negatives=negatives,
        ratio_violations=ratio_bad,
        max_ratio=None if worst is None else format_rational(worst),
        predecessor_violations=failures,
    )
