"""Thom polynomials of Morin singularities from the residue formula, and the checks against the published rows."""

import json
import re
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import structlog
from sympy.polys.domains import QQ
from sympy.utilities.iterables import multiset_permutations

from algebra.builders import chern_tail, morin_factors
from algebra.rational import format_rational
from algebra.polynomial import GradedPolynomial, format_monomial
from algebra.residue import iterated_residue
from algebra.symbols import SymbolContext
from common.exceptions import (
    InvalidStateException,
    ResourceNotFoundException,
    ValidationException,
)
from core.config import settings
from schemas.thom import IdentityReport, MonomialDiff, Table1Report, Table1Row, VerdictEnum
from thom.qpoly import QPoly, resolve_q
from thom.series import TpWindowTable, generating_numerator, tp_box, tp_window
from worker import WorkerManager

logger = structlog.get_logger()

_TERM = re.compile(r"^(\d*)((?:c_\d+(?:\^\d+)?)*)$")
_FACTOR = re.compile(r"c_(\d+)(?:\^(\d+))?")


def chern_context(k: int, codim: int = 0) -> SymbolContext:
    return SymbolContext.chern(k * (codim + 1))


def thom_polynomial(
    k: int,
    codim: int = 0,
    q: Optional[QPoly] = None,
    margin: int = 0,
    check_stability: Optional[bool] = None,
) -> GradedPolynomial:
    """
    Res (-1)^k prod(z_m - z_l) Q_k / prod(z_m + z_r - z_l) * prod_l c(1/z_l) z_l^codim.
    """
    if k < 1 or codim < 0:
        raise ValidationException(message="need k >= 1 and codim >= 0")
    q = resolve_q(k, q)
    q.check_balance()
    context = chern_context(k, codim)
    numerator = generating_numerator(k, q, context)
    if k % 2:
        numerator = -numerator
    tails = [chern_tail(k, var, context, codim) for var in range(k)]
    result = iterated_residue(
        numerator,
        morin_factors(k, context),
        tails,
        margin=margin,
        check_stability=check_stability,
    )
    degree = result.weighted_degree()
    if degree is not None and (degree != k * (codim + 1) or not result.is_homogeneous()):
        raise InvalidStateException(
            message=f"Tp_{k} in codimension {codim} is not homogeneous of degree {k * (codim + 1)}"
        )
    logger.debug("thom_polynomial", k=k, codim=codim, terms=len(result.terms()))
    return result


def thom_from_window(k: int, codim: int, table: TpWindowTable) -> GradedPolynomial:
    """Reassembly: sum_i Tp_i prod_l c_(i_l + codim + 1), with c_0 = 1."""
    context = chern_context(k, codim)
    top = k * (codim + 1)
    lo = -(codim + 1)
    hi = top - codim - 1
    if any(l > lo for l in table.lo) or any(h < hi for h in table.hi):
        raise ValidationException(
            message=f"Thom-series box must contain [{lo}, {hi}] in every variable"
        )
    acc: Dict[Tuple[int, ...], int] = {}
    for i, value in table.values.items():
        exps = [0] * context.size
        ok = True
        for e in i:
            index = e + codim + 1
            if index < 0 or index > top:
                ok = False
                break
            if index:
                exps[index - 1] += 1
        if ok:
            key = tuple(exps)
            acc[key] = acc.get(key, 0) + value
    return GradedPolynomial.from_terms(context, acc.items())


def thom_from_series(k: int, codim: int = 0, q: Optional[QPoly] = None) -> GradedPolynomial:
    top = k * (codim + 1)
    table = tp_box(k, q, (-(codim + 1),) * k, (top - codim - 1,) * k)
    return thom_from_window(k, codim, table)


def parse_chern_polynomial(text: str, k: int) -> Tuple[GradedPolynomial, List[str]]:
    """Parse a golden row; returns the polynomial and warnings for suspicious terms."""
    context = SymbolContext.chern(k)
    warnings: List[str] = []
    tokens = re.split(r"\s*([+-])\s*", text.strip())
    if tokens and tokens[0] == "":
        tokens = tokens[1:]
    else:
        tokens = ["+"] + tokens
    terms = []
    for sign, body in zip(tokens[0::2], tokens[1::2]):
        body = body.replace(" ", "")
        match = _TERM.match(body)
        if not match or not match.group(2):
            raise ValidationException(message=f"cannot parse golden-table term {body!r}")
        coeff = int(match.group(1) or 1) * (-1 if sign == "-" else 1)
        exps = [0] * k
        factors = _FACTOR.findall(match.group(2))
        seen = set()
        for index, power in factors:
            index = int(index)
            if index < 1 or index > k:
                raise ValidationException(message=f"c_{index} out of range in {body!r}")
            if index in seen:
                warnings.append(f"k={k}: term {body!r} repeats c_{index}")
            seen.add(index)
            exps[index - 1] += int(power or 1)
        weight = sum((pos + 1) * e for pos, e in enumerate(exps))
        if weight != k:
            warnings.append(f"k={k}: term {body!r} has weight {weight}, expected {k}")
        terms.append((exps, coeff))
    return GradedPolynomial.from_terms(context, terms), warnings


@lru_cache(maxsize=None)
def _golden_rows(path: str) -> Dict[int, str]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except FileNotFoundError:
        raise ResourceNotFoundException(message=f"golden table data file not found: {path}")
    return {int(row["k"]): row["polynomial"] for row in payload["rows"]}


def table1_row(k: int, path: Optional[str] = None) -> Tuple[GradedPolynomial, List[str]]:
    rows = _golden_rows(path or settings.TABLE1_PATH)
    if k not in rows:
        raise ResourceNotFoundException(message=f"golden table has no row for k={k}")
    return parse_chern_polynomial(rows[k], k)


def _differences(expected: GradedPolynomial, computed: GradedPolynomial) -> List[MonomialDiff]:
    names = expected.context.names
    left = dict(expected.terms())
    right = dict(computed.terms())
    out = []
    for exps in sorted(set(left) | set(right), reverse=True):
        a, b = left.get(exps, 0), right.get(exps, 0)
        if a != b:
            out.append(
                MonomialDiff(
                    monomial=format_monomial(names, exps), expected=str(int(a)), computed=str(int(b))
                )
            )
    return out


def _verify_row(job: Tuple[int, Optional[QPoly]]) -> Table1Row:
    k, q = job
    expected, _ = table1_row(k)
    computed = thom_polynomial(k, 0, q)
    diffs = _differences(expected, computed)
    return Table1Row(
        k=k,
        verdict=VerdictEnum.FAIL if diffs else VerdictEnum.PASS,
        polynomial=str(computed),
        differences=diffs,
    )


def verify_table1(
    kmax: int,
    q_overrides: Optional[Mapping[int, QPoly]] = None,
    workers: Optional[WorkerManager] = None,
) -> Table1Report:
    if kmax < 1 or kmax > 8:
        raise ValidationException(message="golden table covers 1 <= k <= 8")
    overrides = dict(q_overrides or {})
    jobs = [(k, resolve_q(k, overrides.get(k))) for k in range(1, kmax + 1)]
    warnings: List[str] = []
    for k in range(1, kmax + 1):
        warnings.extend(table1_row(k)[1])
    rows = (workers or WorkerManager()).map(_verify_row, jobs)
    passed = sum(1 for row in rows if row.verdict == VerdictEnum.PASS)
    return Table1Report(
        verdict=VerdictEnum.PASS if passed == len(rows) else VerdictEnum.FAIL,
        passed=passed,
        total=len(rows),
        rows=rows,
        warnings=warnings,
    )


def arrangements(k: int, partition: Sequence[int]) -> List[Tuple[int, ...]]:
    """Distinct placements of the parts into k slots, zeros elsewhere."""
    vector = list(partition) + [0] * (k - len(partition))
    return [tuple(v) for v in multiset_permutations(sorted(vector))]


def table1_coeff_identity(
    k: int,
    partition: Sequence[int],
    q: Optional[QPoly] = None,
    radius: Optional[int] = None,
) -> IdentityReport:
    """coeff of c_(i_1)...c_(i_s) in Tp_k^0 against the sum of Tp_(v - 1) over arrangements v."""
    partition = sorted(int(p) for p in partition)
    if not partition or any(p < 1 for p in partition) or sum(partition) != k:
        raise ValidationException(message=f"{partition} is not a partition of {k}")
    used = max(radius or k, k)
    if radius is not None and radius < k:
        logger.info("identity.enlarge_box", requested=radius, used=used)
    table = tp_window(k, q, used)
    placements = arrangements(k, partition)
    indices = [tuple(e - 1 for e in v) for v in placements]
    series_sum = sum(table[j] for j in indices)

    direct_poly = thom_polynomial(k, 0, q)
    exps = [0] * k
    for p in partition:
        exps[p - 1] += 1
    direct = int(direct_poly.coefficient(exps))
    leading = int(direct_poly.coefficient([k] + [0] * (k - 1)))

    tp0 = table[(0,) * k]
    tp_ratio = max(QQ(table[j], tp0) for j in indices) if tp0 else None
    ratio_bound = QQ(direct, leading) if leading else None
    plus = sum(p - 1 for p in partition if p > 1)
    power_bound = QQ(k) ** (2 * plus)
    within = None if plus == 0 or ratio_bound is None else ratio_bound < power_bound

    return IdentityReport(
        verdict=VerdictEnum.PASS if direct == series_sum else VerdictEnum.FAIL,
        k=k,
        partition=partition,
        direct=str(direct),
        from_series=str(series_sum),
        arrangements=len(placements),
        radius=used,
        tp_ratio=None if tp_ratio is None else format_rational(tp_ratio),
        ratio_bound=None if ratio_bound is None else format_rational(ratio_bound),
        power_bound=format_rational(power_bound),
        within_power_bound=within,
    )
