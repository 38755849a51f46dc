"""
Iterated residue at infinity over the domain z_1 << ... << z_k.

The engine works one variable at a time, from z_k down to z_1. For the current
variable z_q it multiplies in every inverse linear form led by z_q and every extra
series whose highest variable is z_q, keeping only products whose z_q exponent can
still land inside the target box. Once z_q is handled its exponent is final, so the
box filter on z_q is exact. The geometric expansions are cut at a depth derived from
the largest z_q exponent still present, which is what makes the result independent
of any truncation window (checked by the optional stability rerun).
"""

from collections import defaultdict
from operator import add
from typing import Dict, List, Optional, Sequence, Tuple

import structlog

from algebra.laurent import (
    FlatTerms,
    LaurentSeries,
    LinearForm,
    WindowLike,
    expand_inverse_linear,
    normalize_window,
)
from algebra.polynomial import GradedPolynomial
from common.exceptions import (
    DimensionMismatchException,
    StabilityException,
    TruncationOverflowException,
    ValidationException,
)
from core.config import settings

logger = structlog.get_logger()


def _bucket(terms: FlatTerms, var: int) -> Dict[int, List[Tuple[Tuple[int, ...], object]]]:
    buckets: Dict[int, List[Tuple[Tuple[int, ...], object]]] = defaultdict(list)
    for key, coeff in terms.items():
        buckets[key[var]].append((key, coeff))
    return buckets


def _blocked(key: Tuple[int, ...], nil: Sequence[Tuple[int, int]]) -> bool:
    for pos, order in nil:
        if key[pos] >= order:
            return True
    return False


def _group_product(
    items: List[FlatTerms], var: int, tlo: int, thi: int, width: int, one, zero, nil
) -> FlatTerms:
    """Product of the group items, keeping z_var exponents that can still reach [tlo, thi]."""
    bounds = []
    for terms in items:
        if not terms:
            return {}
        exps = [key[var] for key in terms]
        bounds.append((min(exps), max(exps)))
    suffix_min = [0] * (len(items) + 1)
    suffix_max = [0] * (len(items) + 1)
    for idx in range(len(items) - 1, -1, -1):
        suffix_min[idx] = suffix_min[idx + 1] + bounds[idx][0]
        suffix_max[idx] = suffix_max[idx + 1] + bounds[idx][1]

    acc: FlatTerms = {(0,) * width: one}
    for idx, terms in enumerate(items):
        lo_ok = tlo - suffix_max[idx + 1]
        hi_ok = thi - suffix_min[idx + 1]
        buckets = _bucket(terms, var)
        shifts = sorted(buckets)
        out: FlatTerms = {}
        get = out.get
        for ka, ca in acc.items():
            ea = ka[var]
            for t in shifts:
                e = ea + t
                if e < lo_ok:
                    continue
                if e > hi_ok:
                    break
                for kb, cb in buckets[t]:
                    key = tuple(map(add, ka, kb))
                    if nil and _blocked(key, nil):
                        continue
                    out[key] = get(key, zero) + ca * cb
        acc = {key: c for key, c in out.items() if c}
        if not acc:
            return {}
    return acc


def _join(current: FlatTerms, group: FlatTerms, var: int, lo: int, hi: int, zero, nil) -> FlatTerms:
    """current x group, keeping only keys whose z_var exponent lies in [lo, hi]."""
    buckets = _bucket(group, var)
    if not buckets:
        return {}
    gmin, gmax = min(buckets), max(buckets)
    out: FlatTerms = {}
    get = out.get
    for ka, ca in current.items():
        e = ka[var]
        for t in range(max(lo - e, gmin), min(hi - e, gmax) + 1):
            bucket = buckets.get(t)
            if not bucket:
                continue
            for kb, cb in bucket:
                key = tuple(map(add, ka, kb))
                if nil and _blocked(key, nil):
                    continue
                out[key] = get(key, zero) + ca * cb
    return {key: c for key, c in out.items() if c}


def _check_extra_window(series: LaurentSeries, var: int, need_lo: int, need_hi: Optional[int]) -> None:
    for other in range(var):
        lo, hi = series.window[other]
        if lo is not None or hi is not None:
            raise TruncationOverflowException(
                message=f"extra series is truncated in z_{other + 1}; supply it exactly in that variable"
            )
    lo, hi = series.window[var]
    if lo is not None and lo > need_lo:
        raise TruncationOverflowException(
            message=f"extra series known only from z_{var + 1}^{lo}; exponent {need_lo} is needed"
        )
    if hi is not None and (need_hi is None or hi < need_hi):
        raise TruncationOverflowException(
            message=f"extra series known only up to z_{var + 1}^{hi}; exponent {need_hi} is needed"
        )


def _validate(
    numerator: LaurentSeries, factors: Sequence[LinearForm], extras: Sequence[LaurentSeries]
) -> None:
    k = numerator.k
    for form in factors:
        if form.k != k:
            raise DimensionMismatchException(
                message=f"linear factor in {form.k} variables, numerator in {k}"
            )
        if form.context != numerator.context:
            raise DimensionMismatchException(message="linear factor over a different symbol context")
        form.leading_index  # raises on a z-free factor
    for series in extras:
        if series.k != k:
            raise DimensionMismatchException(message=f"extra series in {series.k} variables, numerator in {k}")
        if series.context != numerator.context:
            raise DimensionMismatchException(message="extra series over a different symbol context")
    if not numerator.is_exact:
        raise TruncationOverflowException(
            message="numerator must be given exactly (unbounded window)"
        )


def _extract(
    numerator: LaurentSeries,
    factors: Sequence[LinearForm],
    extras: Sequence[LaurentSeries],
    target,
    margin: int,
) -> FlatTerms:
    k = numerator.k
    context = numerator.context
    width = k + context.size
    domain = context.domain
    zero, one = domain.zero, domain.one
    nil = [(k + pos, order) for pos, order in context.nilpotent_positions]

    led_by: Dict[int, List[LinearForm]] = defaultdict(list)
    for form in factors:
        led_by[form.leading_index].append(form)
    extras_at: Dict[int, List[LaurentSeries]] = defaultdict(list)
    constants: List[LaurentSeries] = []
    for series in extras:
        top = series.highest_variable()
        if top < 0:
            constants.append(series)
        else:
            extras_at[top].append(series)

    # smallest exponent change variable v can still receive once groups >= q are done
    def future_floor(v: int, q: int) -> Optional[int]:
        if led_by.get(v):
            return None
        floor = 0
        for group in range(v, q):
            for series in extras_at.get(group, ()):
                bounds = series.exponent_bounds(v)
                if bounds:
                    floor += min(bounds[0], 0)
        return floor

    current: FlatTerms = dict(numerator.raw)
    for q in range(k - 1, -1, -1):
        if not current:
            break
        lo_q, hi_q = target[q]
        forms = led_by.get(q, [])
        group_extras = extras_at.get(q, [])
        if forms or group_extras:
            exps = [key[q] for key in current]
            emin, emax = min(exps), max(exps)
            extra_bounds = [series.exponent_bounds(q) for series in group_extras]
            extra_top = sum(b[1] for b in extra_bounds)
            depth = emax + extra_top - lo_q - len(forms)
            if forms and depth < 0:
                current = {}
                break
            items: List[FlatTerms] = []
            window = [(None, None)] * k
            window[q] = (-(depth + margin) - 1, -1)
            for form in forms:
                items.append(expand_inverse_linear(form, window).raw)
            tlo, thi = lo_q - emax, hi_q - emin
            expansion_bottom = -len(forms) * (depth + margin + 1)
            for idx, series in enumerate(group_extras):
                others_top = sum(b[1] for j, b in enumerate(extra_bounds) if j != idx)
                others_bottom = sum(b[0] for j, b in enumerate(extra_bounds) if j != idx)
                need_lo = tlo - others_top + len(forms)
                need_hi = thi - others_bottom - expansion_bottom
                _check_extra_window(series, q, need_lo, need_hi)
                items.append(series.raw)
            group = _group_product(items, q, tlo, thi, width, one, zero, nil)
            logger.debug(
                "residue.group",
                variable=q + 1,
                factors=len(forms),
                extras=len(group_extras),
                depth=depth,
                group_terms=len(group),
                current_terms=len(current),
            )
            current = _join(current, group, q, lo_q, hi_q, zero, nil)
        else:
            current = {key: c for key, c in current.items() if lo_q <= key[q] <= hi_q}
        for v in range(q):
            floor = future_floor(v, q)
            hi_v = target[v][1]
            if floor is not None:
                current = {key: c for key, c in current.items() if key[v] + floor <= hi_v}

    for series in constants:
        out: FlatTerms = {}
        get = out.get
        for ka, ca in current.items():
            for kb, cb in series.raw.items():
                key = tuple(map(add, ka, kb))
                if nil and _blocked(key, nil):
                    continue
                out[key] = get(key, zero) + ca * cb
        current = {key: c for key, c in out.items() if c}
    return current


def _finite_box(k: int, box: WindowLike):
    target = normalize_window(k, box)
    for lo, hi in target:
        if lo is None or hi is None:
            raise ValidationException(message="coefficient extraction needs a finite box")
    return target


def laurent_coefficients(
    numerator: LaurentSeries,
    linear_factors: Sequence[LinearForm] = (),
    extra_series: Sequence[LaurentSeries] = (),
    box: WindowLike = 1,
    *,
    margin: int = 0,
    order: Optional[Sequence[int]] = None,
    check_stability: Optional[bool] = None,
) -> LaurentSeries:
    """
    Every Laurent coefficient of numerator / prod(linear_factors) * prod(extra_series)
    whose z-exponent lies in ``box``.

    ``order`` expands in the permuted domain z_order[0] << ... << z_order[k-1].
    """
    _validate(numerator, linear_factors, extra_series)
    k = numerator.k
    context = numerator.context
    target = _finite_box(k, box)
    inverse = None
    if order is not None:
        order = tuple(order)
        if sorted(order) != list(range(k)):
            raise ValidationException(message=f"{order} is not a permutation of {k} variables")
        numerator = numerator.permuted(order)
        linear_factors = [form.permuted(order) for form in linear_factors]
        extra_series = [series.permuted(order) for series in extra_series]
        target = tuple(target[p] for p in order)
        inverse = [0] * k
        for position, var in enumerate(order):
            inverse[var] = position

    def compute(extra_margin: int) -> LaurentSeries:
        terms = _extract(numerator, linear_factors, extra_series, target, margin + extra_margin)
        series = LaurentSeries(k, context, terms, target, check=False)
        return series if inverse is None else series.permuted(inverse)

    result = compute(0)
    check = settings.RESIDUE_STABILITY_CHECK if check_stability is None else check_stability
    if check:
        wider = compute(settings.RESIDUE_WINDOW_MARGIN)
        if wider != result:
            raise StabilityException(
                message="Laurent coefficients changed when every window was enlarged",
                description={"margin": margin + settings.RESIDUE_WINDOW_MARGIN},
            )
    return result


def iterated_residue(
    numerator: LaurentSeries,
    linear_factors: Sequence[LinearForm] = (),
    extra_series: Sequence[LaurentSeries] = (),
    *,
    margin: int = 0,
    order: Optional[Sequence[int]] = None,
    check_stability: Optional[bool] = None,
) -> GradedPolynomial:
    """
    (-1)^k times the coefficient of z_1^-1 ... z_k^-1, so that Res dz/(z_1...z_k) = (-1)^k.
    """
    k = numerator.k
    corner = (-1,) * k
    series = laurent_coefficients(
        numerator,
        linear_factors,
        extra_series,
        ((-1, -1),) * k,
        margin=margin,
        order=order,
        check_stability=check_stability,
    )
    value = series.coefficient(corner)
    return -value if k % 2 else value
