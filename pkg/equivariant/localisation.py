"""Fixed-point sums over ordered k-subsets and their iterated-residue counterpart."""

import random
from itertools import combinations_with_replacement, permutations
from math import comb
from typing import List, Optional, Sequence, Tuple

import structlog
from sympy.polys.domains import QQ

from algebra.builders import vandermonde
from algebra.laurent import LaurentSeries, LinearForm, combined_ring
from algebra.polynomial import GradedPolynomial
from algebra.rational import format_rational, to_rational
from algebra.residue import iterated_residue
from algebra.symbols import GradedSymbol, SymbolContext
from common.exceptions import DimensionMismatchException, ValidationException
from schemas.equivariant import OracleReport, OracleTrial, OracleVerdictEnum
from worker import WorkerManager

logger = structlog.get_logger()


def lambda_context(n: int) -> SymbolContext:
    return SymbolContext(tuple(GradedSymbol(f"lambda_{i}", 1) for i in range(1, n + 1)), QQ)


def z_context(k: int) -> SymbolContext:
    return SymbolContext.z_variables(k, QQ)


def completed(sigma: Sequence[int], n: int) -> Tuple[int, ...]:
    """sigma followed by the unused indices of range(n) in increasing order."""
    used = set(sigma)
    return tuple(sigma) + tuple(i for i in range(n) if i not in used)


def _check_q(q: GradedPolynomial, k: int) -> None:
    if q.context.size != k:
        raise DimensionMismatchException(message=f"Q must be a polynomial in {k} variables")


def fixed_point_term(q: GradedPolynomial, values: Sequence, sigma: Sequence[int]):
    k = len(sigma)
    n = len(values)
    full = completed(sigma, n)
    point = {name: values[full[m]] for m, name in enumerate(q.context.names)}
    numerator = q.evaluate(point).with_domain(QQ).content_value()
    denominator = QQ.one
    for m in range(k):
        for i in range(m + 1, n):
            denominator *= values[full[i]] - values[full[m]]
    return numerator / denominator


def fixed_point_sum(q: GradedPolynomial, lambdas: Sequence, k: int):
    """
    sum over ordered k-subsets sigma of Q(lambda_sigma) / prod_(m<=k) prod_(i>m) (lambda_sigma(i) - lambda_sigma(m)).
    """
    _check_q(q, k)
    values = [to_rational(v) for v in lambdas]
    n = len(values)
    if k > n or k < 1:
        raise ValidationException(message=f"need 1 <= k <= n, got k={k}, n={n}")
    if len(set(values)) != n:
        raise ValidationException(message="torus weights must be pairwise distinct")
    total = QQ.zero
    for sigma in permutations(range(n), k):
        total += fixed_point_term(q, values, sigma)
    return total


def residue_side(
    q: GradedPolynomial, n: int, k: int, order: Optional[Sequence[int]] = None
) -> GradedPolynomial:
    """Res prod_(m<l) (z_m - z_l) Q(z) dz / prod_l prod_i (lambda_i - z_l) with symbolic lambda."""
    _check_q(q, k)
    context = lambda_context(n)
    ring = combined_ring(k, context)
    width = context.size
    q_element = ring.from_dict({exps + (0,) * width: QQ.convert(c) for exps, c in q.terms()})
    numerator = LaurentSeries.from_ring_element(k, context, vandermonde(k, context) * q_element)
    factors: List[LinearForm] = []
    for l in range(k):
        coeffs = [0] * k
        coeffs[l] = -1
        for i in range(n):
            lam = GradedPolynomial.symbol(context, f"lambda_{i + 1}")
            factors.append(LinearForm.of(context, coeffs, lam))
    return iterated_residue(numerator, factors, order=order)


def balanced_degree(n: int, k: int) -> int:
    """deg Q for which both sides are scalars."""
    return n * k - k - comb(k, 2)


def random_q(rng: random.Random, k: int, degree: int, bound: int = 3) -> GradedPolynomial:
    context = z_context(k)
    terms = []
    for letters in combinations_with_replacement(range(k), degree):
        exps = [0] * k
        for pos in letters:
            exps[pos] += 1
        terms.append((exps, rng.randint(-bound, bound)))
    poly = GradedPolynomial.from_terms(context, terms)
    if poly.is_zero():
        poly = GradedPolynomial.from_terms(context, [(terms[0][0], 1)])
    return poly


def random_lambdas(rng: random.Random, n: int, bound: int = 20) -> List:
    values: List = []
    while len(values) < n:
        value = QQ(rng.randint(-bound, bound), rng.randint(1, 5))
        if value not in values:
            values.append(value)
    return values


def _trial(job) -> str:
    q, lambdas, k = job
    return format_rational(fixed_point_sum(q, lambdas, k))


def localisation_oracle(
    q: Optional[GradedPolynomial],
    n: int,
    k: int,
    seed: int,
    trials: int = 1,
    order: Optional[Sequence[int]] = None,
    workers: Optional[WorkerManager] = None,
) -> OracleReport:
    """
    Compares the fixed-point sum with the iterated residue at random distinct weights drawn from ``seed``.
    Without Q a random homogeneous Q of the scalar-producing degree is drawn from the same seed.
    """
    if not 1 <= k <= n:
        raise ValidationException(message=f"need 1 <= k <= n, got k={k}, n={n}")
    rng = random.Random(seed)
    if q is None:
        q = random_q(rng, k, balanced_degree(n, k))
    _check_q(q, k)
    symbolic = residue_side(q, n, k, order)
    draws = [random_lambdas(rng, n) for _ in range(trials)]
    sums = (workers or WorkerManager()).map(_trial, [(q, lambdas, k) for lambdas in draws])
    rows = []
    equal = True
    for lambdas, fixed in zip(draws, sums):
        point = {f"lambda_{i + 1}": v for i, v in enumerate(lambdas)}
        value = symbolic.evaluate(point).content_value()
        residue = format_rational(value)
        equal = equal and residue == fixed
        rows.append(
            OracleTrial(
                lambdas=[format_rational(v) for v in lambdas], fixed_point=fixed, residue=residue
            )
        )
    logger.info("localisation_oracle", k=k, n=n, seed=seed, trials=trials, equal=equal)
    return OracleReport(
        verdict=OracleVerdictEnum.EQUAL if equal else OracleVerdictEnum.DIFFERENT,
        k=k,
        n=n,
        seed=seed,
        q=str(q),
        residue=str(symbolic),
        order=None if order is None else [p + 1 for p in order],
        trials=rows,
    )
