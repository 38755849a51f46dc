"""Equivariant Poincare duals (multidegrees) of monomial ideals under a torus with weights lambda_1..lambda_r."""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Sequence, Tuple

import structlog
from sympy.polys.domains import ZZ

from algebra.polynomial import GradedPolynomial
from algebra.symbols import GradedSymbol, SymbolContext
from common.exceptions import DimensionMismatchException, InvalidStateException, ValidationException
from schemas.equivariant import ComponentEntry, MdegReport, WeightDegreeReport

logger = structlog.get_logger()

Exponent = Tuple[int, ...]


def weight_context(r: int) -> SymbolContext:
    return SymbolContext(tuple(GradedSymbol(f"lambda_{m}", 1) for m in range(1, r + 1)), ZZ)


def weight_form(context: SymbolContext, coeffs: Sequence[int]) -> GradedPolynomial:
    """sum_m coeffs[m] lambda_(m+1) as a linear polynomial."""
    if len(coeffs) != context.size:
        raise DimensionMismatchException(
            message=f"weight {list(coeffs)} has {len(coeffs)} entries, expected {context.size}"
        )
    terms = []
    for m, c in enumerate(coeffs):
        exps = [0] * context.size
        exps[m] = 1
        terms.append((exps, c))
    return GradedPolynomial.from_terms(context, terms)


@dataclass(frozen=True)
class WeightAssignment:
    """Weights eta_1..eta_N of the coordinates y_1..y_N, as integer vectors on lambda_1..lambda_r."""

    r: int
    eta: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        eta = tuple(tuple(int(c) for c in w) for w in self.eta)
        if self.r < 1:
            raise ValidationException(message="need at least one torus weight")
        if any(len(w) != self.r for w in eta):
            raise DimensionMismatchException(message=f"every weight needs {self.r} coefficients")
        object.__setattr__(self, "eta", eta)

    @property
    def N(self) -> int:
        return len(self.eta)

    @property
    def context(self) -> SymbolContext:
        return weight_context(self.r)

    def form(self, i: int) -> GradedPolynomial:
        return weight_form(self.context, self.eta[i])

    def involving(self, m: int) -> int:
        """deg(eta_1, ..., eta_N; m): how many weights carry lambda_m (1-based m)."""
        return sum(1 for w in self.eta if w[m - 1])

    def extended(self, weight: Sequence[int]) -> "WeightAssignment":
        """Prepend the weight of a new coordinate y_0."""
        return WeightAssignment(self.r, (tuple(weight),) + self.eta)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in N variables; generators are kept as a minimal antichain."""

    N: int
    generators: Tuple[Exponent, ...]

    def __post_init__(self):
        gens = set()
        for g in self.generators:
            g = tuple(int(e) for e in g)
            if len(g) != self.N or any(e < 0 for e in g):
                raise ValidationException(message=f"bad generator {g} for N={self.N}")
            gens.add(g)
        minimal = [
            g for g in gens if not any(h != g and all(a <= b for a, b in zip(h, g)) for h in gens)
        ]
        object.__setattr__(self, "generators", tuple(sorted(minimal, reverse=True)))

    @classmethod
    def of(cls, N: int, *generators: Sequence[int]) -> "MonomialIdeal":
        return cls(N, tuple(tuple(g) for g in generators))

    def contains(self, exp: Sequence[int]) -> bool:
        return any(all(a <= b for a, b in zip(g, exp)) for g in self.generators)

    def check_proper(self) -> None:
        if not self.generators:
            raise ValidationException(message="the zero ideal has no multidegree")
        if any(not any(g) for g in self.generators):
            raise ValidationException(message="the unit ideal has empty zero set")

    def extended(self) -> "MonomialIdeal":
        """Add a new first coordinate y_0 together with the relation y_0 = 0."""
        gens = [(0,) + g for g in self.generators] + [(1,) + (0,) * self.N]
        return MonomialIdeal(self.N + 1, tuple(gens))

    def union_with(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """The ideal of the union of the zero schemes: generated by the pairwise lcms."""
        if other.N != self.N:
            raise DimensionMismatchException(message="ideals live in different rings")
        gens = [tuple(max(a, b) for a, b in zip(g, h)) for g in self.generators for h in other.generators]
        return MonomialIdeal(self.N, tuple(gens))

    def codimension(self) -> int:
        return min(len(s) for s in self.top_components())

    def top_components(self) -> List[Tuple[int, ...]]:
        """The coordinate subspaces {y_i = 0, i in I} of maximal dimension in the zero set."""
        self.check_proper()
        supports = [frozenset(i for i, e in enumerate(g) if e) for g in self.generators]
        for size in range(1, self.N + 1):
            found = [
                subset
                for subset in combinations(range(self.N), size)
                if all(support & set(subset) for support in supports)
            ]
            if found:
                return found
        raise InvalidStateException(message="no transversal found for a proper ideal")

    def multiplicity(self, subset: Sequence[int]) -> int:
        """#{a in Z_+^I : y^(a+b) not in M for every b supported off I}."""
        subset = tuple(subset)
        restricted = [tuple(g[i] for i in subset) for g in self.generators]
        bounds = [max((r[pos] for r in restricted), default=0) for pos in range(len(subset))]
        count = 0
        for a in product(*(range(b + 1) for b in bounds)):
            if any(all(x <= y for x, y in zip(r, a)) for r in restricted):
                continue
            if any(a[pos] == bounds[pos] for pos in range(len(subset))):
                raise InvalidStateException(
                    message=f"coordinate subspace {subset} is not a component of finite multiplicity"
                )
            count += 1
        return count


def mdeg_monomial(ideal: MonomialIdeal, weights: WeightAssignment) -> GradedPolynomial:
    """sum over top components I of mult(p[I], M) * prod_(i in I) eta_i."""
    if weights.N != ideal.N:
        raise DimensionMismatchException(
            message=f"{weights.N} weights for an ideal in {ideal.N} variables"
        )
    context = weights.context
    total = GradedPolynomial.zero(context)
    for subset in ideal.top_components():
        term = GradedPolynomial.constant(context, ideal.multiplicity(subset))
        for i in subset:
            term = term * weights.form(i)
        total = total + term
    return total


def mdeg_report(ideal: MonomialIdeal, weights: WeightAssignment) -> MdegReport:
    mdeg = mdeg_monomial(ideal, weights)
    components = [
        ComponentEntry(coordinates=[i + 1 for i in subset], multiplicity=ideal.multiplicity(subset))
        for subset in ideal.top_components()
    ]
    return MdegReport(codimension=ideal.codimension(), components=components, mdeg=str(mdeg))


def mdeg_complete_intersection(degrees: Sequence[Sequence[int]], r: int) -> GradedPolynomial:
    """prod alpha_i; also the equivariant Euler class of a sum of characters."""
    context = weight_context(r)
    result = GradedPolynomial.one(context)
    for weight in degrees:
        result = result * weight_form(context, weight)
    return result


def weight_degree_report(ideal: MonomialIdeal, weights: WeightAssignment, m: int) -> WeightDegreeReport:
    """Compares deg_(lambda_m) mdeg with deg(eta; m) - 1; reported, never asserted."""
    if not 1 <= m <= weights.r:
        raise ValidationException(message=f"weight index {m} outside 1..{weights.r}")
    mdeg = mdeg_monomial(ideal, weights)
    degree = mdeg.degree_in(f"lambda_{m}")
    bound = weights.involving(m) - 1
    holds = degree <= bound
    if holds and degree == bound:
        message = "holds with equality"
    elif holds:
        message = "holds"
    else:
        message = "inequality not satisfied on this instance"
    logger.debug("weight_degree", m=m, degree=degree, bound=bound, holds=holds)
    return WeightDegreeReport(m=m, mdeg=str(mdeg), degree=degree, bound=bound, holds=holds, message=message)
