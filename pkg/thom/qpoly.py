"""
Q_k numerators of the Thom generating function. Built in for k <= 5; larger k are
read from user files.
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Optional, Tuple

from pydantic import ValidationError
from sympy.polys.domains import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from algebra.builders import morin_factor_count
from algebra.laurent import LaurentSeries, combined_ring
from algebra.polynomial import GradedPolynomial
from algebra.symbols import SymbolContext
from common.exceptions import ResourceNotFoundException, ValidationException
from schemas.thom import QPolyFile

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class QPoly:
    k: int
    terms: Tuple[Tuple[Exponent, int], ...]

    def __post_init__(self):
        normalized: Dict[Exponent, int] = {}
        for exp, coeff in self.terms:
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.k or any(e < 0 for e in exp):
                raise ValidationException(message=f"bad exponent {exp} for Q_{self.k}")
            normalized[exp] = normalized.get(exp, 0) + int(coeff)
        terms = tuple(sorted((e, c) for e, c in normalized.items() if c))
        if not terms:
            raise ValidationException(message=f"Q_{self.k} is zero")
        if len({sum(e) for e, _ in terms}) != 1:
            raise ValidationException(message=f"Q_{self.k} is not homogeneous")
        object.__setattr__(self, "terms", terms)

    @property
    def degree(self) -> int:
        return sum(self.terms[0][0])

    @property
    def balanced_degree(self) -> int:
        """Degree making numerator and denominator of the generating function equal."""
        return morin_factor_count(self.k) - comb(self.k, 2)

    def check_balance(self) -> None:
        if self.degree != self.balanced_degree:
            raise ValidationException(
                message=f"Q_{self.k} has degree {self.degree}, expected {self.balanced_degree}"
            )

    def to_ring_element(self, context: SymbolContext):
        ring = combined_ring(self.k, context)
        width = context.size
        return ring.from_dict(
            {exp + (0,) * width: ring.domain.convert(c) for exp, c in self.terms}
        )

    def as_series(self, context: SymbolContext) -> LaurentSeries:
        return LaurentSeries.from_ring_element(self.k, context, self.to_ring_element(context))

    def as_polynomial(self, prefix: str = "z") -> GradedPolynomial:
        context = SymbolContext.z_variables(self.k, prefix=prefix)
        return GradedPolynomial.from_terms(context, self.terms)

    def perturbed(self, exp: Exponent, delta: int = 1) -> "QPoly":
        """Negative control: add delta * z^exp."""
        return QPoly(self.k, self.terms + ((tuple(exp), delta),))

    @classmethod
    def from_file_model(cls, model: QPolyFile) -> "QPoly":
        return cls(model.k, tuple((tuple(t.exp), int(t.coeff)) for t in model.terms))

    def to_file_model(self) -> QPolyFile:
        return QPolyFile.model_validate(
            {"k": self.k, "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.terms]}
        )


def _from_ring(k: int, element) -> QPoly:
    return QPoly(k, tuple((m, int(c)) for m, c in element.items()))


@lru_cache(maxsize=None)
def builtin_q(k: int) -> QPoly:
    if k in (1, 2, 3):
        return QPoly(k, (((0,) * k, 1),))
    ring = PolyRing([f"z_{i}" for i in range(1, k + 1)], ZZ, grlex)
    z = ring.gens
    if k == 4:
        return _from_ring(4, 2 * z[0] + z[1] - z[3])
    if k == 5:
        z1, z2, z3, z4, z5 = z
        quadratic = (
            2 * z1**2 + 3 * z1 * z2 - 2 * z1 * z5 + 2 * z2 * z3
            - z2 * z4 - z2 * z5 - z3 * z4 + z4 * z5
        )
        # cubic: linear factor times the quadratic form
        return _from_ring(5, (2 * z1 + z2 - z5) * quadratic)
    raise ResourceNotFoundException(
        message=f"no built-in Q_{k}; supply a Q polynomial file for k >= 6"
    )


def load_q_file(path: str) -> QPoly:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except FileNotFoundError:
        raise ResourceNotFoundException(message=f"Q file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ValidationException(message=f"Q file {path} is not valid JSON: {exc.msg}")
    try:
        model = QPolyFile.model_validate(payload)
    except ValidationError as exc:
        raise ValidationException(message=f"Q file {path}: {exc.errors()[0]['msg']}")
    return QPoly.from_file_model(model)


def resolve_q(k: int, q: Optional[QPoly] = None) -> QPoly:
    if q is None:
        return builtin_q(k)
    if q.k != k:
        raise ValidationException(message=f"Q polynomial is for k={q.k}, requested k={k}")
    return q

