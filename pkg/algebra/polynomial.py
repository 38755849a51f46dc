from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, ZZ
from sympy.polys.orderings import grlex

from algebra.rational import domain_convert, format_rational, to_rational
from algebra.symbols import SymbolContext
from common.exceptions import DimensionMismatchException, ValidationException

Monomial = Tuple[int, ...]


def _truncate(context: SymbolContext, poly):
    nil = context.nilpotent_positions
    if not nil or not poly:
        return poly
    ring = poly.ring
    kept = {m: c for m, c in poly.items() if all(m[p] < order for p, order in nil)}
    if len(kept) == len(poly):
        return poly
    return ring.from_dict(kept) if kept else ring.zero


class GradedPolynomial:
    """
    Sparse polynomial in the graded symbols of a SymbolContext, backed by a sympy
    PolyRing element. Nilpotent symbols are truncated after every operation.
    """

    __slots__ = ("context", "poly")

    def __init__(self, context: SymbolContext, poly=None):
        ring = context.ring
        if poly is None:
            poly = ring.zero
        elif poly.ring != ring:
            poly = poly.set_ring(ring)
        self.context = context
        self.poly = _truncate(context, poly)

    # construction

    @classmethod
    def zero(cls, context: SymbolContext) -> "GradedPolynomial":
        return cls(context)

    @classmethod
    def one(cls, context: SymbolContext) -> "GradedPolynomial":
        return cls(context, context.ring.one)

    @classmethod
    def constant(cls, context: SymbolContext, value) -> "GradedPolynomial":
        ring = context.ring
        return cls(context, ring.ground_new(domain_convert(context.domain, value)))

    @classmethod
    def symbol(cls, context: SymbolContext, name: str, power: int = 1) -> "GradedPolynomial":
        gen = context.ring.gens[context.index(name)]
        return cls(context, gen**power)

    @classmethod
    def from_terms(
        cls, context: SymbolContext, terms: Iterable[Tuple[Sequence[int], object]]
    ) -> "GradedPolynomial":
        ring = context.ring
        domain = context.domain
        acc: Dict[Monomial, object] = {}
        for exps, coeff in terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != context.size:
                raise DimensionMismatchException(
                    message=f"exponent {exps} does not match symbols {context.names}"
                )
            if any(e < 0 for e in exps):
                raise ValidationException(message=f"negative symbol exponent {exps}")
            key = context.ring_monomial(exps)
            acc[key] = acc.get(key, domain.zero) + domain_convert(domain, coeff)
        return cls(context, ring.from_dict({m: c for m, c in acc.items() if c}))

    # inspection

    @property
    def domain(self):
        return self.context.domain

    def is_zero(self) -> bool:
        return not self.poly

    def __bool__(self) -> bool:
        return bool(self.poly)

    def terms(self) -> List[Tuple[Monomial, object]]:
        """Terms in canonical graded-lex order, largest first."""
        return [
            (self.context.context_monomial(m), c) for m, c in self.poly.terms(order=grlex)
        ]

    def coefficient(self, exponents: Sequence[int]):
        return self.poly.get(self.context.ring_monomial(tuple(exponents)), self.domain.zero)

    def constant_term(self):
        return self.coefficient((0,) * self.context.size)

    def weighted_degree(self) -> Optional[int]:
        degrees = self.context.degrees
        values = {sum(e * w for e, w in zip(m, degrees)) for m, _ in self.terms()}
        return max(values) if values else None

    def is_homogeneous(self) -> bool:
        degrees = self.context.degrees
        return len({sum(e * w for e, w in zip(m, degrees)) for m, _ in self.terms()}) <= 1

    def degree_in(self, name: str) -> int:
        """Largest exponent of ``name``; -1 for the zero polynomial."""
        pos = self.context.index(name)
        return max((m[pos] for m, _ in self.terms()), default=-1)

    def is_constant(self) -> bool:
        return all(not any(m) for m, _ in self.terms())

    def content_value(self):
        """The value of a constant polynomial."""
        if not self.is_constant():
            raise ValidationException(message=f"{self} is not a constant")
        return self.constant_term()

    # conversion

    def to_context(self, context: SymbolContext) -> "GradedPolynomial":
        if context == self.context:
            return self
        return GradedPolynomial(context, self.poly.set_ring(context.ring))

    def with_domain(self, domain) -> "GradedPolynomial":
        return self.to_context(self.context.with_domain(domain))

    def evaluate(self, values: Mapping[str, object]) -> "GradedPolynomial":
        """Replace the named symbols by rational values; the context is unchanged apart from the domain."""
        target = self
        if self.domain == ZZ and any(
            QQ.denom(to_rational(v)) != 1 for v in values.values()
        ):
            target = self.with_domain(QQ)
        ring = target.context.ring
        pairs = [
            (ring.gens[target.context.index(name)], domain_convert(target.domain, value))
            for name, value in values.items()
        ]
        if not pairs:
            return target
        return GradedPolynomial(target.context, target.poly.subs(pairs))

    def substitute(self, name: str, other: "GradedPolynomial") -> "GradedPolynomial":
        self._check(other)
        gen = self.context.ring.gens[self.context.index(name)]
        return GradedPolynomial(self.context, self.poly.compose(gen, other.poly))

    # arithmetic

    def _check(self, other: "GradedPolynomial") -> None:
        if other.context != self.context:
            raise DimensionMismatchException(
                message=f"context mismatch {self.context.names} vs {other.context.names}"
            )

    def _coerce(self, other) -> "GradedPolynomial":
        if isinstance(other, GradedPolynomial):
            self._check(other)
            return other
        return GradedPolynomial.constant(self.context, other)

    def __add__(self, other):
        other = self._coerce(other)
        return GradedPolynomial(self.context, self.poly + other.poly)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return GradedPolynomial(self.context, self.poly - other.poly)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return GradedPolynomial(self.context, -self.poly)

    def __mul__(self, other):
        other = self._coerce(other)
        return GradedPolynomial(self.context, self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValidationException(message="negative powers are not polynomial")
        result = GradedPolynomial.one(self.context)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedPolynomial):
            return self.context == other.context and self.poly == other.poly
        try:
            return self.poly == self._coerce(other).poly
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash((self.context, frozenset(self.poly.items())))

    def __repr__(self):
        return f"GradedPolynomial({self})"

    def __str__(self):
        return format_polynomial(self)


def format_monomial(names: Sequence[str], exps: Sequence[int]) -> str:
    return "".join(
        name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e
    )


def format_polynomial(poly: GradedPolynomial) -> str:
    """Canonical text, e.g. ``c_1^4 + 6c_1^2c_2 - (1/2)h``."""
    names = poly.context.names
    pieces: List[str] = []
    for exps, coeff in poly.terms():
        value = to_rational(coeff)
        negative = value < 0
        magnitude = -value if negative else value
        mono = format_monomial(names, exps)
        text = format_rational(magnitude)
        if mono:
            if text == "1":
                text = ""
            elif "/" in text:
                text = f"({text})"
            text += mono
        sign = "-" if negative else "+"
        if not pieces:
            pieces.append(text if not negative else f"-{text}")
        else:
            pieces.append(f" {sign} {text}")
    return "".join(pieces) if pieces else "0"
