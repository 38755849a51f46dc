from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from common.exceptions import DimensionMismatchException, ValidationException


@dataclass(frozen=True)
class GradedSymbol:
    """A named generator with a weighted degree and optional nilpotency (symbol^N = 0)."""

    name: str
    degree: int = 0
    nilpotency: Optional[int] = None

    def __post_init__(self):
        if not self.name or not self.name.replace("_", "").isalnum():
            raise ValidationException(message=f"invalid symbol name {self.name!r}")
        if self.degree < 0:
            raise ValidationException(message=f"negative degree for {self.name}")
        if self.nilpotency is not None and self.nilpotency < 1:
            raise ValidationException(message=f"nilpotency of {self.name} must be positive")


@dataclass(frozen=True)
class SymbolContext:
    """
    Ring context shared by polynomials and series: an ordered tuple of graded symbols
    over an exact domain (ZZ for integer pipelines, QQ otherwise).
    """

    symbols: Tuple[GradedSymbol, ...] = ()
    domain: object = field(default=QQ)

    def __post_init__(self):
        names = [s.name for s in self.symbols]
        if len(set(names)) != len(names):
            raise ValidationException(message=f"duplicate symbol names in {names}")
        if self.domain not in (ZZ, QQ):
            raise ValidationException(message="coefficient domain must be ZZ or QQ")

    @classmethod
    def of(cls, symbols: Iterable[GradedSymbol], domain=QQ) -> "SymbolContext":
        return cls(tuple(symbols), domain)

    @classmethod
    def chern(cls, count: int, prefix: str = "c", domain=ZZ) -> "SymbolContext":
        """c_1..c_count with deg c_i = i."""
        return cls(tuple(GradedSymbol(f"{prefix}_{i}", i) for i in range(1, count + 1)), domain)

    @classmethod
    def z_variables(cls, k: int, domain=QQ, prefix: str = "z") -> "SymbolContext":
        return cls(tuple(GradedSymbol(f"{prefix}_{i}", 1) for i in range(1, k + 1)), domain)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(s.name for s in self.symbols)

    @property
    def size(self) -> int:
        return len(self.symbols)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(s.degree for s in self.symbols)

    @property
    def nilpotent_positions(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(
            (pos, s.nilpotency) for pos, s in enumerate(self.symbols) if s.nilpotency is not None
        )

    @property
    def ring(self) -> PolyRing:
        return _ring(self.names, self.domain)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise DimensionMismatchException(message=f"symbol {name!r} not in context {self.names}")

    def with_domain(self, domain) -> "SymbolContext":
        return SymbolContext(self.symbols, domain)

    def extended(self, extra: Sequence[GradedSymbol]) -> "SymbolContext":
        return SymbolContext(self.symbols + tuple(extra), self.domain)

    def admits(self, exponents: Sequence[int]) -> bool:
        """False when some exponent reaches its symbol's nilpotency."""
        for pos, order in self.nilpotent_positions:
            if exponents[pos] >= order:
                return False
        return True

    def ring_monomial(self, exponents: Sequence[int]) -> Tuple[int, ...]:
        return tuple(exponents) if self.symbols else (0,)

    def context_monomial(self, monom: Tuple[int, ...]) -> Tuple[int, ...]:
        return monom[: self.size]

    def describe(self) -> Dict[str, object]:
        return {"symbols": list(self.names), "domain": str(self.domain)}


_RINGS: Dict[Tuple[Tuple[str, ...], object], PolyRing] = {}


def _ring(names: Tuple[str, ...], domain) -> PolyRing:
    key = (names, domain)
    ring = _RINGS.get(key)
    if ring is None:
        # sympy needs at least one generator
        ring = PolyRing(list(names) or ["_unit"], domain, grlex)
        _RINGS[key] = ring
    return ring
