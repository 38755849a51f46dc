from typing import List, Optional

from pydantic import BaseModel, field_validator
from sympy.polys.domains import QQ

from algebra.laurent import LaurentSeries
from algebra.polynomial import GradedPolynomial
from algebra.rational import format_rational, parse_rational
from algebra.symbols import GradedSymbol, SymbolContext
from common.exceptions import ValidationException


class SymbolSchema(BaseModel):
    name: str
    degree: int = 0
    nilpotency: Optional[int] = None


class TermSchema(BaseModel):
    exp: List[int]
    coeff: str

    @field_validator("coeff")
    @classmethod
    def coeff_is_rational(cls, value: str) -> str:
        try:
            return format_rational(parse_rational(value))
        except ValidationException as exc:
            raise ValueError(exc.message)


def _context(symbols: List[SymbolSchema], domain) -> SymbolContext:
    return SymbolContext.of(
        (GradedSymbol(s.name, s.degree, s.nilpotency) for s in symbols), domain
    )


def _header(context: SymbolContext) -> List[SymbolSchema]:
    return [SymbolSchema(name=s.name, degree=s.degree, nilpotency=s.nilpotency) for s in context.symbols]


class PolynomialSchema(BaseModel):
    symbols: List[SymbolSchema] = []
    terms: List[TermSchema] = []

    @classmethod
    def from_polynomial(cls, poly: GradedPolynomial) -> "PolynomialSchema":
        return cls(
            symbols=_header(poly.context),
            terms=[TermSchema(exp=list(m), coeff=format_rational(c)) for m, c in poly.terms()],
        )

    def to_polynomial(self, domain=QQ) -> GradedPolynomial:
        context = _context(self.symbols, domain)
        return GradedPolynomial.from_terms(
            context, ((t.exp, parse_rational(t.coeff)) for t in self.terms)
        )


class SeriesSchema(BaseModel):
    """``exp`` holds the k z-exponents followed by the symbol exponents."""

    k: int
    symbols: List[SymbolSchema] = []
    window: Optional[List[List[Optional[int]]]] = None
    terms: List[TermSchema] = []

    @classmethod
    def from_series(cls, series: LaurentSeries) -> "SeriesSchema":
        return cls(
            k=series.k,
            symbols=_header(series.context),
            window=None if series.is_exact else [list(bound) for bound in series.window],
            terms=[
                TermSchema(exp=list(key), coeff=format_rational(c))
                for key, c in sorted(series.raw.items())
            ],
        )

    def to_series(self, domain=QQ) -> LaurentSeries:
        context = _context(self.symbols, domain)
        window = None if self.window is None else [tuple(bound) for bound in self.window]
        return LaurentSeries(
            self.k,
            context,
            {tuple(t.exp): parse_rational(t.coeff) for t in self.terms},
            window,
        )
