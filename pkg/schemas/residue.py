from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, field_validator, model_validator

from algebra.rational import format_rational, parse_rational
from common.exceptions import ValidationException
from schemas.algebra import SymbolSchema, TermSchema


class ExtraSeriesKind(str, Enum):
    CHERN = "chern"
    HYPERSURFACE = "hypersurface"


class LinearFactorSchema(BaseModel):
    """sum_l z[l] z_(l+1) plus a z-free constant polynomial in the declared symbols."""

    z: List[str]
    constant: List[TermSchema] = []

    @field_validator("z")
    @classmethod
    def z_is_rational(cls, value: List[str]) -> List[str]:
        try:
            return [format_rational(parse_rational(v)) for v in value]
        except ValidationException as exc:
            raise ValueError(exc.message)


class ExtraSeriesSchema(BaseModel):
    """
    A series attached to every residue variable: ``chern`` is c(1/z_l) z_l^shift over the
    symbols named prefix_1, prefix_2, ...; ``hypersurface`` is (1 + d h/z_l)(1 + h/z_l)^-(n+2)
    and needs symbols h and d.
    """

    name: ExtraSeriesKind
    prefix: str = "c"
    shift: int = 0
    n: Optional[int] = None

    @model_validator(mode="after")
    def hypersurface_needs_n(self) -> "ExtraSeriesSchema":
        if self.name == ExtraSeriesKind.HYPERSURFACE and (self.n is None or self.n < 1):
            raise ValueError("the hypersurface series needs a positive n")
        return self


class ResidueSpecFile(BaseModel):
    """``numerator`` exponents hold the k z-exponents followed by the symbol exponents."""

    k: int
    symbols: List[SymbolSchema] = []
    numerator: List[TermSchema]
    linear_factors: List[LinearFactorSchema] = []
    extra_series: List[ExtraSeriesSchema] = []
    order: Optional[List[int]] = None

    @field_validator("k")
    @classmethod
    def k_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("k must be at least 1")
        return value

    @model_validator(mode="after")
    def shapes_agree(self) -> "ResidueSpecFile":
        width = self.k + len(self.symbols)
        for term in self.numerator:
            if len(term.exp) != width:
                raise ValueError(f"numerator exponent {term.exp} needs {width} entries")
        for factor in self.linear_factors:
            if len(factor.z) != self.k:
                raise ValueError(f"linear factor {factor.z} needs {self.k} z-coefficients")
            for term in factor.constant:
                if len(term.exp) != len(self.symbols):
                    raise ValueError(f"constant exponent {term.exp} needs {len(self.symbols)} entries")
        if self.order is not None and sorted(self.order) != list(range(1, self.k + 1)):
            raise ValueError(f"order {self.order} is not a permutation of 1..{self.k}")
        return self


class ResidueResult(BaseModel):
    k: int
    symbols: List[str]
    residue: str
    terms: List[TermSchema]
