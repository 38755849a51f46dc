from typing import List

from pydantic import BaseModel, field_validator

from algebra.rational import format_rational, parse_rational
from common.exceptions import ValidationException
from jets.curves import CurveJet
from jets.jet import Jet
from jets.reparam import Reparam


def _rationals(values: List[str]) -> List[str]:
    try:
        return [format_rational(parse_rational(v)) for v in values]
    except ValidationException as exc:
        raise ValueError(exc.message)


class JetTermSchema(BaseModel):
    exp: List[int]
    values: List[str]

    @field_validator("values")
    @classmethod
    def values_are_rational(cls, value: List[str]) -> List[str]:
        return _rationals(value)


class JetSchema(BaseModel):
    u: int
    v: int
    k: int
    terms: List[JetTermSchema] = []

    @classmethod
    def from_jet(cls, jet: Jet) -> "JetSchema":
        terms = []
        for j in range(1, jet.k + 1):
            for exp, values in jet.component(j).items():
                terms.append(
                    JetTermSchema(exp=list(exp), values=[format_rational(v) for v in values])
                )
        return cls(u=jet.u, v=jet.v, k=jet.k, terms=terms)

    def to_jet(self) -> Jet:
        return Jet.from_terms(
            self.u,
            self.v,
            self.k,
            {tuple(t.exp): [parse_rational(v) for v in t.values] for t in self.terms},
        )


class CurveJetSchema(BaseModel):
    """Columns v_1..v_k of the curve, each a list of n rationals."""

    columns: List[List[str]]

    @field_validator("columns")
    @classmethod
    def columns_are_rational(cls, value: List[List[str]]) -> List[List[str]]:
        return [_rationals(c) for c in value]

    @classmethod
    def from_curve(cls, curve: CurveJet) -> "CurveJetSchema":
        return cls(columns=[[format_rational(v) for v in col] for col in curve.columns])

    def to_curve(self) -> CurveJet:
        return CurveJet.from_columns([[parse_rational(v) for v in col] for col in self.columns])


class ReparamSchema(BaseModel):
    alphas: List[str]

    @field_validator("alphas")
    @classmethod
    def alphas_are_rational(cls, value: List[str]) -> List[str]:
        return _rationals(value)

    @classmethod
    def from_reparam(cls, phi: Reparam) -> "ReparamSchema":
        return cls(alphas=[format_rational(a) for a in phi.alphas])

    def to_reparam(self) -> Reparam:
        return Reparam(tuple(parse_rational(a) for a in self.alphas))
