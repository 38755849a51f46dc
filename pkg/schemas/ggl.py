from typing import List, Optional

from pydantic import BaseModel, field_validator

from algebra.rational import format_rational, parse_rational
from common.exceptions import ValidationException
from schemas.thom import VerdictEnum


class FujiwaraReport(BaseModel):
    degree: int
    leading: str
    D: str
    certified_above: str
    scan_from: int
    d_star: str


class InequalityEntry(BaseModel):
    key: str
    lhs: str
    rhs: str
    holds: bool
    note: Optional[str] = None


class InequalityCheck(BaseModel):
    item: str
    description: str
    verdict: VerdictEnum
    entries: List[InequalityEntry] = []


class InequalityReport(BaseModel):
    verdict: VerdictEnum
    n: int
    delta: str
    sample_d: str
    checks: List[InequalityCheck]


class GGLCertificateSchema(BaseModel):
    n: int
    delta: str
    coeffs: List[str]
    rho0: str
    leading_identity: bool
    leading_positive: bool
    ineq_10l: bool
    fujiwara_D: str
    d_star: str
    verdict: VerdictEnum

    @field_validator("delta")
    @classmethod
    def delta_is_rational(cls, value: str) -> str:
        try:
            return format_rational(parse_rational(value))
        except ValidationException as exc:
            raise ValueError(exc.message)
