from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, field_validator


class VerdictEnum(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


class QTermSchema(BaseModel):
    exp: List[int]
    coeff: str

    @field_validator("coeff")
    @classmethod
    def coeff_is_integer(cls, value: str) -> str:
        try:
            return str(int(value.strip()))
        except ValueError:
            raise ValueError(f"Q coefficient must be an integer string, got {value!r}")


class QPolyFile(BaseModel):
    k: int
    terms: List[QTermSchema]

    @field_validator("k")
    @classmethod
    def k_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("k must be at least 1")
        return value


class TpEntry(BaseModel):
    i: List[int]
    tp: str


class TpTableExport(BaseModel):
    k: int
    lo: List[int]
    hi: List[int]
    entries: List[TpEntry]


class MonomialDiff(BaseModel):
    monomial: str
    expected: str
    computed: str


class Table1Row(BaseModel):
    k: int
    verdict: VerdictEnum
    polynomial: str
    differences: List[MonomialDiff] = []


class Table1Report(BaseModel):
    verdict: VerdictEnum
    passed: int
    total: int
    rows: List[Table1Row]
    warnings: List[str] = []


class PredecessorWitness(BaseModel):
    i: List[int]
    tp: str
    predecessor: Optional[List[int]] = None
    predecessor_tp: Optional[str] = None
    ratio: Optional[str] = None


class ScanReport(BaseModel):
    verdict: VerdictEnum
    k: int
    radius: int
    keys: int
    positive: int
    negatives: List[TpEntry] = []
    violations: List[PredecessorWitness] = []
    inconclusive: List[PredecessorWitness] = []
    ratio_bound: str


class RatioPair(BaseModel):
    i: List[int]
    j: List[int]
    ratio: str


class Tp3Report(BaseModel):
    verdict: VerdictEnum
    radius: int
    keys: int
    mismatches: List[List[int]] = []
    negatives: List[TpEntry] = []
    ratio_violations: List[RatioPair] = []
    max_ratio: Optional[str] = None
    predecessor_violations: List[PredecessorWitness] = []


class IdentityReport(BaseModel):
    verdict: VerdictEnum
    k: int
    partition: List[int]
    direct: str
    from_series: str
    arrangements: int
    radius: int
    tp_ratio: Optional[str] = None
    ratio_bound: Optional[str] = None
    power_bound: Optional[str] = None
    within_power_bound: Optional[bool] = None
