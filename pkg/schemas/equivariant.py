from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, field_validator


class IdealFile(BaseModel):
    N: int
    generators: List[List[int]]

    @field_validator("N")
    @classmethod
    def n_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("N must be at least 1")
        return value


class WeightsFile(BaseModel):
    r: int
    eta: List[List[int]]


class ComponentEntry(BaseModel):
    coordinates: List[int]
    multiplicity: int


class MdegReport(BaseModel):
    codimension: int
    components: List[ComponentEntry]
    mdeg: str


class WeightDegreeReport(BaseModel):
    m: int
    mdeg: str
    degree: int
    bound: int
    holds: bool
    message: str


class OracleVerdictEnum(str, Enum):
    EQUAL = "EQUAL"
    DIFFERENT = "DIFFERENT"


class OracleTrial(BaseModel):
    lambdas: List[str]
    fixed_point: str
    residue: str


class OracleReport(BaseModel):
    verdict: OracleVerdictEnum
    k: int
    n: int
    seed: int
    q: str
    residue: str
    order: Optional[List[int]] = None
    trials: List[OracleTrial]
