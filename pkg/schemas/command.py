from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, field_validator

from algebra.rational import format_rational, parse_rational
from common.exceptions import ValidationException


class FormatEnum(str, Enum):
    TEXT = "text"
    JSON = "json"


class CommandConfig(BaseModel):
    """Validated arguments of one CLI invocation; unused fields stay None."""

    command: str
    format: FormatEnum = FormatEnum.TEXT
    output: Optional[str] = None
    k: Optional[int] = None
    n: Optional[int] = None
    codim: Optional[int] = None
    kmax: Optional[int] = None
    radius: Optional[int] = None
    delta: Optional[str] = None
    seed: Optional[int] = None
    trials: Optional[int] = None
    q: Optional[str] = None
    ideal: Optional[str] = None
    weights: Optional[str] = None
    spec: Optional[str] = None
    suite: bool = False

    @field_validator("delta")
    @classmethod
    def delta_is_rational(cls, value: Optional[str]) -> Optional[str]:
        if value is None:
            return value
        try:
            return format_rational(parse_rational(value))
        except ValidationException as exc:
            raise ValueError(exc.message)

    @field_validator("k", "n", "kmax", "trials")
    @classmethod
    def positive(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError("must be at least 1")
        return value

    @field_validator("codim", "radius")
    @classmethod
    def nonnegative(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 0:
            raise ValueError("must be nonnegative")
        return value


class CommandResult(BaseModel):
    """``exit_code`` 0 success or PASS, 1 verification FAIL, 2 input error."""

    success: bool
    exit_code: int
    text: str = ""
    payload: Optional[Dict[str, Any]] = None
    error: Optional[str] = None
