"""Exact rationals as sympy QQ elements, parsed from and printed as "p/q" strings."""

import re
from typing import Any, Union

from sympy.polys.domains import QQ, ZZ

from common.exceptions import ValidationException

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")

RationalLike = Union[int, str, Any]


def parse_rational(text: str):
    """Parse "p/q" or "p"; floats and decimal points are rejected."""
    match = _RATIONAL.match(str(text))
    if not match:
        raise ValidationException(
            message=f"not an exact rational 'p/q': {text!r}",
        )
    numerator = int(match.group(1))
    denominator = int(match.group(2) or 1)
    if denominator == 0:
        raise ValidationException(message=f"zero denominator in {text!r}")
    return QQ(numerator, denominator)


def to_rational(value: RationalLike):
    """Convert int, "p/q" string, sympy Rational or a domain element to QQ."""
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool):
        raise ValidationException(message="booleans are not rationals")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, float):
        raise ValidationException(message=f"binary float {value!r} is not accepted")
    try:
        return QQ.convert(value)
    except Exception as exc:  # sympy raises CoercionFailed and friends
        raise ValidationException(message=f"cannot read {value!r} as a rational") from exc


def format_rational(value) -> str:
    """Canonical "p/q" text; integers print without a denominator."""
    value = QQ.convert(value)
    numerator, denominator = QQ.numer(value), QQ.denom(value)
    if denominator == 1:
        return str(int(numerator))
    return f"{int(numerator)}/{int(denominator)}"


def as_integer(value) -> int:
    """Return the integer value of an integral rational."""
    value = QQ.convert(value)
    if QQ.denom(value) != 1:
        raise ValidationException(message=f"{format_rational(value)} is not an integer")
    return int(QQ.numer(value))


def domain_convert(domain, value):
    """Coerce into ``domain``; rationals land in ZZ only when integral."""
    if domain == ZZ:
        return ZZ(as_integer(to_rational(value)))
    return domain.convert(to_rational(value) if isinstance(value, (str, int)) else value)
