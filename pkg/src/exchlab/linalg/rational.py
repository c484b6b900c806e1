"""Rational numbers and their canonical text form.

All probabilities in ExchLab are ``fractions.Fraction`` values: arbitrary-precision numerator,
positive denominator, reduced at construction. This module adds the validating factory and the
strict ``p/q`` text codec used by distribution files and reports.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_PATTERN = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def rational(numerator: int, denominator: int = 1) -> Rational:
    """Return the canonical fraction ``numerator/denominator``."""

    if denominator == 0:
        raise ValueError("zero denominator")
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Rational:
    """Parse ``p/q`` or ``p``; non-reduced input is accepted and reduced."""

    match = _RATIONAL_PATTERN.match(text.strip())
    if not match:
        raise ValueError(f"malformed rational '{text}'")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    return rational(numerator, denominator)


def format_rational(value: Rational) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
