"""
    Exact Rational Scalars

    Every coefficient in the package is a fractions.Fraction,
    which keeps numerator and denominator reduced with a
    positive denominator. This module adds the few helpers
    the standard type leaves out: a strict literal parser
    and an inverse that fails with a domain error.
"""
import re
from fractions import Fraction
from numbers import Rational as _Rational

from .exceptions import DomainError

# integers or "a/b" only, decimals would break the exactness contract
_LITERAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(value):
    """
    Coerce an int or a rational number to a Fraction.
    Floats are rejected, there is no floating point anywhere.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not rational coefficients.")
    if isinstance(value, (int, _Rational)):
        return Fraction(value)
    raise TypeError(f"Expect an exact rational value, got {type(value).__name__}.")


def parse_rational(literal):
    """
    Parse "a/b" or an integer string into a Fraction.
    Raise ValueError on anything else, including "0.5".
    """
    match = _LITERAL.match(literal) if isinstance(literal, str) else None
    if not match:
        raise ValueError(f"Malformed rational literal: {literal!r}")
    numerator, denominator = match.groups()
    if denominator is None:
        return Fraction(int(numerator))
    if int(denominator) == 0:
        raise DomainError(f"Zero denominator in {literal!r}")
    return Fraction(int(numerator), int(denominator))


def inverse(value):
    value = as_rational(value)
    if not value:
        raise DomainError("Zero has no multiplicative inverse.")
    return 1 / value


def render(value):
    """Render as "p/q", or "p" when the denominator is one."""
    return str(as_rational(value))
