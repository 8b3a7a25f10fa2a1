"""
    Table and Point Evaluation Facade

    Maps an external family name to the construction that builds
    its table, and evaluates a single family member at a rational
    point (lambda, x).
"""
import logging

from model import BivarPoly, as_rational

from . import bell, degenerate
from .base import DegenSequenceTable, Family, Method
from .exceptions import UnknownFamilyError

logger = logging.getLogger(__name__)


def _phi_table(n_max):
    values = [bell.bell_polynomial(n) for n in range(n_max + 1)]
    return DegenSequenceTable(Family.BELL_PHI, Method.RECURRENCE, 0, values)


def _triangle(family, method, rows):
    return DegenSequenceTable(family, method, 0, rows)


_BUILDERS = {
    Family.FALLING_FACTORIAL: lambda n_max, method: degenerate.gff_table(n_max),
    Family.DEGEN_BERNOULLI: lambda n_max, method: degenerate.degen_bernoulli_table(n_max, method or Method.SERIES),
    Family.DIMORPHIC_MERSENNE: lambda n_max, method: degenerate.dimorphic_table(n_max),
    Family.MERSENNE: lambda n_max, method: degenerate.mersenne_table(n_max),
    Family.CLASSICAL_BERNOULLI: lambda n_max, method: degenerate.classical_bernoulli_table(n_max),
    Family.BELL_PHI: lambda n_max, method: _phi_table(n_max),
    Family.STIRLING2: lambda n_max, method: _triangle(
        Family.STIRLING2, Method.RECURRENCE, bell.stirling2_triangle(n_max)
    ),
    Family.BELL_TRIANGLE: lambda n_max, method: _triangle(
        Family.BELL_TRIANGLE, Method.PARTITION, bell.bell_triangle(n_max)
    ),
    Family.DEGENERATE_STIRLING2: lambda n_max, method: _triangle(
        Family.DEGENERATE_STIRLING2, Method.RECURRENCE, bell.degenerate_stirling2_triangle(n_max)
    ),
}


def build_table(family, n_max, method=None):
    family = Family.parse(family)
    if n_max < 0:
        raise ValueError("n_max must be a natural number.")
    if method is not None and family is not Family.DEGEN_BERNOULLI:
        raise ValueError(f"Family {family.value!r} has a single construction.")
    logger.debug("Building %s table n<=%s", family.value, n_max)
    return _BUILDERS[family](n_max, method)


def member(family, n):
    """The n-th member of a sequence family as a BivarPoly or an int."""
    family = Family.parse(family)
    if family.triangular:
        raise UnknownFamilyError(f"Family {family.value!r} is a triangle and takes two indices.")
    if n < 0:
        raise ValueError("Index must be a natural number.")
    if family is Family.FALLING_FACTORIAL:
        return degenerate.gff(BivarPoly.x(), n)
    if family is Family.DEGEN_BERNOULLI:
        return degenerate.degen_bernoulli_via_series(n)
    if family is Family.DIMORPHIC_MERSENNE:
        return degenerate.dimorphic_mersenne(n)
    if family is Family.MERSENNE:
        return degenerate.mersenne(n)
    if family is Family.CLASSICAL_BERNOULLI:
        return BivarPoly.constant(degenerate.classical_bernoulli(n))
    return bell.bell_polynomial(n)


def evaluate(family, n, lam=None, x=None):
    """
    Substitute the given rationals into the n-th member. The result
    is a Fraction when nothing symbolic is left, a BivarPoly otherwise.
    """
    value = member(family, n)
    if isinstance(value, int):
        return as_rational(value)
    value = value.substitute(
        lam=None if lam is None else as_rational(lam),
        x=None if x is None else as_rational(x),
    )
    return value.constant_value() if value.is_constant() else value
