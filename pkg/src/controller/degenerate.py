"""
    Degenerate Sequence Families

    Generalized falling factorials (x)_{n,lambda}, the degenerate
    exponential series, degenerate Bernoulli polynomials built three
    independent ways, the classical Bernoulli numbers, and the
    ordinary and dimorphic Mersenne numbers.

        gff(BivarPoly.x(), 2)                  # x^2 - lambda*x
        degen_bernoulli_via_series(1)          # x + (lambda-1)/2
        dimorphic_mersenne(3)                  # 7 - 9lambda + 2lambda^2

    Tables are built with one call-local memo per construction
    path; nothing is cached across calls.
"""
import logging
from fractions import Fraction
from math import comb

from model import BivarPoly, TruncSeries, TruncationError

from .base import DegenSequenceTable, Family, Method

logger = logging.getLogger(__name__)


# -------------------------
#  Falling factorials
# -------------------------


def gff(base, n):
    """(base)_{n,lambda} = base(base - lambda)...(base - (n-1)lambda), 1 for n=0."""
    if n < 0:
        raise ValueError("Index must be a natural number.")
    base = BivarPoly.coerce(base)
    lam = BivarPoly.lam()
    result = BivarPoly.constant(1)
    for i in range(n):
        result = result * (base - lam.scale(i))
    return result


def gff_table(n_max, base=None):
    base = BivarPoly.x() if base is None else BivarPoly.coerce(base)
    lam = BivarPoly.lam()
    values = [BivarPoly.constant(1)]
    for i in range(n_max):
        values.append(values[-1] * (base - lam.scale(i)))
    return DegenSequenceTable(Family.FALLING_FACTORIAL, Method.PRODUCT, 0, values[: n_max + 1])


def degenerate_exp_series(base, order):
    """e_lambda^base(t) truncated at t^order."""
    return TruncSeries.from_egf(gff_table(order, base).values, order)


# -------------------------
#  Degenerate Bernoulli
# -------------------------


def _bernoulli_divisor(order):
    # (e_lambda(t) - 1)/t by index shift, constant term is exactly 1
    return (degenerate_exp_series(1, order + 1) - 1).shift_down()


def _bernoulli_series(base, order):
    return degenerate_exp_series(base, order) / _bernoulli_divisor(order)


def _via_series(n_max):
    series = _bernoulli_series(BivarPoly.x(), n_max)
    return [series.egf_coeff(n) for n in range(n_max + 1)]


def _via_classic(n_max):
    numbers = _bernoulli_series(0, n_max)
    numbers = [numbers.egf_coeff(k) for k in range(n_max + 1)]
    falling = gff_table(n_max).values
    values = []
    for n in range(n_max + 1):
        total = BivarPoly.zero()
        for k in range(n + 1):
            total += falling[n - k] * numbers[k] * comb(n, k)
        values.append(total)
    return values


def _via_theorem1(n_max):
    dimorphic = dimorphic_table(n_max + 1).values
    shifted = gff_table(n_max, BivarPoly.x() + 1).values
    values = []
    for n in range(n_max + 1):
        total = shifted[n]
        for l in range(n):  # noqa: E741
            total -= values[l] * dimorphic[n - l + 1] * Fraction(comb(n, l), n - l + 1)
        values.append(total)
    return values


_BERNOULLI_METHODS = {
    Method.SERIES: _via_series,
    Method.CLASSIC: _via_classic,
    Method.THEOREM1: _via_theorem1,
}


def degen_bernoulli_table(n_max, method=Method.SERIES):
    """
    beta_{0..n_max,lambda}(x) by one of three constructions:

    series    n! [t^n] e_lambda^x(t) / ((e_lambda(t) - 1)/t)
    classic   sum_k C(n,k) (x)_{n-k,lambda} beta_{k,lambda}
    theorem1  (x+1)_{n,lambda} - sum_{l<n} C(n,l) beta_{l,lambda}(x) M_{n-l+1,lambda}/(n-l+1)
    """
    method = Method(method)
    if method not in _BERNOULLI_METHODS:
        raise ValueError(f"No Bernoulli construction named {method.value!r}.")
    if n_max < 0:
        raise ValueError("Index must be a natural number.")
    logger.debug("Building beta table n<=%s via %s", n_max, method.value)
    values = _BERNOULLI_METHODS[method](n_max)
    return DegenSequenceTable(Family.DEGEN_BERNOULLI, method, 0, values)


def degen_bernoulli_via_series(n, order=None):
    order = n if order is None else order
    if order < n:
        raise TruncationError(f"Truncation order {order} is below the requested degree {n}.")
    return _bernoulli_series(BivarPoly.x(), order).egf_coeff(n)


def degen_bernoulli_via_classic_recurrence(n):
    return degen_bernoulli_table(n, Method.CLASSIC)[n]


def degen_bernoulli_via_theorem1(n):
    return degen_bernoulli_table(n, Method.THEOREM1)[n]


def classical_bernoulli_numbers(n_max):
    """B_0..B_{n_max} from sum_{k=0}^{n} C(n+1,k) B_k = [n=0]."""
    numbers = []
    for n in range(n_max + 1):
        total = Fraction(int(n == 0))
        for k in range(n):
            total -= comb(n + 1, k) * numbers[k]
        numbers.append(total / (n + 1))
    return numbers


def classical_bernoulli(n):
    return classical_bernoulli_numbers(n)[n]


def classical_bernoulli_table(n_max):
    values = [BivarPoly.constant(value) for value in classical_bernoulli_numbers(n_max)]
    return DegenSequenceTable(Family.CLASSICAL_BERNOULLI, Method.RECURRENCE, 0, values)


# -------------------------
#  Mersenne numbers
# -------------------------


def mersenne(n):
    if n < 0:
        raise ValueError("Index must be a natural number.")
    return (1 << n) - 1


def mersenne_table(n_max):
    return DegenSequenceTable(Family.MERSENNE, Method.POWER, 0, [mersenne(n) for n in range(n_max + 1)])


def mersenne_gf_coeffs(order):
    """Coefficients of z/(1 - 3z + 2z^2) through z^order."""
    quotient = TruncSeries.variable(order) / TruncSeries([1, -3, 2], order)
    coeffs = []
    for coeff in quotient.coeffs:
        value = coeff.constant_value()
        if value.denominator != 1:
            raise ArithmeticError(f"Non-integral Mersenne coefficient {value}.")
        coeffs.append(value.numerator)
    return coeffs


def dimorphic_mersenne(n):
    """M_{n,lambda} = (2)_{n,lambda} - (1)_{n,lambda}, a polynomial in lambda alone."""
    return gff(2, n) - gff(1, n)


def dimorphic_table(n_max):
    twos = gff_table(n_max, 2).values
    ones = gff_table(n_max, 1).values
    values = [two - one for two, one in zip(twos, ones)]
    return DegenSequenceTable(Family.DIMORPHIC_MERSENNE, Method.PRODUCT, 0, values)


def dimorphic_mersenne_egf(order):
    """e_lambda^2(t) - e_lambda(t) = sum M_{n,lambda} t^n/n!."""
    return degenerate_exp_series(2, order) - degenerate_exp_series(1, order)


def shifted_dimorphic_egf(order):
    """(e_lambda^2(t) - e_lambda(t))/t, t^n coefficient M_{n+1,lambda}/((n+1) n!)."""
    return dimorphic_mersenne_egf(order + 1).shift_down()
