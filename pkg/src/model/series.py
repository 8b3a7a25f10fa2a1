"""
    Truncated Formal Power Series

    TruncSeries keeps the coefficients of t^0 .. t^N of a power
    series in t whose coefficients are BivarPoly values. Only raw
    coefficients are stored; exponential generating functions are
    read back with egf_coeff(n), which multiplies by n!.

    Arithmetic between two series of orders N1 and N2 is exact
    and truncated to min(N1, N2).
"""
from fractions import Fraction
from math import factorial

from .exceptions import SeriesDivisionError, TruncationError
from .poly import BivarPoly


class TruncSeries:
    __slots__ = ("_order", "_coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = [BivarPoly.coerce(coeff) for coeff in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("Truncation order must be a natural number.")
        coeffs = coeffs[: order + 1]
        coeffs.extend(BivarPoly.zero() for _ in range(order + 1 - len(coeffs)))
        self._order = order
        self._coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value, order):
        return cls([value], order)

    @classmethod
    def variable(cls, order):
        """The series t."""
        return cls([0, 1], order)

    @classmethod
    def from_egf(cls, values, order=None):
        """Build sum a_n t^n/n! from the sequence a_0, a_1, ..."""
        values = list(values)
        return cls([BivarPoly.coerce(val) / factorial(n) for n, val in enumerate(values)], order)

    @property
    def order(self):
        return self._order

    @property
    def coeffs(self):
        return self._coeffs

    def coeff(self, n):
        """Raw t^n coefficient, no factorial scaling."""
        if n < 0 or n > self._order:
            raise TruncationError(f"Coefficient t^{n} is beyond truncation order {self._order}.")
        return self._coeffs[n]

    def egf_coeff(self, n):
        """n! times the t^n coefficient."""
        return self.coeff(n) * factorial(n)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._order, self._coeffs))

    def __repr__(self):
        return f"TruncSeries(order={self._order}, coeffs=[{', '.join(map(str, self._coeffs))}])"

    # -------------
    #  Arithmetic
    # -------------

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.constant(BivarPoly.coerce(other), self._order)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self._order, other._order)
        return TruncSeries([self._coeffs[n] + other._coeffs[n] for n in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-coeff for coeff in self._coeffs], self._order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        order = min(self._order, other._order)
        coeffs = []
        for n in range(order + 1):
            total = BivarPoly.zero()
            for i in range(n + 1):
                if self._coeffs[i] and other._coeffs[n - i]:
                    total += self._coeffs[i] * other._coeffs[n - i]
            coeffs.append(total)
        return TruncSeries(coeffs, order)

    __rmul__ = __mul__

    def scale(self, factor):
        factor = BivarPoly.coerce(factor)
        return TruncSeries([coeff * factor for coeff in self._coeffs], self._order)

    def __truediv__(self, other):
        """
        Long division f/g. The constant term of g must be a
        nonzero constant, the only units of the coefficient ring.
        """
        other = self._coerce(other)
        lead = other._coeffs[0]
        if not lead or not lead.is_constant():
            raise SeriesDivisionError(f"Divisor constant term {lead} is not a unit.")
        inv = 1 / lead.constant_value()
        order = min(self._order, other._order)
        quotient = []
        for n in range(order + 1):
            total = self._coeffs[n]
            for i in range(1, n + 1):
                if other._coeffs[i] and quotient[n - i]:
                    total -= other._coeffs[i] * quotient[n - i]
            quotient.append(total.scale(inv))
        return TruncSeries(quotient, order)

    def power(self, k):
        """k-th power by repeated Cauchy products."""
        if k < 0:
            raise ValueError("Only natural powers are supported.")
        result = TruncSeries.constant(1, self._order)
        for _ in range(k):
            result = result * self
        return result

    def exp(self):
        """
        exp of a series without constant term, truncated as
        sum_{k=0}^{N} f^k / k!.
        """
        if self._coeffs[0]:
            raise SeriesDivisionError("exp needs a series with zero constant term.")
        result = TruncSeries.constant(1, self._order)
        term = TruncSeries.constant(1, self._order)
        for k in range(1, self._order + 1):
            term = (term * self).scale(Fraction(1, k))
            result = result + term
        return result

    def shift_down(self, places=1):
        """
        Divide by t^places by index shift. The dropped
        coefficients must already be zero.
        """
        if places > self._order:
            raise TruncationError(f"Cannot shift a series of order {self._order} by {places}.")
        if any(self._coeffs[:places]):
            raise SeriesDivisionError(f"Series is not divisible by t^{places}.")
        return TruncSeries(self._coeffs[places:], self._order - places)

    def truncate(self, order):
        if order > self._order:
            raise TruncationError(f"Cannot raise truncation order {self._order} to {order}.")
        return TruncSeries(self._coeffs[: order + 1], order)

    def map(self, func):
        """Apply func to every coefficient, e.g. a substitution."""
        return TruncSeries([func(coeff) for coeff in self._coeffs], self._order)
