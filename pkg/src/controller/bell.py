"""
    Stirling and Bell Polynomials

    Stirling numbers of the second kind (ordinary and degenerate),
    incomplete Bell polynomials B_{n,k}, complete Bell polynomials
    B_n and the single variable Bell polynomials phi_n(x). Every
    family has a combinatorial construction and a generating
    function construction so the two can be checked against
    each other.

    Bell arguments are BivarPoly values (rationals embed as
    constants), indexed from 1 as x_1, x_2, ..., x_m.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Tuple

from model import BivarPoly, TruncSeries, TruncationError

from .degenerate import degenerate_exp_series
from .exceptions import ArityError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BellArgs:
    args: Tuple[BivarPoly, ...]

    def __init__(self, args):
        object.__setattr__(self, "args", tuple(BivarPoly.coerce(arg) for arg in args))

    @classmethod
    def coerce(cls, value):
        return value if isinstance(value, cls) else cls(value)

    @classmethod
    def repeat(cls, value, count):
        return cls([value] * count)

    def __len__(self):
        return len(self.args)

    def __getitem__(self, i):
        """x_i, 1-indexed."""
        if not 1 <= i <= len(self.args):
            raise ArityError(f"Bell argument x_{i} not supplied (have {len(self.args)}).")
        return self.args[i - 1]

    def require(self, count, what="Bell polynomial"):
        if len(self.args) < count:
            raise ArityError(f"{what} needs {count} arguments, got {len(self.args)}.")

    def scaled(self, factor):
        return BellArgs([arg * factor for arg in self.args])


class PartitionProfile(tuple):
    """
    Multiplicities (l_1, ..., l_m) of a partition of n into k
    parts: sum l_i = k and sum i*l_i = n.
    """

    @property
    def parts(self):
        return sum(self)

    @property
    def weight(self):
        return sum(i * count for i, count in enumerate(self, start=1))


# -------------------------
#  Stirling numbers
# -------------------------


def stirling2_triangle(n_max):
    """Rows 0..n_max of S_2(n,k), row n has entries k=0..n."""
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1] + [0]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            row[k] = k * prev[k] + prev[k - 1]
        rows.append(row)
    return rows[: n_max + 1]


def stirling2(n, k):
    if k < 0 or n < 0 or k > n:
        return 0
    return stirling2_triangle(n)[n][k]


def stirling2_via_gf(n, k, order):
    """n!/k! [t^n] (e^t - 1)^k."""
    if order < n:
        raise TruncationError(f"Truncation order {order} is below the requested degree {n}.")
    if k > n:
        return 0
    # e^t - 1 has no constant term
    base = TruncSeries([0] + [Fraction(1, factorial(i)) for i in range(1, order + 1)], order)
    value = base.power(k).coeff(n) * Fraction(factorial(n), factorial(k))
    return _as_int(value.constant_value())


def degenerate_stirling2_triangle(n_max):
    """
    Rows of S_{2,lambda}(n,k) from
    S_{2,lambda}(n+1,k) = S_{2,lambda}(n,k-1) + (k - n*lambda) S_{2,lambda}(n,k).
    """
    lam = BivarPoly.lam()
    rows = [[BivarPoly.constant(1)]]
    for n in range(n_max):
        prev = rows[-1] + [BivarPoly.zero()]
        row = [BivarPoly.zero()]
        for k in range(1, n + 2):
            row.append(prev[k - 1] + prev[k] * (BivarPoly.constant(k) - lam.scale(n)))
        rows.append(row)
    return rows


def degenerate_stirling2(n, k):
    if k < 0 or n < 0 or k > n:
        return BivarPoly.zero()
    return degenerate_stirling2_triangle(n)[n][k]


def degenerate_stirling2_via_gf(n, k, order):
    """n!/k! [t^n] (e_lambda(t) - 1)^k."""
    if order < n:
        raise TruncationError(f"Truncation order {order} is below the requested degree {n}.")
    if k > n:
        return BivarPoly.zero()
    base = degenerate_exp_series(1, order) - 1
    return base.power(k).coeff(n) * Fraction(factorial(n), factorial(k))


def _as_int(value):
    if value.denominator != 1:
        raise ArithmeticError(f"Expected an integer, got {value}.")
    return value.numerator


# -------------------------
#  Partition profiles
# -------------------------


def enumerate_partition_profiles(n, k):
    """
    Every (l_1, ..., l_{n-k+1}) with sum l_i = k and sum i*l_i = n,
    once each, in lexicographic order.
    """
    if not 1 <= k <= n:
        raise ValueError(f"Profiles need 1 <= k <= n, got n={n}, k={k}.")
    size = n - k + 1
    found = []

    def descend(i, parts, weight, suffix):
        # choose l_i given l_{i+1}..l_m in suffix
        if i == 1:
            if parts == weight:
                found.append(PartitionProfile((parts,) + suffix))
            return
        for count in range(min(parts, weight // i) + 1):
            rest_parts, rest_weight = parts - count, weight - count * i
            # the remaining parts have sizes 1..i-1
            if rest_parts <= rest_weight <= rest_parts * (i - 1):
                descend(i - 1, rest_parts, rest_weight, (count,) + suffix)

    descend(size, k, n, ())
    return sorted(found)


# -------------------------
#  Bell polynomials
# -------------------------


def incomplete_bell_partition(n, k, args):
    """B_{n,k}(x_1, ..., x_{n-k+1}) summed over partition profiles."""
    if n < 0 or k < 0:
        raise ValueError("Indices must be natural numbers.")
    if k == 0 or k > n:
        return BivarPoly.constant(int(n == k))
    args = BellArgs.coerce(args)
    args.require(n - k + 1)
    total = BivarPoly.zero()
    for profile in enumerate_partition_profiles(n, k):
        denominator = prod(factorial(count) * factorial(i) ** count for i, count in enumerate(profile, start=1))
        term = BivarPoly.constant(Fraction(factorial(n), denominator))
        for i, count in enumerate(profile, start=1):
            if count:
                term = term * args[i] ** count
        total += term
    return total


def _argument_series(args, order):
    # sum_{i=1}^{m} x_i t^i / i!
    coeffs = [BivarPoly.zero()]
    for i in range(1, min(len(args), order) + 1):
        coeffs.append(args[i] / factorial(i))
    return TruncSeries(coeffs, order)


def incomplete_bell_series(n, k, args, order):
    """n!/k! [t^n] (sum_i x_i t^i/i!)^k."""
    if order < n:
        raise TruncationError(f"Truncation order {order} is below the requested degree {n}.")
    if k < 1:
        raise ValueError("The series construction needs k >= 1.")
    if k > n:
        return BivarPoly.zero()
    args = BellArgs.coerce(args)
    args.require(n - k + 1)
    power = _argument_series(args, order).power(k)
    return power.coeff(n) * Fraction(factorial(n), factorial(k))


def complete_bell(n, args):
    """B_n = sum_{k=1}^{n} B_{n,k}, B_0 = 1."""
    if n == 0:
        return BivarPoly.constant(1)
    args = BellArgs.coerce(args)
    args.require(n, "Complete Bell polynomial")
    total = BivarPoly.zero()
    for k in range(1, n + 1):
        total += incomplete_bell_partition(n, k, args)
    return total


def complete_bell_via_exp(n, args, order=None):
    """n! [t^n] exp(sum_i x_i t^i/i!)."""
    order = n if order is None else order
    if order < n:
        raise TruncationError(f"Truncation order {order} is below the requested degree {n}.")
    args = BellArgs.coerce(args)
    args.require(n, "Complete Bell polynomial")
    return _argument_series(args, order).exp().egf_coeff(n)


def bell_polynomial(n):
    """phi_n(x) = sum_k S_2(n,k) x^k."""
    row = stirling2_triangle(n)[n]
    return BivarPoly({(0, k): value for k, value in enumerate(row)})


def bell_triangle(n_max):
    """Rows of B_{n,k}(1, ..., 1) for k=0..n."""
    ones = BellArgs.repeat(1, max(n_max, 1))
    rows = []
    for n in range(n_max + 1):
        rows.append([_as_int(incomplete_bell_partition(n, k, ones).constant_value()) for k in range(n + 1)])
    return rows
