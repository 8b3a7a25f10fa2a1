"""
    Identity Verification Engine

    Each identity is stated as an exact difference of BivarPoly
    values, the residual, computed for every index in a range.
    An index passes iff its residual is the canonical zero
    polynomial; there is no tolerance anywhere.

        report = verify_theorem1(12)
        report.all_pass                      # True
        reports = run_all(default_checks())  # the whole suite

    The Bernoulli polynomials fed to the checks always come from
    the generating function construction, held together with the
    other shared tables in a call-local IdentityContext.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from configparser import ConfigParser
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from math import comb, factorial
from pathlib import Path
from typing import Optional, Tuple

from model import BivarPoly, TruncSeries, TruncationError, as_rational

from . import bell, degenerate
from .base import Method
from .exceptions import UnknownIdentityError

logger = logging.getLogger(__name__)

DEFAULT_RANGES = Path(__file__).resolve().parent.parent / "identities.ini"


class IdentityId(Enum):
    """Checkable identities, in report order."""

    EQ1_GF = "eq1_gf"
    EQ5_STIRLING = "eq5_stirling"
    EQ6_STIRLING_GF = "eq6_stirling_gf"
    EQ11_COMPLETE = "eq11_complete"
    EQ14_EGF = "eq14_egf"
    EQ15_SHIFTED_EGF = "eq15_shifted_egf"
    EQ16_FACTORIZATION = "eq16_factorization"
    EQ17_PRODUCT = "eq17_product"
    EQ19_RECURRENCE = "eq19_recurrence"
    EQ20_RECIPROCAL = "eq20_reciprocal"
    EQ22_BELL_K1 = "eq22_bell_k1"
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    THEOREM3 = "theorem3"
    SPEC_STIRLING = "spec_stirling"
    SPEC_PHI = "spec_phi"
    LIMIT_LAMBDA0 = "limit_lambda0"
    BERNOULLI_METHODS = "bernoulli_methods"
    DEGENERATE_STIRLING = "degenerate_stirling"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower().replace("-", "_"))
        except ValueError as err:
            raise UnknownIdentityError(f"Unknown identity {value!r}.") from err

    @property
    def rank(self):
        return list(IdentityId).index(self)

    @property
    def first_index(self):
        """Smallest index the identity is stated for."""
        return _FIRST_INDEX.get(self, 0)


_FIRST_INDEX = {
    IdentityId.EQ20_RECIPROCAL: 1,
    IdentityId.EQ22_BELL_K1: 1,
    IdentityId.THEOREM2: 1,
    IdentityId.THEOREM3: 1,
}

# checks that never read the shared tables
_CONTEXT_FREE = frozenset(
    {
        IdentityId.EQ1_GF,
        IdentityId.EQ5_STIRLING,
        IdentityId.EQ6_STIRLING_GF,
        IdentityId.EQ16_FACTORIZATION,
        IdentityId.SPEC_STIRLING,
        IdentityId.SPEC_PHI,
        IdentityId.DEGENERATE_STIRLING,
    }
)


# -------------------------
#  Checks and reports
# -------------------------


@dataclass(frozen=True)
class IdentityCheck:
    identity: IdentityId
    n_max: int
    n_min: Optional[int] = None
    order: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "identity", IdentityId.parse(self.identity))
        if self.n_min is None:
            object.__setattr__(self, "n_min", self.identity.first_index)
        if self.n_min > self.n_max:
            raise ValueError(f"Empty index range {self.n_min}..{self.n_max} for {self.identity.name}.")


@dataclass(frozen=True)
class IndexResult:
    n: int
    residual: BivarPoly

    @property
    def passed(self):
        return self.residual.is_zero()


@dataclass(frozen=True)
class VerificationReport:
    identity: IdentityId
    results: Tuple[IndexResult, ...] = ()
    error: Optional[str] = None

    @property
    def all_pass(self):
        return self.error is None and all(result.passed for result in self.results)

    @property
    def failures(self):
        return [result for result in self.results if not result.passed]


# -------------------------
#  Shared tables
# -------------------------


@dataclass(frozen=True)
class IdentityContext:
    """
    Call-local memo of the tables every identity draws on:
    beta_{n,lambda}(x), beta_{n,lambda}(0), (x+1)_{n,lambda} for
    n <= n_max and M_{n,lambda} for n <= n_max + 1.
    """

    n_max: int
    bernoulli: Tuple[BivarPoly, ...]
    numbers: Tuple[BivarPoly, ...]
    shifted: Tuple[BivarPoly, ...]
    dimorphic: Tuple[BivarPoly, ...]
    x_value: Optional[Fraction] = None

    @classmethod
    def build(cls, n_max):
        logger.debug("Building identity context for n<=%s", n_max)
        bernoulli = degenerate.degen_bernoulli_table(n_max, Method.SERIES).values
        return cls(
            n_max=n_max,
            bernoulli=bernoulli,
            numbers=tuple(value.substitute(x=0) for value in bernoulli),
            shifted=degenerate.gff_table(n_max, BivarPoly.x() + 1).values,
            dimorphic=degenerate.dimorphic_table(n_max + 1).values,
        )

    def require(self, n_max):
        if n_max > self.n_max:
            raise TruncationError(f"Context covers n<={self.n_max}, {n_max} requested.")
        return self

    @property
    def x_base(self):
        return BivarPoly.x() if self.x_value is None else BivarPoly.constant(self.x_value)

    def beta(self, n):
        return self.bernoulli[n]

    def beta_args(self, count):
        """(beta_1, ..., beta_count) as Bell arguments."""
        return bell.BellArgs(self.bernoulli[1 : count + 1])

    def mersenne_ratio(self, m):
        """M_{m,lambda}/m."""
        return self.dimorphic[m] / m

    def at_x(self, value):
        """The instance with x replaced by a rational value."""
        if value is None:
            return self
        value = as_rational(value)
        return replace(
            self,
            bernoulli=tuple(poly.substitute(x=value) for poly in self.bernoulli),
            shifted=tuple(poly.substitute(x=value) for poly in self.shifted),
            x_value=value,
        )

    def corrupted(self, index=1):
        """Fault injection: beta_{index,lambda}(x) shifted by lambda."""
        bernoulli = list(self.bernoulli)
        bernoulli[index] = bernoulli[index] + BivarPoly.lam()
        logger.debug("Corrupting beta_%s by lambda", index)
        return replace(self, bernoulli=tuple(bernoulli))


def _context(context, n_max):
    return (context or IdentityContext.build(n_max)).require(n_max)


def _order(order, n_max):
    order = n_max if order is None else order
    if order < n_max:
        raise TruncationError(f"Truncation order {order} is below n_max {n_max}.")
    return order


def _first_nonzero(residuals):
    for residual in residuals:
        if residual:
            return residual
    return BivarPoly.zero()


def _signed_bell(context, j_max):
    """(-1)^k k! B_{j,k}(beta_1, ..., beta_{j-k+1}) for 1 <= k <= j <= j_max."""
    table = {}
    for j in range(1, j_max + 1):
        args = context.beta_args(j)
        for k in range(1, j + 1):
            table[j, k] = bell.incomplete_bell_partition(j, k, args) * ((-1) ** k * factorial(k))
    return table


def _report(identity, indices, residual):
    results = []
    for n in indices:
        value = residual(n)
        logger.debug("%s n=%s residual=%s", identity.name, n, value)
        results.append(IndexResult(n, value))
    report = VerificationReport(identity, tuple(results))
    _log_report(report)
    return report


def _log_report(report):
    for result in report.failures:
        logger.error("%s fails at n=%s, residual %s", report.identity.name, result.n, result.residual)
    passed = sum(result.passed for result in report.results)
    logger.info("%s: %s/%s indices pass", report.identity.name, passed, len(report.results))


def _indices(identity, n_max, n_min):
    first = identity.first_index if n_min is None else max(n_min, identity.first_index)
    return range(first, n_max + 1)


# -------------------------
#  Bernoulli and Mersenne
# -------------------------


def eq19_rhs(n, context):
    """sum_{l=0}^{n} C(n,l) beta_{l,lambda}(x) M_{n-l+1,lambda}/(n-l+1)."""
    total = BivarPoly.zero()
    for l in range(n + 1):  # noqa: E741
        total += context.beta(l) * context.mersenne_ratio(n - l + 1) * comb(n, l)
    return total


def theorem1_rhs(n, context):
    """(x+1)_{n,lambda} - sum_{l<n} C(n,l) beta_{l,lambda}(x) M_{n-l+1,lambda}/(n-l+1)."""
    total = context.shifted[n]
    for l in range(n):  # noqa: E741
        total -= context.beta(l) * context.mersenne_ratio(n - l + 1) * comb(n, l)
    return total


def verify_theorem1(n_max, *, n_min=None, order=None, context=None):
    context = _context(context, n_max)
    return _report(
        IdentityId.THEOREM1,
        _indices(IdentityId.THEOREM1, n_max, n_min),
        lambda n: context.beta(n) - theorem1_rhs(n, context),
    )


def verify_eq19(n_max, *, n_min=None, order=None, context=None):
    context = _context(context, n_max)
    return _report(
        IdentityId.EQ19_RECURRENCE,
        _indices(IdentityId.EQ19_RECURRENCE, n_max, n_min),
        lambda n: context.shifted[n] - eq19_rhs(n, context),
    )


def verify_eq1(n_max, *, n_min=None, order=None, context=None):
    coeffs = degenerate.mersenne_gf_coeffs(n_max)
    return _report(
        IdentityId.EQ1_GF,
        _indices(IdentityId.EQ1_GF, n_max, n_min),
        lambda n: BivarPoly.constant(coeffs[n] - degenerate.mersenne(n)),
    )


def verify_eq14(n_max, *, n_min=None, order=None, context=None):
    context = _context(context, n_max)
    egf = degenerate.dimorphic_mersenne_egf(_order(order, n_max))
    return _report(
        IdentityId.EQ14_EGF,
        _indices(IdentityId.EQ14_EGF, n_max, n_min),
        lambda n: egf.egf_coeff(n) - context.dimorphic[n],
    )


def verify_eq15(n_max, *, n_min=None, order=None, context=None):
    context = _context(context, n_max)
    shifted = degenerate.shifted_dimorphic_egf(_order(order, n_max))
    return _report(
        IdentityId.EQ15_SHIFTED_EGF,
        _indices(IdentityId.EQ15_SHIFTED_EGF, n_max, n_min),
        lambda n: shifted.coeff(n) - context.mersenne_ratio(n + 1) / factorial(n),
    )


def verify_eq16(n_max, *, n_min=None, order=None, context=None):
    order = _order(order, n_max)
    shifted = degenerate.shifted_dimorphic_egf(order)
    exp_one = degenerate.degenerate_exp_series(1, order + 1)
    factored = exp_one.truncate(order) * (exp_one - 1).shift_down()
    return _report(
        IdentityId.EQ16_FACTORIZATION,
        _indices(IdentityId.EQ16_FACTORIZATION, n_max, n_min),
        lambda n: shifted.coeff(n) - factored.coeff(n),
    )


def verify_eq17(n_max, *, n_min=None, order=None, context=None):
    context = _context(context, n_max)
    bernoulli = TruncSeries.from_egf(context.bernoulli[: n_max + 1], n_max)
    product = bernoulli * degenerate.shifted_dimorphic_egf(n_max)
    return _report(
        IdentityId.EQ17_PRODUCT,
        _indices(IdentityId.EQ17_PRODUCT, n_max, n_min),
        lambda n: product.egf_coeff(n) - context.shifted[n],
    )


def verify_bernoulli_methods(n_max, *, n_min=None, order=None, context=None):
    context = _context(context, n_max)
    others = [
        [poly.substitute(x=context.x_value) for poly in degenerate.degen_bernoulli_table(n_max, method).values]
        for method in (Method.CLASSIC, Method.THEOREM1)
    ]
    return _report(
        IdentityId.BERNOULLI_METHODS,
        _indices(IdentityId.BERNOULLI_METHODS, n_max, n_min),
        lambda n: _first_nonzero(values[n] - context.beta(n) for values in others),
    )


def _limit_residual(n, context):
    x = BivarPoly.x()
    yield context.numbers[n].substitute(lam=0) - degenerate.classical_bernoulli_numbers(n)[n]
    yield degenerate.gff(x, n).substitute(lam=0) - x**n
    yield context.dimorphic[n].substitute(lam=0) - degenerate.mersenne(n)


def verify_limit_lambda0(n_max, *, n_min=None, order=None, context=None):
    context = _context(context, n_max)
    return _report(
        IdentityId.LIMIT_LAMBDA0,
        _indices(IdentityId.LIMIT_LAMBDA0, n_max, n_min),
        lambda n: _first_nonzero(_limit_residual(n, context)),
    )


# -------------------------
#  Stirling and Bell
# -------------------------


def verify_eq5(n_max, *, n_min=None, order=None, context=None):
    x = BivarPoly.x()

    def residual(n):
        total = BivarPoly.zero()
        for k in range(n + 1):
            total += degenerate.gff(x, k).substitute(lam=1) * bell.stirling2(n, k)
        return x**n - total

    return _report(IdentityId.EQ5_STIRLING, _indices(IdentityId.EQ5_STIRLING, n_max, n_min), residual)


def verify_eq6(n_max, *, n_min=None, order=None, context=None):
    order = _order(order, n_max)

    def residual(n):
        return _first_nonzero(
            BivarPoly.constant(bell.stirling2(n, k) - bell.stirling2_via_gf(n, k, order)) for k in range(n + 1)
        )

    return _report(IdentityId.EQ6_STIRLING_GF, _indices(IdentityId.EQ6_STIRLING_GF, n_max, n_min), residual)


def verify_eq11(n_max, *, n_min=None, order=None, context=None):
    context = _context(context, n_max)
    order = _order(order, n_max)
    return _report(
        IdentityId.EQ11_COMPLETE,
        _indices(IdentityId.EQ11_COMPLETE, n_max, n_min),
        lambda n: bell.complete_bell(n, context.beta_args(n))
        - bell.complete_bell_via_exp(n, context.beta_args(n), order),
    )


def verify_eq22(n_max, *, n_min=None, order=None, context=None):
    context = _context(context, n_max)
    return _report(
        IdentityId.EQ22_BELL_K1,
        _indices(IdentityId.EQ22_BELL_K1, n_max, n_min),
        lambda n: bell.incomplete_bell_partition(n, 1, context.beta_args(n)) - context.beta(n),
    )


def _specialization_residual(n, order):
    ones = bell.BellArgs.repeat(1, n)
    for k in range(n + 1):
        expected = bell.stirling2(n, k)
        yield bell.incomplete_bell_partition(n, k, ones) - expected
        if k >= 1:
            yield bell.incomplete_bell_series(n, k, ones, order) - expected


def verify_spec_stirling(n_max, *, n_min=None, order=None, context=None):
    order = _order(order, n_max)
    return _report(
        IdentityId.SPEC_STIRLING,
        _indices(IdentityId.SPEC_STIRLING, n_max, n_min),
        lambda n: _first_nonzero(_specialization_residual(n, order)),
    )


def verify_spec_phi(n_max, *, n_min=None, order=None, context=None):
    x = BivarPoly.x()
    return _report(
        IdentityId.SPEC_PHI,
        _indices(IdentityId.SPEC_PHI, n_max, n_min),
        lambda n: bell.complete_bell(n, bell.BellArgs.repeat(x, n)) - bell.bell_polynomial(n),
    )


def _degenerate_stirling_residual(n, order):
    x = BivarPoly.x()
    row = bell.degenerate_stirling2_triangle(n)[n]
    total = BivarPoly.zero()
    for k, value in enumerate(row):
        total += value * degenerate.gff(x, k).substitute(lam=1)
    yield degenerate.gff(x, n) - total
    for k, value in enumerate(row):
        yield value - bell.degenerate_stirling2_via_gf(n, k, order)
        yield value.substitute(lam=0) - bell.stirling2(n, k)


def verify_degenerate_stirling(n_max, *, n_min=None, order=None, context=None):
    order = _order(order, n_max)
    return _report(
        IdentityId.DEGENERATE_STIRLING,
        _indices(IdentityId.DEGENERATE_STIRLING, n_max, n_min),
        lambda n: _first_nonzero(_degenerate_stirling_residual(n, order)),
    )


# -------------------------
#  Bell representations
# -------------------------


def reciprocal_series(context, order):
    """(e_lambda(t) - 1)/(t e_lambda^x(t)) by index shift and long division."""
    divisor = degenerate.degenerate_exp_series(context.x_base, order)
    return (degenerate.degenerate_exp_series(1, order + 1) - 1).shift_down() / divisor


def verify_eq20(n_max, order=None, *, n_min=None, context=None):
    context = _context(context, n_max)
    series = reciprocal_series(context, _order(order, n_max))
    signed = _signed_bell(context, n_max)

    def residual(n):
        total = BivarPoly.zero()
        for k in range(1, n + 1):
            total += signed[n, k]
        return series.egf_coeff(n) - total

    return _report(IdentityId.EQ20_RECIPROCAL, _indices(IdentityId.EQ20_RECIPROCAL, n_max, n_min), residual)


def theorem2_rhs(n, context, signed=None):
    """
    (x+1)_{n,lambda} + sum_{j=1}^{n} sum_{k=1}^{j}
        C(n,j) (x+1)_{n-j,lambda} (-1)^k k! B_{j,k}(beta_1, ..., beta_{j-k+1})
    """
    signed = signed if signed is not None else _signed_bell(context, n)
    total = context.shifted[n]
    for j in range(1, n + 1):
        for k in range(1, j + 1):
            total += context.shifted[n - j] * signed[j, k] * comb(n, j)
    return total


def verify_theorem2(n_max, *, n_min=None, order=None, context=None, x_value=None):
    """
    M_{n+1,lambda}/(n+1) against its Bell representation. The
    left side has no x, so a zero residual certifies that the
    right side is x-free as well.
    """
    context = _context(context, n_max).at_x(x_value)
    signed = _signed_bell(context, n_max)

    def residual(n):
        rhs = theorem2_rhs(n, context, signed)
        if rhs.degree_x:
            logger.warning("THEOREM2 right side still depends on x at n=%s", n)
        return context.mersenne_ratio(n + 1) - rhs

    return _report(IdentityId.THEOREM2, _indices(IdentityId.THEOREM2, n_max, n_min), residual)


def theorem3_rhs(n, context, signed=None):
    """
    (x+1)_{n,lambda} - M_{n+1,lambda}/(n+1)
        + sum_{k=2}^{n} (-1)^k k! B_{n,k}(beta_1, ..., beta_{n-k+1})
        + sum_{j=1}^{n-1} sum_{k=1}^{j} C(n,j) (x+1)_{n-j,lambda} (-1)^k k! B_{j,k}(...)
    """
    signed = signed if signed is not None else _signed_bell(context, n)
    total = context.shifted[n] - context.mersenne_ratio(n + 1)
    for k in range(2, n + 1):
        total += signed[n, k]
    for j in range(1, n):
        for k in range(1, j + 1):
            total += context.shifted[n - j] * signed[j, k] * comb(n, j)
    return total


def verify_theorem3(n_max, *, n_min=None, order=None, context=None):
    context = _context(context, n_max)
    signed = _signed_bell(context, n_max)
    return _report(
        IdentityId.THEOREM3,
        _indices(IdentityId.THEOREM3, n_max, n_min),
        lambda n: context.beta(n) - theorem3_rhs(n, context, signed),
    )


# -------------------------
#  Batch runs
# -------------------------


VERIFIERS = {
    IdentityId.EQ1_GF: verify_eq1,
    IdentityId.EQ5_STIRLING: verify_eq5,
    IdentityId.EQ6_STIRLING_GF: verify_eq6,
    IdentityId.EQ11_COMPLETE: verify_eq11,
    IdentityId.EQ14_EGF: verify_eq14,
    IdentityId.EQ15_SHIFTED_EGF: verify_eq15,
    IdentityId.EQ16_FACTORIZATION: verify_eq16,
    IdentityId.EQ17_PRODUCT: verify_eq17,
    IdentityId.EQ19_RECURRENCE: verify_eq19,
    IdentityId.EQ20_RECIPROCAL: verify_eq20,
    IdentityId.EQ22_BELL_K1: verify_eq22,
    IdentityId.THEOREM1: verify_theorem1,
    IdentityId.THEOREM2: verify_theorem2,
    IdentityId.THEOREM3: verify_theorem3,
    IdentityId.SPEC_STIRLING: verify_spec_stirling,
    IdentityId.SPEC_PHI: verify_spec_phi,
    IdentityId.LIMIT_LAMBDA0: verify_limit_lambda0,
    IdentityId.BERNOULLI_METHODS: verify_bernoulli_methods,
    IdentityId.DEGENERATE_STIRLING: verify_degenerate_stirling,
}


def default_checks(path=DEFAULT_RANGES, n_max=None, order=None):
    """
    One check per identity, ranges read from an ini file with a
    section per identity id. n_max and order override the file;
    an overriding n_max never drops below an identity's first index.
    An order from the file follows the range, an overriding order
    is kept as given and checked by the verifier.
    """
    config = ConfigParser()
    if not config.read(path):
        raise FileNotFoundError(f"Identity ranges not found: {path}")
    checks = []
    for identity in IdentityId:
        section = config[identity.value] if config.has_section(identity.value) else {}
        first = int(section.get("n_min", identity.first_index))
        last = int(section.get("n_max", first)) if n_max is None else max(n_max, first)
        if order is not None:
            depth = order
        elif "order" in section:
            depth = max(int(section["order"]), last)
        else:
            depth = None
        checks.append(IdentityCheck(identity, last, first, depth))
    return checks


def context_for(checks, minimum=0):
    """The smallest shared context covering every check that reads one."""
    needed = [check.n_max for check in checks if check.identity not in _CONTEXT_FREE]
    return IdentityContext.build(max(needed + [minimum]))


def run_check(check, context):
    try:
        return VERIFIERS[check.identity](check.n_max, n_min=check.n_min, order=check.order, context=context)
    except Exception as err:  # recorded in the report, the batch goes on
        logger.error("%s aborted: %s", check.identity.name, repr(err))
        return VerificationReport(check.identity, (), error=f"{type(err).__name__}: {err}")


def run_all(checks, workers=1, context=None):
    """
    Run every configured check. Reports come back ordered by
    identity then index whatever the worker count.
    """
    checks = sorted(checks, key=lambda check: (check.identity.rank, check.n_min, check.n_max))
    if not checks:
        return []
    if context is None:
        context = context_for(checks)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda check: run_check(check, context), checks))
    return [run_check(check, context) for check in checks]
