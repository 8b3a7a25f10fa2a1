"""
    Sparse Bivariate Polynomials

    BivarPoly is a polynomial in the two formal variables
    lambda and x over the rationals, stored as a map from
    exponent pairs (deg_lambda, deg_x) to Fraction.

        lam, x = BivarPoly.lam(), BivarPoly.x()
        p = x * (x - lam)              # x^2 - lambda*x
        p.substitute(x=1)              # 1 - lambda
        p.substitute(lam=0)            # x^2

    Values are immutable and always canonical: no zero
    coefficient is ever stored, so equality of two values
    is equality of their term maps.
"""
from fractions import Fraction

from .rational import as_rational

LAMBDA = "λ"


class BivarPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        canonical = {}
        for (deg_lambda, deg_x), coeff in dict(terms or {}).items():
            if deg_lambda < 0 or deg_x < 0:
                raise ValueError("Exponents must be natural numbers.")
            coeff = as_rational(coeff)
            if coeff:
                canonical[(int(deg_lambda), int(deg_x))] = coeff
        # sorted storage keeps iteration, hashing and output deterministic
        self._terms = dict(sorted(canonical.items()))
        self._hash = None

    @classmethod
    def _from_canonical(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = dict(sorted((key, val) for key, val in terms.items() if val))
        obj._hash = None
        return obj

    # -------------
    #  Constructors
    # -------------

    @classmethod
    def zero(cls):
        return cls._from_canonical({})

    @classmethod
    def constant(cls, value):
        return cls._from_canonical({(0, 0): as_rational(value)})

    @classmethod
    def monomial(cls, deg_lambda=0, deg_x=0, coeff=1):
        return cls({(deg_lambda, deg_x): coeff})

    @classmethod
    def lam(cls):
        return cls.monomial(1, 0)

    @classmethod
    def x(cls):
        return cls.monomial(0, 1)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        return cls.constant(value)

    # -------------
    #  Inspection
    # -------------

    @property
    def terms(self):
        """A copy of the term map, sorted by (deg_lambda, deg_x)."""
        return dict(self._terms)

    def coefficient(self, deg_lambda=0, deg_x=0):
        return self._terms.get((deg_lambda, deg_x), Fraction(0))

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(key == (0, 0) for key in self._terms)

    def constant_value(self):
        """The value of a constant polynomial, ValueError otherwise."""
        if not self.is_constant():
            raise ValueError(f"Not a constant polynomial: {self}")
        return self.coefficient(0, 0)

    @property
    def degree_x(self):
        return max((deg_x for _, deg_x in self._terms), default=0)

    @property
    def degree_lambda(self):
        return max((deg_lambda for deg_lambda, _ in self._terms), default=0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, BivarPoly):
            return self._terms == other._terms
        try:
            other = BivarPoly.constant(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -------------
    #  Arithmetic
    # -------------

    def __add__(self, other):
        try:
            other = BivarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return BivarPoly._from_canonical(terms)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly._from_canonical({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other):
        try:
            other = BivarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = BivarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, BivarPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        terms = {}
        for (dl1, dx1), c1 in self._terms.items():
            for (dl2, dx2), c2 in other._terms.items():
                key = (dl1 + dl2, dx1 + dx2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return BivarPoly._from_canonical(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Only natural powers are supported.")
        result = BivarPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor):
        factor = as_rational(factor)
        return BivarPoly._from_canonical({key: coeff * factor for key, coeff in self._terms.items()})

    def __truediv__(self, divisor):
        # division by a nonzero rational scalar only
        divisor = as_rational(divisor)
        if not divisor:
            raise ZeroDivisionError("Division of a polynomial by zero.")
        return self.scale(1 / divisor)

    def substitute(self, lam=None, x=None):
        """
        Replace lambda and/or x by rational values.
        Variables given as None stay formal.
        """
        lam = None if lam is None else as_rational(lam)
        x = None if x is None else as_rational(x)
        terms = {}
        for (deg_lambda, deg_x), coeff in self._terms.items():
            if lam is not None:
                coeff *= lam**deg_lambda
                deg_lambda = 0
            if x is not None:
                coeff *= x**deg_x
                deg_x = 0
            key = (deg_lambda, deg_x)
            terms[key] = terms.get(key, 0) + coeff
        return BivarPoly._from_canonical(terms)

    # -------------
    #  Rendering
    # -------------

    def __str__(self):
        """
        Human rendering, terms by (deg_x desc, deg_lambda asc):
        x + (-1/2) + (1/2)λ
        """
        if not self._terms:
            return "0"
        parts = []
        for (deg_lambda, deg_x), coeff in sorted(self._terms.items(), key=lambda item: (-item[0][1], item[0][0])):
            mono = _power(LAMBDA, deg_lambda) + _power("x", deg_x)
            if not mono:
                parts.append(_coeff_text(coeff))
            elif coeff == 1:
                parts.append(mono)
            else:
                parts.append(_coeff_text(coeff) + mono)
        return " + ".join(parts)

    def __repr__(self):
        return f"BivarPoly({self})"


def _power(name, degree):
    if degree == 0:
        return ""
    if degree == 1:
        return name
    return f"{name}^{degree}"


def _coeff_text(coeff):
    if coeff.denominator == 1 and coeff >= 0:
        return str(coeff)
    return f"({coeff})"
