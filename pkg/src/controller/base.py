"""
    Sequence Table Carrier

    A DegenSequenceTable holds the values of one sequence family
    over a contiguous index range, together with a tag naming the
    construction that produced it, so that tables built by
    different methods can be compared value by value.

        table = degen_bernoulli_table(12, method="theorem1")
        table[3]           # beta_{3,lambda}(x)
        table.indices      # range(0, 13)

    Triangular families store one row per index.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from model import BivarPoly

from .exceptions import UnknownFamilyError


class Family(Enum):
    """Sequence families, valued by their external name."""

    FALLING_FACTORIAL = "gff"
    DEGEN_BERNOULLI = "beta"
    DIMORPHIC_MERSENNE = "dimorphic"
    MERSENNE = "mersenne"
    STIRLING2 = "stirling2"
    BELL_TRIANGLE = "bell-triangle"
    BELL_PHI = "phi"
    DEGENERATE_STIRLING2 = "degenerate-stirling2"
    CLASSICAL_BERNOULLI = "bernoulli"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError as err:
            known = ", ".join(family.value for family in cls)
            raise UnknownFamilyError(f"Unknown family {value!r}, expected one of: {known}.") from err

    @property
    def integral(self):
        # integer valued families serialize as decimal strings
        return self in (Family.MERSENNE, Family.STIRLING2, Family.BELL_TRIANGLE)

    @property
    def triangular(self):
        return self in (Family.STIRLING2, Family.BELL_TRIANGLE, Family.DEGENERATE_STIRLING2)


class Method(str, Enum):
    """Construction path that produced a table."""

    SERIES = "series"
    CLASSIC = "classic"
    THEOREM1 = "theorem1"
    PRODUCT = "product"
    RECURRENCE = "recurrence"
    PARTITION = "partition"
    POWER = "power"


Value = Union[BivarPoly, int]


@dataclass(frozen=True)
class DegenSequenceTable:
    family: Family
    method: Method
    start: int
    values: Tuple[Union[Value, Tuple[Value, ...]], ...]

    def __post_init__(self):
        if self.start < 0:
            raise ValueError("Index range must start at a natural number.")
        object.__setattr__(self, "family", Family.parse(self.family))
        object.__setattr__(self, "method", Method(self.method))
        if self.family.triangular:
            object.__setattr__(self, "values", tuple(tuple(row) for row in self.values))
        else:
            object.__setattr__(self, "values", tuple(self.values))

    @property
    def stop(self):
        """Last index, inclusive."""
        return self.start + len(self.values) - 1

    @property
    def indices(self):
        return range(self.start, self.stop + 1)

    def __getitem__(self, n):
        if n not in self.indices:
            raise IndexError(f"Index {n} outside table range {self.start}..{self.stop}.")
        return self.values[n - self.start]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(zip(self.indices, self.values))
