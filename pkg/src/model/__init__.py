from .exceptions import DomainError, ExactError, SeriesDivisionError, TruncationError
from .poly import BivarPoly
from .rational import as_rational, inverse, parse_rational
from .series import TruncSeries

__all__ = [
    "BivarPoly",
    "TruncSeries",
    "as_rational",
    "inverse",
    "parse_rational",
    "DomainError",
    "ExactError",
    "SeriesDivisionError",
    "TruncationError",
]
