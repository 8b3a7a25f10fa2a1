class ExactError(Exception):
    pass


class DomainError(ExactError, ArithmeticError):
    pass


class SeriesDivisionError(ExactError, ZeroDivisionError):
    pass


class TruncationError(ExactError, IndexError):
    pass
