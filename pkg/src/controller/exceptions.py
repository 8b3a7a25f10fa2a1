from model.exceptions import DomainError, ExactError, SeriesDivisionError, TruncationError  # noqa: F401


class ControllerError(Exception):
    pass


class ArityError(ControllerError, ValueError):
    pass


class UnknownFamilyError(ControllerError, KeyError):
    pass


class UnknownIdentityError(ControllerError, KeyError):
    pass
