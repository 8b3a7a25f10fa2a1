from .base import DegenSequenceTable, Family, Method
from .identities import IdentityCheck, IdentityContext, IdentityId, VerificationReport, run_all

__all__ = [
    "DegenSequenceTable",
    "Family",
    "Method",
    "IdentityCheck",
    "IdentityContext",
    "IdentityId",
    "VerificationReport",
    "run_all",
]
