"""
Custom exceptions for the readcodes toolkit
"""
from typing import Optional


class ReadCodeError(Exception):
    """Base exception for all readcodes errors"""
    pass


class ValidationError(ReadCodeError):
    """Raised when an input violates an operation's precondition"""
    pass


class ConfigurationError(ReadCodeError):
    """Raised when configuration or a resource budget is invalid"""
    pass


class AnalysisError(ReadCodeError):
    """Raised when a structural analysis contradicts a proven property"""
    pass


class InvalidSymbol(ValidationError):
    """Raised when a symbol lies outside [0, q-1] or q is unsupported"""
    pass


class InvalidReadLength(ValidationError):
    """Raised when the read length is below the operation's minimum"""
    pass


class ShapeMismatch(ValidationError):
    """Raised when two objects differ in length or alphabet"""
    pass


class NotARealization(ValidationError):
    """Raised when a read vector is not the read vector of any word"""
    pass


class NotDistinct(ValidationError):
    """Raised when an alternating sequence is requested with a = b"""
    pass


class EmptyWord(ValidationError):
    """Raised when an operation needs at least one symbol"""
    pass


class RankOutOfRange(ValidationError):
    """Raised when a multiset rank is outside [0, q_ell)"""
    pass


class IdenticalWords(ValidationError):
    """Raised when a pair operation receives x = y"""
    pass


class NotDistanceFour(ValidationError):
    """Raised when classify_d4 receives a pair whose 2-read distance is not 4"""
    pass


class InvalidFamilyParams(ValidationError):
    """Raised when code family parameters are inconsistent"""
    pass


class IndexOutOfRange(ValidationError):
    """Raised when an index lies outside its documented range"""
    pass


class PreconditionViolated(ValidationError):
    """Raised when a formula is evaluated outside its domain"""
    pass


class PrescribedTNonpositive(PreconditionViolated):
    """Raised when the prescribed clique parameter t* is below 1"""
    pass


class RadiusTooLarge(ValidationError):
    """Raised when a deletion radius exceeds the word length"""
    pass


class MaxOverEmptySet(ValidationError):
    """Raised when a maximum is taken over no qualifying pairs"""
    pass


class UnknownCheck(ValidationError):
    """Raised when a sweep names an unregistered check"""
    pass


class ParseError(ValidationError):
    """Raised when CLI text cannot be parsed into a word or read vector"""
    pass


class CharacterizationError(AnalysisError):
    """Raised when a confusable pair does not match its proven shape"""
    pass


class BudgetExceeded(ConfigurationError):
    """Raised when an exhaustive operation needs more than its budget"""

    def __init__(self, what: str, required: int, budget: int, hint: Optional[str] = None):
        self.what = what
        self.required = required
        self.budget = budget
        message = f"{what} needs {required:,} but the budget is {budget:,}"
        if hint:
            message = f"{message} ({hint})"
        super().__init__(message)
