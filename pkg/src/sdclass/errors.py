"""Exception types raised across the package."""


class SDClassError(Exception):
    pass


class RankDeficient(SDClassError):
    pass


class TooLarge(SDClassError):
    """The requested enumeration exceeds its budget."""


class LengthMismatch(SDClassError):
    pass


class InconsistentEnumerator(SDClassError):
    pass


class DoublyEvenInput(SDClassError):
    pass


class SearchBudgetExceeded(SDClassError):
    pass


class VerificationFailed(SDClassError):
    pass


class CertificateFailed(SDClassError):
    pass


class NonDivisible(SDClassError):
    pass


class ParseError(SDClassError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class IntegrityError(SDClassError):
    pass


class NotCertified(SDClassError):
    pass
