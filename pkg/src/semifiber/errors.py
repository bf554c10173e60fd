"""Exception hierarchy. Every error carries a short machine-readable ``code``."""


class SemigroupError(Exception):
    code = "error"


class NotCoprime(SemigroupError):
    code = "not-coprime"


class NotAMember(SemigroupError):
    code = "not-a-member"


class IsN(SemigroupError):
    code = "is-n"


class NotNumerical(SemigroupError):
    code = "not-numerical"


class NotAnMdSet(SemigroupError):
    code = "not-an-md-set"


class WrongQuotient(SemigroupError):
    code = "wrong-quotient"

    def __init__(self, message, actual=None):
        super().__init__(message)
        self.actual = actual


class InvalidA(SemigroupError):
    code = "invalid-a"


class BadBase(SemigroupError):
    code = "bad-base"


class BadTarget(SemigroupError):
    code = "bad-target"


class BadFactorization(SemigroupError):
    code = "bad-factorization"


class NotInDelta(SemigroupError):
    code = "not-in-delta"


class InDDelta(SemigroupError):
    code = "in-d-delta"


class IsDDelta(SemigroupError):
    code = "is-d-delta"


class BadGluing(SemigroupError):
    code = "bad-gluing"


class BoundTooSmall(SemigroupError):
    code = "bound-too-small"


class ParseError(SemigroupError):
    code = "parse-error"


class BadDivisor(SemigroupError):
    code = "bad-divisor"
