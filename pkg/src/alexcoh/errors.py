"""Exception hierarchy shared by all modules."""


class AlexcohError(ValueError):
    """Base class for every error raised by this package."""


# gf
class NotPrime(AlexcohError):
    pass


class Reducible(AlexcohError):
    pass


class DegreeZero(AlexcohError):
    pass


class SpecMismatch(AlexcohError):
    pass


class ZeroElement(AlexcohError):
    pass


class InvalidOmega(AlexcohError):
    """omega is 0 (no quandle) or 1 (trivial quandle)."""


class DivisionByZero(AlexcohError, ZeroDivisionError):
    pass


class ParseError(AlexcohError):
    pass


# polyring / complex
class ArityMismatch(AlexcohError):
    pass


class NotInComplex(AlexcohError):
    pass


class NotInFiltration(AlexcohError):
    pass


class BadFiltration(AlexcohError):
    pass


# cocycles
class OmegaPrefixViolation(AlexcohError):
    pass


class NotDivisibleByP(AlexcohError):
    pass


class NotPowerOfP(AlexcohError):
    pass


class AdmissibilityViolation(AlexcohError):
    pass


# linalg
class InconsistentSpan(AlexcohError):
    """A coboundary column fell outside the cocycle span (delta o delta != 0)."""


# oracle
class AxiomViolation(AlexcohError):
    pass


class DegreeUnsupported(AlexcohError):
    pass
