"""Exception types raised across the package."""


class OPGFError(Exception):
    """Base class for all package errors."""


class NonUnitConstantTerm(OPGFError, ZeroDivisionError):
    """Series division by a series whose constant term is not invertible."""


class InnerConstantTermNonzero(OPGFError, ValueError):
    """Composition (or exp) applied to an inner series with u(0) != 0."""


class ConstantTermNotOne(OPGFError, ValueError):
    """log / rational power applied to a series with f(0) != 1."""


class DenominatorParameterPole(OPGFError, ZeroDivisionError):
    """A lower hypergeometric parameter hits a non-positive integer in range."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ParameterPole(OPGFError, ZeroDivisionError):
    """A recurrence coefficient rule is singular at index ``n``."""

    def __init__(self, message, n=None):
        super().__init__(message)
        self.n = n


class ZeroAlpha(OPGFError, ZeroDivisionError):
    def __init__(self, n):
        super().__init__(f"alpha[{n}] == 0")
        self.n = n


class UnknownIdentity(OPGFError, KeyError):
    pass


class InvalidParameters(OPGFError, ValueError):
    pass


class ConfigError(OPGFError, ValueError):
    pass
