"""Exception hierarchy shared by every module of the package."""


class FFKDFError(Exception):
    """Base class for all package errors."""


class FieldError(FFKDFError):
    pass


class NonPrimeP(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class CapExceeded(FFKDFError):
    pass


class InvertZero(FieldError, ZeroDivisionError):
    pass


class LogOfZero(FieldError, ValueError):
    pass


class LevelMismatch(FFKDFError):
    pass


class NotDivisible(FFKDFError):
    pass


class DivisionByZeroRational(FFKDFError, ZeroDivisionError):
    pass


class FieldMismatch(FFKDFError):
    pass


class ParseError(FFKDFError, ValueError):
    pass


class NotFound(FFKDFError, KeyError):
    pass


# the CLI reports an unknown identity id under this name
UnknownIdentity = NotFound


class OddQRequired(FFKDFError):
    pass


class InadmissibleCase(FFKDFError):
    pass


class IoError(FFKDFError, OSError):
    pass
