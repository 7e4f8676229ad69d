"""Exception hierarchy shared by every module of the engine."""


class FFRTError(Exception):
    """Base class for all engine errors."""


class DivisionByZero(FFRTError, ZeroDivisionError):
    pass


class FieldMismatch(FFRTError, TypeError):
    pass


class ReducibleModulus(FFRTError, ValueError):
    """The supplied minimal polynomial is not irreducible (or not separable)."""


class ZeroSubspace(FFRTError, ValueError):
    pass


class InvalidPresentation(FFRTError, ValueError):
    pass


class StabilizationFailure(FFRTError):
    """The coefficient spaces never settle at the full field within the hard cap."""


class ConductorNotCleared(FFRTError):
    """q = p^e is smaller than the conductor, so no decomposition formula applies."""


class NotProper(FFRTError):
    pass


class PatternMismatch(FFRTError):
    pass


class CertificateFailure(FFRTError):
    pass


class FPurityFailure(FFRTError):
    pass


class BaseNotCertified(FFRTError):
    pass


class UnsupportedCharacteristic(FFRTError, ValueError):
    pass


class ParseError(FFRTError, ValueError):
    pass
