"""Exceptions shared across the package."""


class SkwordError(Exception):
    """Base class for all package errors."""


class NotAUnit(SkwordError):
    """Inversion was attempted on a residue divisible by p."""


class DimensionMismatch(SkwordError):
    """Operands live over different rings or have different sizes."""


class BadPrecision(SkwordError):
    """A projection precision is outside [1, N]."""


class LevelTooLow(SkwordError):
    """A group element is not deep enough in the congruence filtration."""


class InvalidType(SkwordError):
    """An unknown root-system type or an out-of-range rank."""


class CoveringUnavailable(SkwordError):
    """No covering certificate was found within the search bound."""


class CertificateMismatch(SkwordError):
    """A covering certificate does not match the algebra it is used on."""


class ZeroLetter(SkwordError):
    """A word contained the letter 0, which names no generator."""


class IndexOutOfRange(SkwordError):
    """A word letter points outside the generating set."""


class NotGenerating(SkwordError):
    """BFS closure of the generating set is a proper subgroup."""


class TooLarge(SkwordError):
    """The requested enumeration exceeds the configured size cap."""


class BadParams(SkwordError):
    """Numeric parameters outside the domain of a formula."""
