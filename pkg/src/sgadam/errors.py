"""Exception taxonomy shared across the package."""


class SgadamError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(SgadamError):
    """Tensor shapes or axes violate an operation's contract."""


class ParameterError(SgadamError):
    """A hyperparameter or argument is outside its valid range."""


class NonFiniteError(SgadamError):
    """NaN or Inf encountered where finite values are required."""


class DivergenceError(SgadamError):
    """An optimization run left the trusted numeric region."""


class ConfigError(SgadamError):
    """An experiment configuration failed validation."""


class FormatError(SgadamError):
    """Base class for binary file format violations."""


class BadMagicError(FormatError):
    """File does not start with the expected magic bytes."""


class TruncatedError(FormatError):
    """File ended before the declared payload was complete."""


class CountMismatchError(FormatError):
    """Paired files disagree on the number of records."""


class VersionError(FormatError):
    """File carries an unsupported format version."""


class ChecksumError(FormatError):
    """Stored hash does not match the expected value."""
