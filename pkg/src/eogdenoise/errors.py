"""Exception classes shared across the package."""


class EogDenoiseError(Exception):
    """Base class for all package errors."""


class InvalidSegmentError(EogDenoiseError):
    """A segment is empty or contains non-finite samples."""


class DegenerateSignalError(EogDenoiseError):
    """An operation needs nonzero RMS but got an (effectively) silent signal."""


class ShapeError(EogDenoiseError):
    """Array lengths, rates, or matrix dimensions do not line up."""


class ConfigError(EogDenoiseError):
    """A parameter value is outside its valid range."""


class StateError(EogDenoiseError):
    """An operation was driven with stale or mismatched cached state."""


class FormatError(EogDenoiseError):
    """A binary or CSV file does not conform to its declared format."""


class ManifestError(FormatError):
    """A store file's manifest disagrees with its payload."""
