"""Exception hierarchy for qtmkit.

Validation failures (bad temperatures, inadmissible sign patterns, values
outside a machine design's operating interval, ...) derive from
:class:`ValidationError`, which is also a ``ValueError``.  I/O failures while
writing sweep output derive from :class:`EmitIOError`.
"""


class QtmError(Exception):
    """Base class for all qtmkit errors."""


class ValidationError(QtmError, ValueError):
    """Invalid argument or physically inadmissible input."""


class InvalidReservoirError(ValidationError):
    """Reservoir temperatures violate 0 < t_low < t_high."""


class InvalidThetaError(ValidationError):
    """Temperature ratio must be strictly greater than one."""


class InvalidTemperatureError(ValidationError):
    """Absolute temperature must be strictly positive."""


class InvalidRhoError(ValidationError):
    """Compression ratio outside its admissible range."""


class DegenerateExchangeError(ValidationError):
    """Energy exchange with a reservoir is exactly zero."""


class InvalidSignsError(ValidationError):
    """Reservoir exchanges share a sign; no cyclic operation matches."""


class UnclassifiableExchangeError(ValidationError):
    """Sign/magnitude pattern matches no operational region."""


class BoundaryRegionError(ValidationError):
    """Operation undefined on a region-boundary marker."""


class OutOfRegionError(ValidationError):
    """Energy ratio lies outside the design's region interval."""


class SingularEfficiencyError(ValidationError):
    """Energy ratio sits exactly on a region-interval endpoint."""


class DegenerateMediumError(ValidationError):
    """Working-medium spectrum has a non-positive or missing gap."""


class SpectrumMismatchError(ValidationError):
    """Stroke endpoints do not share the required level spectrum."""


class OccupationMismatchError(ValidationError):
    """Stroke endpoints do not share the required occupations."""


class InvalidRingError(ValidationError):
    """Ring radius or effective mass is non-positive."""


class InvalidGapError(ValidationError):
    """Explicit gap construction received a non-positive gap or ratio."""


class EmptyGridError(ValidationError):
    """Sweep grid contains no points."""


class EmitIOError(QtmError):
    """Failed to write sweep output; message carries the path."""
