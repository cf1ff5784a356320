"""Energy-exchange bookkeeping and operational-region classification.

A thermal machine couples a working medium to a hot reservoir, a cold
reservoir, and everything else ("the outside").  Per cycle it exchanges three
signed energies, under the convention

* absorbed from a reservoir  > 0,  released to a reservoir  < 0,
* generated to the outside   > 0,  received from the outside < 0,

with conservation forcing ``e_out = e_high + e_low``.  Only three
sign/magnitude patterns are compatible with the second law, and they are
separated by thresholds of the dimensionless ratio ``alpha_sq = -e_high/e_low``
at ``1/theta_sq``, ``1`` and ``theta_sq``, where ``theta_sq = t_high/t_low``.
This module holds the value types and the classifier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, unique

from .errors import (
    DegenerateExchangeError,
    InvalidReservoirError,
    InvalidSignsError,
    InvalidThetaError,
    UnclassifiableExchangeError,
    ValidationError,
)

__all__ = [
    "ReservoirPair",
    "ExchangeTriple",
    "OperationalRegion",
    "AlphaSquared",
    "theta_squared",
    "alpha_squared",
    "classify_region",
    "DEFAULT_CLASSIFY_TOL",
]

#: Relative half-width of the band around each alpha_sq threshold inside
#: which a triple is reported as a boundary marker instead of a region.
DEFAULT_CLASSIFY_TOL = 1e-9


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")


def _require_theta(theta_sq: float) -> None:
    _require_finite("theta_sq", theta_sq)
    if theta_sq <= 1.0:
        raise InvalidThetaError(
            f"temperature ratio theta_sq must exceed 1, got {theta_sq!r}"
        )


@dataclass(frozen=True)
class ReservoirPair:
    """Hot/cold reservoir temperatures, ``0 < t_low < t_high``.

    Units are the caller's choice (kelvin or reduced); only the ratio matters
    downstream.
    """

    t_low: float
    t_high: float

    def __post_init__(self) -> None:
        _require_finite("t_low", self.t_low)
        _require_finite("t_high", self.t_high)
        if self.t_low <= 0.0:
            raise InvalidReservoirError(f"t_low must be positive, got {self.t_low!r}")
        if self.t_high <= self.t_low:
            raise InvalidReservoirError(
                f"t_high must exceed t_low, got t_low={self.t_low!r}, "
                f"t_high={self.t_high!r}"
            )


def theta_squared(res: ReservoirPair) -> float:
    """High-low temperature ratio ``t_high / t_low`` (always > 1)."""
    return res.t_high / res.t_low


@dataclass(frozen=True)
class ExchangeTriple:
    """Per-cycle signed energies exchanged with both reservoirs.

    Only the two reservoir exchanges are stored; the outside exchange is
    derived, so conservation cannot be violated by construction.  Sign
    conventions are module-level (absorbed/generated positive).  Arbitrary
    sign combinations are accepted here; physical admissibility is judged by
    :func:`classify_region`.
    """

    e_high: float
    e_low: float

    def __post_init__(self) -> None:
        _require_finite("e_high", self.e_high)
        _require_finite("e_low", self.e_low)

    @property
    def e_out(self) -> float:
        """Energy exchanged with the outside, ``e_high + e_low``."""
        return self.e_high + self.e_low


@unique
class OperationalRegion(Enum):
    """The three operational regions, the 2Acquirers subregions, and the
    markers emitted when a triple sits on a region boundary within tolerance.
    """

    TWO_ACQUIRERS_OUT = "TwoAcquirersOut"
    TWO_ACQUIRERS_HIGH = "TwoAcquirersHigh"
    OUT_TRANSFERS = "OutTransfers"
    PUMPERS = "Pumpers"
    BOUNDARY_2ACQ_SUBREGIONS = "Boundary2AcqSubregions"
    BOUNDARY_2ACQ_OUTT = "Boundary2AcqOutT"
    BOUNDARY_OUTT_PUMP = "BoundaryOutTPump"

    @property
    def is_boundary(self) -> bool:
        return self in (
            OperationalRegion.BOUNDARY_2ACQ_SUBREGIONS,
            OperationalRegion.BOUNDARY_2ACQ_OUTT,
            OperationalRegion.BOUNDARY_OUTT_PUMP,
        )


@dataclass(frozen=True)
class AlphaSquared:
    """Thermal high-low energy ratio ``-e_high/e_low`` of a valid triple."""

    value: float

    def __post_init__(self) -> None:
        _require_finite("alpha_sq", self.value)
        if self.value <= 0.0:
            raise ValidationError(f"alpha_sq must be positive, got {self.value!r}")

    def __float__(self) -> float:
        return self.value


def alpha_squared(ex: ExchangeTriple) -> AlphaSquared:
    """Thermal high-low energy ratio of a triple.

    Requires both reservoir exchanges nonzero and of opposite sign, which
    makes the ratio positive in every operational region.
    """
    if ex.e_high == 0.0 or ex.e_low == 0.0:
        raise DegenerateExchangeError(
            f"both reservoir exchanges must be nonzero, got "
            f"e_high={ex.e_high!r}, e_low={ex.e_low!r}"
        )
    if (ex.e_high > 0.0) == (ex.e_low > 0.0):
        raise InvalidSignsError(
            f"reservoir exchanges must have opposite signs, got "
            f"e_high={ex.e_high!r}, e_low={ex.e_low!r}"
        )
    return AlphaSquared(-ex.e_high / ex.e_low)


def classify_region(
    ex: ExchangeTriple, theta_sq: float, tol: float = DEFAULT_CLASSIFY_TOL
) -> OperationalRegion:
    """Assign an exchange triple to its operational region.

    For the forward orientation (absorb hot, release cold) the regions are,
    in increasing ``alpha_sq``: TwoAcquirersOut below ``1/theta_sq``,
    TwoAcquirersHigh up to ``1``, OutTransfers up to ``theta_sq``.  The
    reversed orientation (release hot, absorb cold) is admissible only above
    ``theta_sq``, where it is the Pumpers region.  Anything else -- equal
    signs, or an orientation whose ratio would beat the Carnot bound -- is
    rejected as physically inadmissible.

    Parameters
    ----------
    ex : ExchangeTriple
        The per-cycle energies.
    theta_sq : float
        Reservoir temperature ratio, > 1.
    tol : float, optional
        Relative half-width (w.r.t. ``alpha_sq``) of the band around each
        threshold that maps to a boundary marker.

    Returns
    -------
    OperationalRegion
        A region, subregion, or boundary marker.
    """
    _require_theta(theta_sq)
    if not (tol >= 0.0):
        raise ValidationError(f"tol must be non-negative, got {tol!r}")
    if ex.e_high == 0.0 or ex.e_low == 0.0:
        raise DegenerateExchangeError(
            f"cannot classify a triple with a zero reservoir exchange: "
            f"e_high={ex.e_high!r}, e_low={ex.e_low!r}"
        )
    forward = ex.e_high > 0.0
    if forward == (ex.e_low > 0.0):
        raise UnclassifiableExchangeError(
            f"reservoir exchanges share a sign (e_high={ex.e_high!r}, "
            f"e_low={ex.e_low!r}); no operational region matches"
        )

    a = -ex.e_high / ex.e_low
    band = tol * a
    if forward and abs(a - 1.0 / theta_sq) <= band:
        return OperationalRegion.BOUNDARY_2ACQ_SUBREGIONS
    if forward and abs(a - 1.0) <= band:
        return OperationalRegion.BOUNDARY_2ACQ_OUTT
    if abs(a - theta_sq) <= band:
        # Reversible Carnot limit: both orientations degenerate here.
        return OperationalRegion.BOUNDARY_OUTT_PUMP

    if forward:
        if a < 1.0 / theta_sq:
            return OperationalRegion.TWO_ACQUIRERS_OUT
        if a < 1.0:
            return OperationalRegion.TWO_ACQUIRERS_HIGH
        if a < theta_sq:
            return OperationalRegion.OUT_TRANSFERS
        raise UnclassifiableExchangeError(
            f"alpha_sq={a!r} exceeds theta_sq={theta_sq!r} for an "
            f"absorb-hot/release-cold triple; this would beat the Carnot "
            f"bound and is inadmissible"
        )
    if a > theta_sq:
        return OperationalRegion.PUMPERS
    raise UnclassifiableExchangeError(
        f"alpha_sq={a!r} is below theta_sq={theta_sq!r} for a "
        f"release-hot/absorb-cold triple; this would beat the Carnot "
        f"bound and is inadmissible"
    )
