"""Catalog of the eight thermal-machine designs.

Each operational region (or 2Acquirers subregion) hosts two designs, told
apart by which energy exchange they prioritize (target) versus which one
funds it (source).  Efficiency is |target|/|source|, which collapses to a
one-parameter function of ``alpha_sq = -e_high/e_low``:

====== ================== ================= ================ ================
design region             target            source           efficiency(a)
====== ================== ================= ================ ================
QCO    TwoAcquirersOut    absorb high       receive outside  a / (1 - a)
QHT    TwoAcquirersOut    release low       receive outside  1 / (1 - a)
QDP    TwoAcquirersHigh   receive outside   absorb high      (1 - a) / a
QHO    TwoAcquirersHigh   release low       absorb high      1 / a
QEN    OutTransfers       generate outside  absorb high      (a - 1) / a
QLL    OutTransfers       release low       absorb high      1 / a
QRE    Pumpers            absorb low        receive outside  1 / (a - 1)
QHP    Pumpers            release high      receive outside  a / (a - 1)
====== ================== ================= ================ ================

Operating a design in the reversible limit pins ``alpha_sq`` at ``1/theta_sq``
(2Acquirers designs) or ``theta_sq`` (the rest), which turns the efficiency
into the design's Carnot value.  That value caps the efficiency for every
design except QLL, where it is a floor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, unique
from typing import NamedTuple, Optional

from .errors import (
    BoundaryRegionError,
    InvalidRhoError,
    InvalidThetaError,
    OutOfRegionError,
    SingularEfficiencyError,
    ValidationError,
)
from .regions import OperationalRegion

__all__ = [
    "QtmDesign",
    "EnergyRole",
    "CarnotLimitKind",
    "AlphaBounds",
    "IntersectionSet",
    "RelationResiduals",
    "admissible_designs",
    "efficiency",
    "carnot_efficiency",
    "alpha_bounds",
    "intersections",
    "relation_residuals",
    "classical_otto_efficiency",
]


@unique
class EnergyRole(Enum):
    """One of the six per-cycle energy exchanges a design can prioritize."""

    ABSORB_HIGH = "absorb_high"
    RELEASE_HIGH = "release_high"
    ABSORB_LOW = "absorb_low"
    RELEASE_LOW = "release_low"
    GENERATE_OUTSIDE = "generate_outside"
    RECEIVE_OUTSIDE = "receive_outside"


@unique
class QtmDesign(Enum):
    """The eight machine designs: cooler, heater, damper, heating optimizer,
    engine, laser-like, refrigerator, heat pumper."""

    QCO = "QCO"
    QHT = "QHT"
    QDP = "QDP"
    QHO = "QHO"
    QEN = "QEN"
    QLL = "QLL"
    QRE = "QRE"
    QHP = "QHP"

    @property
    def region(self) -> OperationalRegion:
        return _DESIGN_REGION[self]

    @property
    def target(self) -> EnergyRole:
        """Exchange the design prioritizes (efficiency numerator)."""
        return _DESIGN_ROLES[self][0]

    @property
    def source(self) -> EnergyRole:
        """Exchange that funds the design (efficiency denominator)."""
        return _DESIGN_ROLES[self][1]


_DESIGN_REGION = {
    QtmDesign.QCO: OperationalRegion.TWO_ACQUIRERS_OUT,
    QtmDesign.QHT: OperationalRegion.TWO_ACQUIRERS_OUT,
    QtmDesign.QDP: OperationalRegion.TWO_ACQUIRERS_HIGH,
    QtmDesign.QHO: OperationalRegion.TWO_ACQUIRERS_HIGH,
    QtmDesign.QEN: OperationalRegion.OUT_TRANSFERS,
    QtmDesign.QLL: OperationalRegion.OUT_TRANSFERS,
    QtmDesign.QRE: OperationalRegion.PUMPERS,
    QtmDesign.QHP: OperationalRegion.PUMPERS,
}

_DESIGN_ROLES = {
    QtmDesign.QCO: (EnergyRole.ABSORB_HIGH, EnergyRole.RECEIVE_OUTSIDE),
    QtmDesign.QHT: (EnergyRole.RELEASE_LOW, EnergyRole.RECEIVE_OUTSIDE),
    QtmDesign.QDP: (EnergyRole.RECEIVE_OUTSIDE, EnergyRole.ABSORB_HIGH),
    QtmDesign.QHO: (EnergyRole.RELEASE_LOW, EnergyRole.ABSORB_HIGH),
    QtmDesign.QEN: (EnergyRole.GENERATE_OUTSIDE, EnergyRole.ABSORB_HIGH),
    QtmDesign.QLL: (EnergyRole.RELEASE_LOW, EnergyRole.ABSORB_HIGH),
    QtmDesign.QRE: (EnergyRole.ABSORB_LOW, EnergyRole.RECEIVE_OUTSIDE),
    QtmDesign.QHP: (EnergyRole.RELEASE_HIGH, EnergyRole.RECEIVE_OUTSIDE),
}

#: Designs whose efficiency formula lives on alpha_sq in (0, 1).
_LOW_RATIO_DESIGNS = frozenset(
    {QtmDesign.QCO, QtmDesign.QHT, QtmDesign.QDP, QtmDesign.QHO}
)

# The forms below share denominators within each region pair, so the exact
# pairwise identities (difference or sum equal to one) hold to machine
# precision rather than merely to algebraic equivalence.
_EFFICIENCY = {
    QtmDesign.QCO: lambda a: a / (1.0 - a),
    QtmDesign.QHT: lambda a: 1.0 / (1.0 - a),
    QtmDesign.QDP: lambda a: (1.0 - a) / a,
    QtmDesign.QHO: lambda a: 1.0 / a,
    QtmDesign.QEN: lambda a: (a - 1.0) / a,
    QtmDesign.QLL: lambda a: 1.0 / a,
    QtmDesign.QRE: lambda a: 1.0 / (a - 1.0),
    QtmDesign.QHP: lambda a: a / (a - 1.0),
}

_CARNOT = {
    QtmDesign.QCO: lambda t: 1.0 / (t - 1.0),
    QtmDesign.QHT: lambda t: t / (t - 1.0),
    QtmDesign.QDP: lambda t: t - 1.0,
    QtmDesign.QHO: lambda t: t,
    QtmDesign.QEN: lambda t: (t - 1.0) / t,
    QtmDesign.QLL: lambda t: 1.0 / t,
    QtmDesign.QRE: lambda t: 1.0 / (t - 1.0),
    QtmDesign.QHP: lambda t: t / (t - 1.0),
}


def _require_theta(theta_sq: float) -> None:
    if not (math.isfinite(theta_sq) and theta_sq > 1.0):
        raise InvalidThetaError(
            f"temperature ratio theta_sq must exceed 1, got {theta_sq!r}"
        )


def admissible_designs(region: OperationalRegion) -> frozenset[QtmDesign]:
    """The two designs that can operate in the given (sub)region."""
    if region.is_boundary:
        raise BoundaryRegionError(
            f"no design operates on a region boundary ({region.value})"
        )
    return frozenset(d for d, r in _DESIGN_REGION.items() if r is region)


def efficiency(design: QtmDesign, alpha_sq: float) -> float:
    """Efficiency (or coefficient of performance) at the given energy ratio.

    Defined on the open interval of the design's region: (0, 1) for the
    2Acquirers designs, (1, inf) for the rest.  Interval endpoints are the
    reversible/degenerate limits and raise instead of returning a value.
    """
    if not math.isfinite(alpha_sq):
        raise OutOfRegionError(f"alpha_sq must be finite, got {alpha_sq!r}")
    if design in _LOW_RATIO_DESIGNS:
        if alpha_sq in (0.0, 1.0):
            raise SingularEfficiencyError(
                f"{design.value} efficiency is singular at alpha_sq={alpha_sq!r}"
            )
        if not 0.0 < alpha_sq < 1.0:
            raise OutOfRegionError(
                f"{design.value} requires alpha_sq in (0, 1), got {alpha_sq!r}"
            )
    else:
        if alpha_sq == 1.0:
            raise SingularEfficiencyError(
                f"{design.value} efficiency is singular at alpha_sq=1"
            )
        if alpha_sq < 1.0:
            raise OutOfRegionError(
                f"{design.value} requires alpha_sq > 1, got {alpha_sq!r}"
            )
    return _EFFICIENCY[design](alpha_sq)


def carnot_efficiency(design: QtmDesign, theta_sq: float) -> float:
    """Carnot-limit efficiency, a function of the temperature ratio only.

    Equals ``efficiency(design, a*)`` at the design's reversible ratio
    ``a* = 1/theta_sq`` (2Acquirers designs) or ``a* = theta_sq`` (others).
    """
    _require_theta(theta_sq)
    return _CARNOT[design](theta_sq)


@unique
class CarnotLimitKind(Enum):
    """Whether the Carnot value caps the efficiency or floors it."""

    MAXIMUM = "maximum"
    MINIMUM = "minimum"


@dataclass(frozen=True)
class AlphaBounds:
    """Admissible ``alpha_sq`` interval of a design at a fixed theta_sq.

    ``carnot_alpha_sq`` is the endpoint where the efficiency meets its Carnot
    value; it is the only physically reachable endpoint (in the reversible
    limit).  ``carnot_limit_kind`` records whether that value is the maximum
    of the efficiency over the interval or -- uniquely for QLL -- the minimum.
    """

    alpha_sq_min: float
    alpha_sq_max: float
    carnot_limit_kind: CarnotLimitKind
    carnot_alpha_sq: float

    def __post_init__(self) -> None:
        if not self.alpha_sq_min < self.alpha_sq_max:
            raise ValidationError(
                f"alpha_sq_min must be below alpha_sq_max, got "
                f"{self.alpha_sq_min!r} >= {self.alpha_sq_max!r}"
            )

    def contains(self, alpha_sq: float) -> bool:
        """Strict interior test."""
        return self.alpha_sq_min < alpha_sq < self.alpha_sq_max


def alpha_bounds(design: QtmDesign, theta_sq: float) -> AlphaBounds:
    """Admissible ``alpha_sq`` interval for the design between reservoirs
    with the given temperature ratio."""
    _require_theta(theta_sq)
    inv = 1.0 / theta_sq
    if design in (QtmDesign.QCO, QtmDesign.QHT):
        return AlphaBounds(0.0, inv, CarnotLimitKind.MAXIMUM, inv)
    if design in (QtmDesign.QDP, QtmDesign.QHO):
        return AlphaBounds(inv, 1.0, CarnotLimitKind.MAXIMUM, inv)
    if design is QtmDesign.QEN:
        return AlphaBounds(1.0, theta_sq, CarnotLimitKind.MAXIMUM, theta_sq)
    if design is QtmDesign.QLL:
        # Its efficiency falls with alpha_sq, so the Carnot value at the
        # upper endpoint bounds it from below.
        return AlphaBounds(1.0, theta_sq, CarnotLimitKind.MINIMUM, theta_sq)
    return AlphaBounds(theta_sq, math.inf, CarnotLimitKind.MAXIMUM, theta_sq)


@dataclass(frozen=True)
class IntersectionSet:
    """The three ``alpha_sq`` thresholds separating adjacent (sub)regions."""

    alpha_sq_subregion: float
    alpha_sq_2acq_outt: float
    alpha_sq_outt_pump: float

    def __post_init__(self) -> None:
        if not (
            self.alpha_sq_subregion
            < self.alpha_sq_2acq_outt
            < self.alpha_sq_outt_pump
        ):
            raise ValidationError("intersection thresholds must be increasing")

    def as_tuple(self) -> tuple[float, float, float]:
        return (
            self.alpha_sq_subregion,
            self.alpha_sq_2acq_outt,
            self.alpha_sq_outt_pump,
        )


def intersections(theta_sq: float) -> IntersectionSet:
    """Region-boundary ratios ``(1/theta_sq, 1, theta_sq)``."""
    _require_theta(theta_sq)
    return IntersectionSet(1.0 / theta_sq, 1.0, theta_sq)


class RelationResiduals(NamedTuple):
    """Residuals of the four in-region pairwise identities, each zero to
    machine precision where its pair is defined and ``None`` elsewhere."""

    qht_minus_qco: Optional[float]  # QHT - QCO - 1 on (0, 1)
    qho_minus_qdp: Optional[float]  # QHO - QDP - 1 on (0, 1)
    qen_plus_qll: Optional[float]  # QEN + QLL - 1 on (1, inf)
    qhp_minus_qre: Optional[float]  # QHP - QRE - 1 on (1, inf)


def relation_residuals(
    alpha_sq: float, theta_sq: Optional[float] = None
) -> RelationResiduals:
    """Evaluate the pairwise efficiency identities at one energy ratio.

    The identities are independent of the temperature ratio; ``theta_sq`` is
    accepted (and validated) for signature symmetry with the rest of the
    catalog but does not influence applicability.
    """
    if theta_sq is not None:
        _require_theta(theta_sq)
    low = high = (None, None)
    if 0.0 < alpha_sq < 1.0:
        low = (
            efficiency(QtmDesign.QHT, alpha_sq)
            - efficiency(QtmDesign.QCO, alpha_sq)
            - 1.0,
            efficiency(QtmDesign.QHO, alpha_sq)
            - efficiency(QtmDesign.QDP, alpha_sq)
            - 1.0,
        )
    elif alpha_sq > 1.0 and math.isfinite(alpha_sq):
        high = (
            efficiency(QtmDesign.QEN, alpha_sq)
            + efficiency(QtmDesign.QLL, alpha_sq)
            - 1.0,
            efficiency(QtmDesign.QHP, alpha_sq)
            - efficiency(QtmDesign.QRE, alpha_sq)
            - 1.0,
        )
    return RelationResiduals(low[0], low[1], high[0], high[1])


def classical_otto_efficiency(rho: float) -> float:
    """Otto-cycle efficiency of a monatomic ideal gas at compression ratio
    ``rho``: ``1 - rho**(-2/3)``."""
    if not (math.isfinite(rho) and rho > 1.0):
        raise InvalidRhoError(f"compression ratio must exceed 1, got {rho!r}")
    return 1.0 - rho ** (-2.0 / 3.0)
