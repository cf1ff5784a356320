"""Compression-ratio sweeps, boundary reports, and record serialization.

A sweep walks a grid of compression ratios ``rho``, builds the working medium
at each point (``alpha_sq = rho**2``), runs the Otto cycle, classifies the
resulting exchange triple, and attaches the efficiencies of the two designs
admissible there.  Output goes to CSV (fixed column order, 12 significant
digits) or JSON (exact floats, round-trippable).

Every grid point is independent and every function here is pure, so callers
may evaluate points concurrently; records are always ordered by ascending
``rho`` regardless of evaluation order.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from enum import Enum, unique
from typing import Optional, Sequence

import numpy as np

from .designs import (
    CarnotLimitKind,
    QtmDesign,
    admissible_designs,
    alpha_bounds,
    carnot_efficiency,
    efficiency,
    intersections,
)
from .errors import (
    DegenerateExchangeError,
    EmitIOError,
    EmptyGridError,
    InvalidTemperatureError,
    InvalidThetaError,
    ValidationError,
)
from .media import CODATA, PhysicalConstants, RingOttoSetup, gap_medium, ring_medium
from .otto import TwoLevelMedium, otto_cycle_energies
from .regions import DEFAULT_CLASSIFY_TOL, OperationalRegion, classify_region

__all__ = [
    "MediumKind",
    "Normalization",
    "SweepSpec",
    "DesignEfficiency",
    "SweepRecord",
    "BoundaryReport",
    "EfficiencyCurve",
    "CSV_COLUMNS",
    "region_boundaries_rho",
    "default_rho_grid",
    "boundary_report",
    "run_sweep",
    "efficiency_curves",
    "emit",
    "emit_curves",
    "parse_records",
]

CSV_COLUMNS = (
    "rho",
    "alpha_sq",
    "e_high",
    "e_low",
    "e_out",
    "e_high_norm",
    "e_low_norm",
    "e_out_norm",
    "region",
    "design1",
    "eff1",
    "design2",
    "eff2",
    "carnot1",
    "carnot2",
)

#: Fixed presentation order of the designs within each region.
_DESIGN_ORDER = tuple(QtmDesign)


@unique
class MediumKind(Enum):
    QUANTUM_RING = "quantum_ring"
    GENERIC_GAP = "generic_gap"


@unique
class Normalization(Enum):
    NONE = "none"
    MAX_ABS_ENERGY = "max_abs_energy"


@dataclass(frozen=True)
class SweepSpec:
    """Parameters of one sweep.

    Exactly one of ``r_low`` (ring medium, meters) or ``gap_low`` (generic
    medium, energy units) must be set, matching ``medium_kind``.
    """

    t_low: float
    theta_sq: float
    rho_grid: tuple[float, ...]
    medium_kind: MediumKind = MediumKind.QUANTUM_RING
    normalization: Normalization = Normalization.MAX_ABS_ENERGY
    r_low: Optional[float] = None
    gap_low: Optional[float] = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t_low) and self.t_low > 0.0):
            raise InvalidTemperatureError(
                f"t_low must be positive, got {self.t_low!r}"
            )
        if not (math.isfinite(self.theta_sq) and self.theta_sq > 1.0):
            raise InvalidThetaError(f"theta_sq must exceed 1, got {self.theta_sq!r}")
        if len(self.rho_grid) == 0:
            raise EmptyGridError("rho_grid must contain at least one point")
        if any(not (math.isfinite(r) and r > 0.0) for r in self.rho_grid):
            raise ValidationError("rho_grid values must be positive and finite")
        if any(b <= a for a, b in zip(self.rho_grid, self.rho_grid[1:])):
            raise ValidationError("rho_grid must be strictly increasing")
        if self.medium_kind is MediumKind.QUANTUM_RING:
            if self.r_low is None or not (
                math.isfinite(self.r_low) and self.r_low > 0.0
            ):
                raise ValidationError(
                    "quantum_ring sweeps require a positive r_low"
                )
        else:
            if self.gap_low is None or not (
                math.isfinite(self.gap_low) and self.gap_low > 0.0
            ):
                raise ValidationError(
                    "generic_gap sweeps require a positive gap_low"
                )


@dataclass(frozen=True)
class DesignEfficiency:
    """Efficiency and Carnot value of one admissible design at one point."""

    design: QtmDesign
    efficiency: float
    carnot: float


@dataclass(frozen=True)
class SweepRecord:
    """One sweep grid point: energies, region, admissible-design metrics."""

    rho: float
    alpha_sq: float
    e_high: float
    e_low: float
    e_out: float
    e_high_norm: float
    e_low_norm: float
    e_out_norm: float
    region: OperationalRegion
    designs: tuple[DesignEfficiency, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class BoundaryReport:
    """Region boundaries of one sweep, in both rho and alpha_sq."""

    rho_subregion: float
    rho_2acq_outt: float
    rho_outt_pump: float
    alpha_sq_subregion: float
    alpha_sq_2acq_outt: float
    alpha_sq_outt_pump: float


def region_boundaries_rho(theta_sq: float) -> tuple[float, float, float]:
    """Boundary compression ratios ``(1/theta, 1, theta)``.

    All sweep machinery derives boundary rho values from this single helper
    so injected grid points, reports, and curve clipping agree bitwise.
    """
    thresholds = intersections(theta_sq)
    return (
        math.sqrt(thresholds.alpha_sq_subregion),
        1.0,
        math.sqrt(thresholds.alpha_sq_outt_pump),
    )


def boundary_report(theta_sq: float) -> BoundaryReport:
    """Boundary ratios for the given temperature ratio."""
    thresholds = intersections(theta_sq)
    rho_sub, rho_mid, rho_pump = region_boundaries_rho(theta_sq)
    return BoundaryReport(
        rho_subregion=rho_sub,
        rho_2acq_outt=rho_mid,
        rho_outt_pump=rho_pump,
        alpha_sq_subregion=thresholds.alpha_sq_subregion,
        alpha_sq_2acq_outt=thresholds.alpha_sq_2acq_outt,
        alpha_sq_outt_pump=thresholds.alpha_sq_outt_pump,
    )


def default_rho_grid(
    theta_sq: float,
    num: int = 600,
    rho_min: float = 0.05,
    rho_max: float = 3.0,
) -> tuple[float, ...]:
    """Uniform rho grid with the region-boundary ratios injected.

    Injection guarantees the sign crossings and the Carnot endpoints of the
    efficiency curves land exactly on grid points (when they fall inside the
    requested range).
    """
    if num < 2 or not 0.0 < rho_min < rho_max:
        raise ValidationError(
            f"need num >= 2 and 0 < rho_min < rho_max, got "
            f"num={num!r}, rho_min={rho_min!r}, rho_max={rho_max!r}"
        )
    grid = np.linspace(rho_min, rho_max, num)
    inject = [r for r in region_boundaries_rho(theta_sq) if rho_min <= r <= rho_max]
    return tuple(float(r) for r in np.unique(np.concatenate([grid, inject])))


def _build_medium(
    spec: SweepSpec, rho: float, constants: PhysicalConstants
) -> TwoLevelMedium:
    if spec.medium_kind is MediumKind.QUANTUM_RING:
        setup = RingOttoSetup(
            r_low=spec.r_low,
            r_high=spec.r_low / rho,
            t_low=spec.t_low,
            theta_sq=spec.theta_sq,
        )
        return ring_medium(setup, constants)
    return gap_medium(spec.gap_low, rho * rho)


def _classify_point(
    rho: float,
    triple_alpha_sq: float,
    energies,
    theta_sq: float,
) -> OperationalRegion:
    try:
        return classify_region(energies.as_exchange_triple(), theta_sq)
    except DegenerateExchangeError:
        # An exactly reversible point yields identically zero exchanges; the
        # gap ratio still identifies it as the OutTransfers/Pumpers boundary.
        band = DEFAULT_CLASSIFY_TOL * triple_alpha_sq
        if abs(triple_alpha_sq - theta_sq) <= band:
            return OperationalRegion.BOUNDARY_OUTT_PUMP
        raise DegenerateExchangeError(
            f"cycle energies vanished at rho={rho!r} away from the reversible "
            f"ratio; the gaps are probably enormous compared to k_B * t_low "
            f"(check units and constants)"
        ) from None


def _design_entries(
    region: OperationalRegion, alpha_sq: float, theta_sq: float
) -> tuple[DesignEfficiency, ...]:
    if region.is_boundary:
        return ()
    designs = sorted(
        admissible_designs(region), key=_DESIGN_ORDER.index
    )
    entries = []
    for design in designs:
        if alpha_bounds(design, theta_sq).contains(alpha_sq):
            entries.append(
                DesignEfficiency(
                    design=design,
                    efficiency=efficiency(design, alpha_sq),
                    carnot=carnot_efficiency(design, theta_sq),
                )
            )
    return tuple(entries)


def run_sweep(
    spec: SweepSpec, constants: PhysicalConstants = CODATA
) -> tuple[list[SweepRecord], BoundaryReport]:
    """Evaluate the Otto cycle over the whole rho grid.

    Returns per-point records ordered by ascending rho plus the boundary
    report.  With ``max_abs_energy`` normalization the three normalized
    energy columns share a single scale: the largest absolute energy found
    anywhere in the sweep.
    """
    points = []
    for rho in spec.rho_grid:
        medium = _build_medium(spec, rho, constants)
        energies = otto_cycle_energies(
            medium, spec.t_low, spec.theta_sq, constants.boltzmann_k
        )
        region = _classify_point(rho, medium.alpha_sq, energies, spec.theta_sq)
        points.append((rho, medium.alpha_sq, energies, region))

    if spec.normalization is Normalization.MAX_ABS_ENERGY:
        scale = max(
            max(abs(e.e_high_gamma), abs(e.e_low_gamma), abs(e.e_out))
            for _, _, e, _ in points
        )
        if scale == 0.0:
            scale = 1.0
    else:
        scale = 1.0

    records = [
        SweepRecord(
            rho=float(rho),
            alpha_sq=float(alpha_sq),
            e_high=energies.e_high_gamma,
            e_low=energies.e_low_gamma,
            e_out=energies.e_out,
            e_high_norm=energies.e_high_gamma / scale,
            e_low_norm=energies.e_low_gamma / scale,
            e_out_norm=energies.e_out / scale,
            region=region,
            designs=_design_entries(region, alpha_sq, spec.theta_sq),
        )
        for rho, alpha_sq, energies, region in points
    ]
    return records, boundary_report(spec.theta_sq)


@dataclass(frozen=True)
class EfficiencyCurve:
    """Efficiency-versus-rho series of one design, clipped to its admissible
    interval, with its Carnot level."""

    design: QtmDesign
    rho: tuple[float, ...]
    efficiency: tuple[float, ...]
    carnot: float
    carnot_limit_kind: CarnotLimitKind


def _rho_interval(
    design: QtmDesign, boundaries: tuple[float, float, float]
) -> tuple[float, float, bool, bool]:
    """Admissible rho interval with closed-endpoint flags.

    Only the Carnot endpoint is closed; the opposite endpoint is a singular
    or degenerate limit and stays open.
    """
    rho_sub, rho_mid, rho_pump = boundaries
    if design in (QtmDesign.QCO, QtmDesign.QHT):
        return (0.0, rho_sub, False, True)
    if design in (QtmDesign.QDP, QtmDesign.QHO):
        return (rho_sub, rho_mid, True, False)
    if design in (QtmDesign.QEN, QtmDesign.QLL):
        return (rho_mid, rho_pump, False, True)
    return (rho_pump, math.inf, True, False)


def efficiency_curves(spec: SweepSpec) -> dict[QtmDesign, EfficiencyCurve]:
    """Per-design efficiency series over the sweep's rho grid.

    Each series exists only on the design's admissible interval; the endpoint
    shared with the adjacent region is included, where the series value meets
    the design's Carnot level.
    """
    boundaries = region_boundaries_rho(spec.theta_sq)
    curves = {}
    for design in QtmDesign:
        lo, hi, closed_lo, closed_hi = _rho_interval(design, boundaries)
        rhos = tuple(
            r
            for r in spec.rho_grid
            if (lo < r or (closed_lo and r == lo))
            and (r < hi or (closed_hi and r == hi))
        )
        effs = tuple(efficiency(design, r * r) for r in rhos)
        bounds = alpha_bounds(design, spec.theta_sq)
        curves[design] = EfficiencyCurve(
            design=design,
            rho=rhos,
            efficiency=effs,
            carnot=carnot_efficiency(design, spec.theta_sq),
            carnot_limit_kind=bounds.carnot_limit_kind,
        )
    return curves


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _record_row(record: SweepRecord) -> list[str]:
    row = [
        _fmt(record.rho),
        _fmt(record.alpha_sq),
        _fmt(record.e_high),
        _fmt(record.e_low),
        _fmt(record.e_out),
        _fmt(record.e_high_norm),
        _fmt(record.e_low_norm),
        _fmt(record.e_out_norm),
        record.region.value,
    ]
    names = ["", ""]
    effs = ["", ""]
    carnots = ["", ""]
    for i, entry in enumerate(record.designs[:2]):
        names[i] = entry.design.value
        effs[i] = _fmt(entry.efficiency)
        carnots[i] = _fmt(entry.carnot)
    row += [names[0], effs[0], names[1], effs[1], carnots[0], carnots[1]]
    return row


def _record_obj(record: SweepRecord) -> dict:
    return {
        "rho": record.rho,
        "alpha_sq": record.alpha_sq,
        "e_high": record.e_high,
        "e_low": record.e_low,
        "e_out": record.e_out,
        "e_high_norm": record.e_high_norm,
        "e_low_norm": record.e_low_norm,
        "e_out_norm": record.e_out_norm,
        "region": record.region.value,
        "designs": [
            {
                "design": entry.design.value,
                "efficiency": entry.efficiency,
                "carnot": entry.carnot,
            }
            for entry in record.designs
        ],
    }


def _record_from_obj(obj: dict) -> SweepRecord:
    return SweepRecord(
        rho=obj["rho"],
        alpha_sq=obj["alpha_sq"],
        e_high=obj["e_high"],
        e_low=obj["e_low"],
        e_out=obj["e_out"],
        e_high_norm=obj["e_high_norm"],
        e_low_norm=obj["e_low_norm"],
        e_out_norm=obj["e_out_norm"],
        region=OperationalRegion(obj["region"]),
        designs=tuple(
            DesignEfficiency(
                design=QtmDesign(d["design"]),
                efficiency=d["efficiency"],
                carnot=d["carnot"],
            )
            for d in obj["designs"]
        ),
    )


def parse_records(text: str) -> list[SweepRecord]:
    """Inverse of JSON :func:`emit`: rebuild records from serialized output."""
    return [_record_from_obj(obj) for obj in json.loads(text)]


def _write(destination, text: str) -> None:
    if destination is None or destination == "-":
        sys.stdout.write(text)
        return
    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise EmitIOError(f"cannot write {destination}: {exc}") from exc


def emit(
    records: Sequence[SweepRecord],
    format: str = "csv",
    destination=None,
) -> None:
    """Serialize sweep records to CSV or JSON.

    CSV uses the fixed :data:`CSV_COLUMNS` order with a header row and 12
    significant digits; boundary records leave the design columns empty.
    JSON keeps exact float values so ``parse_records(emitted)`` returns the
    original records.  ``destination`` may be a path, an open text stream, or
    ``None``/``"-"`` for standard output.
    """
    if len(records) == 0:
        raise ValidationError("no records to emit")
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for record in records:
            writer.writerow(_record_row(record))
        _write(destination, buffer.getvalue())
    elif format == "json":
        text = json.dumps([_record_obj(r) for r in records], indent=2)
        _write(destination, text + "\n")
    else:
        raise ValidationError(f"unknown format {format!r} (expected csv or json)")


def emit_curves(
    curves: dict[QtmDesign, EfficiencyCurve],
    format: str = "csv",
    destination=None,
) -> None:
    """Serialize efficiency curves: long-format CSV or per-design JSON."""
    if len(curves) == 0:
        raise ValidationError("no curves to emit")
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(("design", "rho", "efficiency", "carnot", "carnot_limit"))
        for design in QtmDesign:
            if design not in curves:
                continue
            curve = curves[design]
            for rho, eff in zip(curve.rho, curve.efficiency):
                writer.writerow(
                    (
                        design.value,
                        _fmt(rho),
                        _fmt(eff),
                        _fmt(curve.carnot),
                        curve.carnot_limit_kind.value,
                    )
                )
        _write(destination, buffer.getvalue())
    elif format == "json":
        doc = {
            design.value: {
                "rho": list(curve.rho),
                "efficiency": list(curve.efficiency),
                "carnot": curve.carnot,
                "carnot_limit": curve.carnot_limit_kind.value,
            }
            for design, curve in curves.items()
        }
        _write(destination, json.dumps(doc, indent=2) + "\n")
    else:
        raise ValidationError(f"unknown format {format!r} (expected csv or json)")
