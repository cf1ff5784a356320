"""Canonical-ensemble statistics and quasi-static Otto-cycle energetics.

The cycle alternates two reservoir-contact strokes (levels fixed, occupations
rethermalize) with two isolation strokes (occupations frozen, levels move).
All strokes are treated quasi-statically, so every exchanged energy reduces
to an endpoint difference:

* reservoir stroke:  sum_n E_n * (P_n(end) - P_n(start))
* isolation stroke:  sum_n P_n * (E_n(end) - E_n(start))

Both are the working medium's internal-energy change over the stroke; for a
reservoir stroke that is also the signed reservoir exchange (absorbed
positive), while the outside exchange of an isolation stroke is its negative.

For a two-level medium the full cycle collapses to closed form: with
``x = P_excited(high gap, t_high) - P_excited(low gap, t_low)``,

    e_high_gamma = +gap_high * x
    e_low_gamma  = -gap_low  * x
    e_out        = e_high_gamma + e_low_gamma

so the reservoir exchanges always satisfy
``e_high_gamma / e_low_gamma = -gap_high / gap_low``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DegenerateMediumError,
    InvalidTemperatureError,
    InvalidThetaError,
    OccupationMismatchError,
    SpectrumMismatchError,
    ValidationError,
)
from .regions import ExchangeTriple

__all__ = [
    "LevelSpectrum",
    "TwoLevelMedium",
    "OccupationPair",
    "CycleEnergies",
    "occupation",
    "otto_cycle_energies",
    "multilevel_exchange",
    "work_exchange",
]


def _require_temperature(temperature: float) -> None:
    if not (math.isfinite(temperature) and temperature > 0.0):
        raise InvalidTemperatureError(
            f"temperature must be positive, got {temperature!r}"
        )


def _require_boltzmann(boltzmann_k: float) -> None:
    if not (math.isfinite(boltzmann_k) and boltzmann_k > 0.0):
        raise ValidationError(
            f"boltzmann_k must be positive, got {boltzmann_k!r}"
        )


@dataclass(frozen=True)
class LevelSpectrum:
    """Strictly increasing energy eigenvalues of a working medium (>= 2)."""

    levels: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.levels) < 2:
            raise DegenerateMediumError(
                f"a spectrum needs at least two levels, got {len(self.levels)}"
            )
        if any(not math.isfinite(e) for e in self.levels):
            raise ValidationError(f"levels must be finite, got {self.levels!r}")
        if any(b <= a for a, b in zip(self.levels, self.levels[1:])):
            raise DegenerateMediumError(
                f"levels must be strictly increasing, got {self.levels!r}"
            )

    def __len__(self) -> int:
        return len(self.levels)

    def __iter__(self) -> Iterator[float]:
        return iter(self.levels)

    def __getitem__(self, index: int) -> float:
        return self.levels[index]


@dataclass(frozen=True)
class TwoLevelMedium:
    """Two-level medium in its two dimensional configurations.

    ``low_config`` and ``high_config`` are (ground, excited) eigenvalue pairs
    whose gaps are the small and large level separations of the cycle.  Their
    ratio is the energy ratio ``alpha_sq`` the whole framework runs on.
    """

    low_config: tuple[float, float]
    high_config: tuple[float, float]

    def __post_init__(self) -> None:
        for name, (e_g, e_e) in (
            ("low_config", self.low_config),
            ("high_config", self.high_config),
        ):
            if not (math.isfinite(e_g) and math.isfinite(e_e)):
                raise ValidationError(f"{name} must be finite, got {(e_g, e_e)!r}")
            if e_e - e_g <= 0.0:
                raise DegenerateMediumError(
                    f"{name} gap must be positive, got {(e_g, e_e)!r}"
                )

    @property
    def gap_low(self) -> float:
        return self.low_config[1] - self.low_config[0]

    @property
    def gap_high(self) -> float:
        return self.high_config[1] - self.high_config[0]

    @property
    def alpha_sq(self) -> float:
        """Gap ratio ``gap_high / gap_low``."""
        return self.gap_high / self.gap_low


@dataclass(frozen=True)
class OccupationPair:
    """Thermal two-level occupations: normalized, Boltzmann-ordered."""

    p_ground: float
    p_excited: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.p_ground <= 1.0 and 0.0 <= self.p_excited <= 1.0):
            raise ValidationError(
                f"occupations must lie in [0, 1], got "
                f"({self.p_ground!r}, {self.p_excited!r})"
            )
        if abs(self.p_ground + self.p_excited - 1.0) > 1e-14:
            raise ValidationError(
                f"occupations must sum to 1, got "
                f"{self.p_ground!r} + {self.p_excited!r}"
            )
        if self.p_ground < self.p_excited:
            raise ValidationError(
                "inverted populations are outside the thermal-cycle framework"
            )


def occupation(
    spectrum: LevelSpectrum, temperature: float, boltzmann_k: float
) -> np.ndarray:
    """Canonical occupation probabilities of every level.

    Boltzmann weights are formed after shifting all eigenvalues by the ground
    energy, so the largest weight is exactly one and deep-gap/low-temperature
    inputs underflow gracefully instead of overflowing.

    Parameters
    ----------
    spectrum : LevelSpectrum
        Energy eigenvalues, ascending.
    temperature : float
        Absolute temperature, > 0.
    boltzmann_k : float
        Boltzmann constant in units matching the eigenvalues (1 in reduced
        units).

    Returns
    -------
    numpy.ndarray
        Probabilities summing to one, non-increasing with level energy.
    """
    _require_temperature(temperature)
    _require_boltzmann(boltzmann_k)
    levels = np.asarray(spectrum.levels, dtype=float)
    weights = np.exp(-(levels - levels[0]) / (boltzmann_k * temperature))
    return weights / weights.sum()


@dataclass(frozen=True)
class CycleEnergies:
    """Signed per-cycle energy exchanges of a two-level Otto cycle.

    Only the two reservoir exchanges are stored; the outside exchange is
    their sum by construction.
    """

    e_high_gamma: float
    e_low_gamma: float

    @property
    def e_out(self) -> float:
        return self.e_high_gamma + self.e_low_gamma

    def as_exchange_triple(self) -> ExchangeTriple:
        """View the cycle energies as a classifiable exchange triple."""
        return ExchangeTriple(self.e_high_gamma, self.e_low_gamma)


def otto_cycle_energies(
    medium: TwoLevelMedium,
    t_low: float,
    theta_sq: float,
    boltzmann_k: float,
) -> CycleEnergies:
    """Per-cycle reservoir exchanges of a two-level Otto cycle.

    Hot-stroke occupations are evaluated at ``t_high = theta_sq * t_low`` on
    the high-gap configuration, cold-stroke occupations at ``t_low`` on the
    low-gap configuration; the exchanges are gap times the excited-occupation
    difference.  This occupation-difference form is algebraically identical
    to the ratio-of-exponentials closed form but numerically stabler.
    """
    _require_temperature(t_low)
    if not (math.isfinite(theta_sq) and theta_sq > 1.0):
        raise InvalidThetaError(
            f"temperature ratio theta_sq must exceed 1, got {theta_sq!r}"
        )
    p_low = occupation(LevelSpectrum(medium.low_config), t_low, boltzmann_k)
    p_high = occupation(
        LevelSpectrum(medium.high_config), theta_sq * t_low, boltzmann_k
    )
    cold = OccupationPair(float(p_low[0]), float(p_low[1]))
    hot = OccupationPair(float(p_high[0]), float(p_high[1]))
    x = hot.p_excited - cold.p_excited
    return CycleEnergies(medium.gap_high * x, -medium.gap_low * x)


def multilevel_exchange(
    start: tuple[LevelSpectrum, float],
    end: tuple[LevelSpectrum, float],
    boltzmann_k: float,
) -> float:
    """Energy absorbed during a reservoir-contact stroke (released if < 0).

    The stroke keeps the spectrum fixed while the occupations rethermalize
    between the endpoint temperatures, so the exchange is the occupation-
    weighted eigenvalue difference between the endpoints.
    """
    spec_start, t_start = start
    spec_end, t_end = end
    if spec_start.levels != spec_end.levels:
        raise SpectrumMismatchError(
            "reservoir strokes cannot change the spectrum: "
            f"{spec_start.levels!r} != {spec_end.levels!r}"
        )
    p_start = occupation(spec_start, t_start, boltzmann_k)
    p_end = occupation(spec_end, t_end, boltzmann_k)
    levels = np.asarray(spec_start.levels, dtype=float)
    return float(np.dot(levels, p_end - p_start))


def work_exchange(
    start: tuple[LevelSpectrum, Sequence[float]],
    end: tuple[LevelSpectrum, Sequence[float]],
) -> float:
    """Medium-side energy change of an isolation stroke.

    Occupations stay frozen while the levels move, so the change is the
    occupation-weighted shift of each eigenvalue.  A positive value means the
    medium gained energy from the outside; the outside-exchange contribution
    of the stroke is the negative of this value.
    """
    spec_start, occ_start = start
    spec_end, occ_end = end
    if len(spec_start) != len(spec_end):
        raise SpectrumMismatchError(
            f"spectra must have equal length, got {len(spec_start)} and "
            f"{len(spec_end)}"
        )
    p_start = np.asarray(occ_start, dtype=float)
    p_end = np.asarray(occ_end, dtype=float)
    if p_start.shape != (len(spec_start),) or p_end.shape != (len(spec_end),):
        raise OccupationMismatchError(
            "each occupation list must match its spectrum length"
        )
    if np.max(np.abs(p_end - p_start)) > 1e-12:
        raise OccupationMismatchError(
            "isolation strokes cannot change the occupations"
        )
    start_levels = np.asarray(spec_start.levels, dtype=float)
    end_levels = np.asarray(spec_end.levels, dtype=float)
    return float(np.dot(p_start, end_levels - start_levels))
