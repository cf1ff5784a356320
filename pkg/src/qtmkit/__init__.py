"""qtmkit: quantum thermal machine analysis toolkit.

Classifies per-cycle energy exchanges of a two-reservoir thermal machine
into operational regions, evaluates the efficiencies and Carnot limits of
the eight machine designs, simulates two-level working media (including a
spinless electron on a one-dimensional quantum ring) in the Otto cycle, and
sweeps compression ratios to produce plot-ready tables.
"""

from .designs import (
    AlphaBounds,
    CarnotLimitKind,
    EnergyRole,
    IntersectionSet,
    QtmDesign,
    RelationResiduals,
    admissible_designs,
    alpha_bounds,
    carnot_efficiency,
    classical_otto_efficiency,
    efficiency,
    intersections,
    relation_residuals,
)
from .errors import (
    BoundaryRegionError,
    DegenerateExchangeError,
    DegenerateMediumError,
    EmitIOError,
    EmptyGridError,
    InvalidGapError,
    InvalidReservoirError,
    InvalidRhoError,
    InvalidRingError,
    InvalidSignsError,
    InvalidTemperatureError,
    InvalidThetaError,
    OccupationMismatchError,
    OutOfRegionError,
    QtmError,
    SingularEfficiencyError,
    SpectrumMismatchError,
    UnclassifiableExchangeError,
    ValidationError,
)
from .media import (
    CODATA,
    PhysicalConstants,
    QuantumRing,
    RingOttoSetup,
    gap_medium,
    ring_levels,
    ring_medium,
)
from .otto import (
    CycleEnergies,
    LevelSpectrum,
    OccupationPair,
    TwoLevelMedium,
    multilevel_exchange,
    occupation,
    otto_cycle_energies,
    work_exchange,
)
from .regions import (
    DEFAULT_CLASSIFY_TOL,
    AlphaSquared,
    ExchangeTriple,
    OperationalRegion,
    ReservoirPair,
    alpha_squared,
    classify_region,
    theta_squared,
)
from .sweep import (
    CSV_COLUMNS,
    BoundaryReport,
    DesignEfficiency,
    EfficiencyCurve,
    MediumKind,
    Normalization,
    SweepRecord,
    SweepSpec,
    boundary_report,
    default_rho_grid,
    efficiency_curves,
    emit,
    emit_curves,
    parse_records,
    region_boundaries_rho,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # regions
    "ReservoirPair",
    "ExchangeTriple",
    "OperationalRegion",
    "AlphaSquared",
    "theta_squared",
    "alpha_squared",
    "classify_region",
    "DEFAULT_CLASSIFY_TOL",
    # designs
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
    # otto
    "LevelSpectrum",
    "TwoLevelMedium",
    "OccupationPair",
    "CycleEnergies",
    "occupation",
    "otto_cycle_energies",
    "multilevel_exchange",
    "work_exchange",
    # media
    "PhysicalConstants",
    "CODATA",
    "QuantumRing",
    "RingOttoSetup",
    "ring_levels",
    "ring_medium",
    "gap_medium",
    # sweep
    "MediumKind",
    "Normalization",
    "SweepSpec",
    "SweepRecord",
    "DesignEfficiency",
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
    # errors
    "QtmError",
    "ValidationError",
    "InvalidReservoirError",
    "InvalidThetaError",
    "InvalidTemperatureError",
    "InvalidRhoError",
    "DegenerateExchangeError",
    "InvalidSignsError",
    "UnclassifiableExchangeError",
    "BoundaryRegionError",
    "OutOfRegionError",
    "SingularEfficiencyError",
    "DegenerateMediumError",
    "SpectrumMismatchError",
    "OccupationMismatchError",
    "InvalidRingError",
    "InvalidGapError",
    "EmptyGridError",
    "EmitIOError",
]
