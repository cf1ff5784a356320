"""Command-line interface.

Subcommands: ``classify`` an exchange triple, evaluate a design
``efficiency``, print the design catalog ``bounds`` table, run a full
``sweep`` from a JSON config, and print the ``table2`` boundary summary.

Exit status: 0 on success, 1 on validation errors (bad arguments or
physically inadmissible inputs), 2 on I/O errors.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .designs import (
    QtmDesign,
    admissible_designs,
    alpha_bounds,
    carnot_efficiency,
    efficiency,
)
from .errors import EmitIOError, ValidationError
from .media import PhysicalConstants
from .regions import ExchangeTriple, alpha_squared, classify_region
from .sweep import (
    MediumKind,
    Normalization,
    SweepSpec,
    boundary_report,
    default_rho_grid,
    efficiency_curves,
    emit,
    emit_curves,
    run_sweep,
)

#: Environment variable naming a JSON file with constants overrides.
CONSTANTS_ENV_VAR = "QTM_CONSTANTS"

_CONSTANTS_KEYS = ("hbar", "boltzmann_k", "electron_mass")
_SPEC_KEYS = (
    "t_low",
    "theta_sq",
    "rho_grid",
    "medium_kind",
    "normalization",
    "r_low",
    "gap_low",
)

# Efficiency limit at the non-Carnot end of each design's interval: zero
# where the target exchange vanishes there, one where target and source
# become equal.
_FAR_LIMIT = {
    QtmDesign.QCO: 0.0,
    QtmDesign.QHT: 1.0,
    QtmDesign.QDP: 0.0,
    QtmDesign.QHO: 1.0,
    QtmDesign.QEN: 0.0,
    QtmDesign.QLL: 1.0,
    QtmDesign.QRE: 0.0,
    QtmDesign.QHP: 1.0,
}


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit status 1 and no flag
    abbreviation (subcommands inherit both via parser_class)."""

    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="qtmkit",
        description="Thermal-machine region classification, efficiency "
        "bounds, and Otto-cycle sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify an energy-exchange triple")
    p.add_argument("--e-high", type=float, required=True,
                   help="signed energy exchanged with the hot reservoir")
    p.add_argument("--e-low", type=float, required=True,
                   help="signed energy exchanged with the cold reservoir")
    p.add_argument("--theta-sq", type=float, required=True,
                   help="reservoir temperature ratio (> 1)")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="relative boundary band (default 1e-9)")

    p = sub.add_parser("efficiency", help="evaluate one design's efficiency")
    p.add_argument("--design", required=True,
                   choices=[d.value for d in QtmDesign])
    p.add_argument("--alpha-sq", type=float, required=True,
                   help="thermal high-low energy ratio")
    p.add_argument("--theta-sq", type=float, default=None,
                   help="also print the Carnot value at this ratio")

    p = sub.add_parser("bounds", help="print the full design catalog")
    p.add_argument("--theta-sq", type=float, required=True)

    p = sub.add_parser("sweep", help="run a compression-ratio sweep")
    p.add_argument("--config", required=True, help="JSON config file")
    p.add_argument("--out", default=None,
                   help="records output file (default: stdout)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--curves-out", default=None,
                   help="also write per-design efficiency curves here")

    p = sub.add_parser("table2", help="print the region-boundary summary")
    p.add_argument("--theta-sq", type=float, required=True)
    p.add_argument("--paper-style", action="store_true",
                   help="round to two decimals instead of six")

    return parser


def _cmd_classify(args: argparse.Namespace) -> int:
    triple = ExchangeTriple(args.e_high, args.e_low)
    region = classify_region(triple, args.theta_sq, args.tol)
    ratio = alpha_squared(triple)
    print(f"region: {region.value}")
    print(f"alpha_sq: {ratio.value:.12g}")
    print(f"e_out: {triple.e_out:.12g}")
    if region.is_boundary:
        print("designs: (boundary; none admissible)")
    else:
        designs = sorted(admissible_designs(region), key=tuple(QtmDesign).index)
        print("designs: " + ", ".join(d.value for d in designs))
    return 0


def _cmd_efficiency(args: argparse.Namespace) -> int:
    design = QtmDesign(args.design)
    print(f"efficiency: {efficiency(design, args.alpha_sq):.12g}")
    if args.theta_sq is not None:
        print(f"carnot: {carnot_efficiency(design, args.theta_sq):.12g}")
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    theta_sq = args.theta_sq
    header = (
        f"{'design':<7}{'region':<18}{'target':<18}{'source':<17}"
        f"{'alpha_sq_min':>13}{'alpha_sq_max':>13}{'eff_at_min':>12}"
        f"{'eff_at_max':>12}{'carnot':>10}  limit"
    )
    print(f"design catalog at theta_sq = {theta_sq:.12g}")
    print(header)
    print("-" * len(header))
    for design in QtmDesign:
        bounds = alpha_bounds(design, theta_sq)
        carnot = carnot_efficiency(design, theta_sq)
        far = _FAR_LIMIT[design]
        if bounds.carnot_alpha_sq == bounds.alpha_sq_min:
            eff_min, eff_max = carnot, far
        else:
            eff_min, eff_max = far, carnot
        print(
            f"{design.value:<7}{design.region.value:<18}"
            f"{design.target.value:<18}{design.source.value:<17}"
            f"{bounds.alpha_sq_min:>13.6g}{bounds.alpha_sq_max:>13.6g}"
            f"{eff_min:>12.6g}{eff_max:>12.6g}{carnot:>10.6g}  "
            f"{bounds.carnot_limit_kind.value}"
        )
    return 0


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise EmitIOError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValidationError(f"{path} must contain a JSON object")
    return doc


def _constants_from(doc: dict, base: PhysicalConstants) -> PhysicalConstants:
    values = {key: getattr(base, key) for key in _CONSTANTS_KEYS}
    for key in _CONSTANTS_KEYS:
        if key in doc:
            values[key] = float(doc[key])
    return PhysicalConstants(**values)


def _load_sweep_config(path: str) -> tuple[SweepSpec, PhysicalConstants]:
    doc = _load_json(path)
    unknown = set(doc) - set(_SPEC_KEYS) - set(_CONSTANTS_KEYS)
    if unknown:
        raise ValidationError(
            f"unknown config keys in {path}: {', '.join(sorted(unknown))}"
        )

    constants = PhysicalConstants()
    env_path = os.environ.get(CONSTANTS_ENV_VAR)
    if env_path:
        constants = _constants_from(_load_json(env_path), constants)
    constants = _constants_from(doc, constants)

    if "theta_sq" not in doc or "t_low" not in doc:
        raise ValidationError(f"{path} must define t_low and theta_sq")
    theta_sq = float(doc["theta_sq"])
    rho_grid = (
        tuple(float(r) for r in doc["rho_grid"])
        if "rho_grid" in doc
        else default_rho_grid(theta_sq)
    )
    spec = SweepSpec(
        t_low=float(doc["t_low"]),
        theta_sq=theta_sq,
        rho_grid=rho_grid,
        medium_kind=MediumKind(doc.get("medium_kind", "quantum_ring")),
        normalization=Normalization(doc.get("normalization", "max_abs_energy")),
        r_low=float(doc["r_low"]) if "r_low" in doc else None,
        gap_low=float(doc["gap_low"]) if "gap_low" in doc else None,
    )
    return spec, constants


def _cmd_sweep(args: argparse.Namespace) -> int:
    spec, constants = _load_sweep_config(args.config)
    records, boundaries = run_sweep(spec, constants)
    curves = efficiency_curves(spec)
    emit(records, format=args.format, destination=args.out)
    if args.curves_out is not None:
        emit_curves(curves, format=args.format, destination=args.curves_out)
    if args.out is not None:
        print(f"wrote {len(records)} records to {args.out}")
        print(
            "boundaries (rho): "
            f"{boundaries.rho_subregion:.6f}, "
            f"{boundaries.rho_2acq_outt:.6f}, "
            f"{boundaries.rho_outt_pump:.6f}"
        )
    return 0


def _cmd_table2(args: argparse.Namespace) -> int:
    report = boundary_report(args.theta_sq)
    digits = 2 if args.paper_style else 6
    print(
        "reconstructed region boundaries "
        f"(theta_sq = {args.theta_sq:.12g}, rho = sqrt(alpha_sq)):"
    )
    rows = (
        ("2Acq_out / 2Acq_high", report.rho_subregion, report.alpha_sq_subregion),
        ("2Acquirers / OutTransfers", report.rho_2acq_outt,
         report.alpha_sq_2acq_outt),
        ("OutTransfers / Pumpers", report.rho_outt_pump,
         report.alpha_sq_outt_pump),
    )
    for label, rho, alpha_sq in rows:
        print(f"  {label:<26} rho = {rho:.{digits}f}   alpha_sq = "
              f"{alpha_sq:.{digits}f}")
    return 0


_COMMANDS = {
    "classify": _cmd_classify,
    "efficiency": _cmd_efficiency,
    "bounds": _cmd_bounds,
    "sweep": _cmd_sweep,
    "table2": _cmd_table2,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except EmitIOError as exc:
        print(f"qtmkit: i/o error: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, ValueError) as exc:
        print(f"qtmkit: error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
