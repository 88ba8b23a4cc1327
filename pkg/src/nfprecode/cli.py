"""Command-line entry point.

Subcommands: region, sumrate, contour, gains, ffboundary.  File-emitting
runs write their artifacts plus a manifest.json (resolved config echo and
artifact list) under --out-dir.  Exit codes: 0 success, 1 validation or
usage error, 2 numerical error (e.g. rank deficiency outside a sweep).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import experiments
from .config import ConfigError, build_scenario, parse_config_file, parse_overrides, scenario_to_dict
from .dpc import CapExceededError
from .geometry import LayoutKind, far_field_boundary
from .zf import RankDeficientError

__all__ = ["main", "parse_range"]

WORKERS_ENV = "NFPRECODE_WORKERS"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; the CLI contract wants 1.
    def error(self, message):
        raise _UsageError(message)


def parse_range(text: str) -> list[float]:
    """Axis values from 'start:stop:count' (inclusive, linear), a
    'log:'-prefixed variant for log spacing, or a single number."""
    body = text
    log = body.startswith("log:")
    if log:
        body = body[len("log:"):]
    parts = body.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise ValueError(f"range {text!r} is not 'start:stop:count' or a single value")
    start, stop = float(parts[0]), float(parts[1])
    count = int(parts[2])
    if count < 1:
        raise ValueError(f"range {text!r}: count must be >= 1")
    if count == 1:
        return [start]
    if log:
        if start <= 0 or stop <= 0:
            raise ValueError(f"range {text!r}: log spacing needs positive endpoints")
        return list(np.geomspace(start, stop, count))
    return list(np.linspace(start, stop, count))


def _default_workers() -> int:
    env = os.environ.get(WORKERS_ENV, "")
    if env.strip():
        return max(1, int(env))
    return 1


def _build_parser() -> _Parser:
    parser = _Parser(prog="nfprecode", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def add_scenario_args(p):
        p.add_argument("--config", help="scenario config file (key = value lines)")
        p.add_argument("--set", dest="overrides", action="append", metavar="KEY=VALUE",
                       help="override a config key (repeatable)")
        p.add_argument("--out-dir", default="out", help="output directory (default: out)")

    region = sub.add_parser("region", help="two-user ZF/DPC rate regions")
    add_scenario_args(region)
    region.add_argument("--points", type=int, default=4001, help="boundary samples (default: 4001)")

    sumrate = sub.add_parser("sumrate", help="optimal ZF and DPC allocations for one scenario")
    add_scenario_args(sumrate)

    contour = sub.add_parser("contour", help="DPC-ZF sum-rate difference over a (D, s) grid")
    contour.add_argument("--nx", type=int, required=True, help="UPA side (N = nx*ny)")
    contour.add_argument("--ny", type=int, default=None, help="UPA second side (default: nx)")
    contour.add_argument("--layout", default="colinear", choices=["colinear", "coplanar"])
    contour.add_argument("--d", required=True, metavar="RANGE",
                         help="distance axis, start:stop:count (log: prefix for log spacing)")
    contour.add_argument("--s", required=True, metavar="RANGE", help="spacing axis, start:stop:count")
    contour.add_argument("--pt", type=float, required=True, help="transmit power budget")
    contour.add_argument("--spacing", type=float, default=0.5)
    contour.add_argument("--wavelength", type=float, default=1.0)
    contour.add_argument("--noise-power", type=float, default=1.0)
    contour.add_argument("--workers", type=int, default=None,
                         help=f"worker processes (default: ${WORKERS_ENV} or 1)")
    contour.add_argument("--out-dir", default="out")

    gains = sub.add_parser("gains", help="ZF alpha_k and DPC (r_kk)^2 versus spacing")
    gains.add_argument("--nx", type=int, required=True)
    gains.add_argument("--ny", type=int, default=None)
    gains.add_argument("--layout", default="colinear", choices=["colinear", "coplanar"])
    gains.add_argument("--d", type=float, required=True, help="range of the user pair")
    gains.add_argument("--s", required=True, metavar="RANGE", help="spacing axis, start:stop:count")
    gains.add_argument("--pt", type=float, required=True)
    gains.add_argument("--spacing", type=float, default=0.5)
    gains.add_argument("--wavelength", type=float, default=1.0)
    gains.add_argument("--noise-power", type=float, default=1.0)
    gains.add_argument("--out-dir", default="out")

    ff = sub.add_parser("ffboundary", help="far-field range threshold 2*aperture^2/wavelength")
    ff.add_argument("--aperture", type=float, required=True, help="maximum array dimension")
    ff.add_argument("--wavelength", type=float, required=True, help="same length unit as --aperture")

    return parser


def _write_manifest(out_dir: Path, subcommand: str, config: dict, artifacts: list[str]) -> str:
    manifest = {"subcommand": subcommand, "config": config, "artifacts": sorted(artifacts)}
    path = out_dir / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return str(path)


def _run_scenario_command(args, mode: str) -> int:
    raw = parse_config_file(args.config) if args.config else {}
    raw.update(parse_overrides(args.overrides))
    cfg = build_scenario(raw)
    out_dir = Path(args.out_dir)
    m_points = getattr(args, "points", 4001)
    result = experiments.run_scenario(cfg, mode, out_dir, m_points=m_points)
    echo = scenario_to_dict(cfg)
    if mode == "region":
        echo["points"] = m_points
    _write_manifest(out_dir, mode, echo, result["artifacts"])
    if mode == "region":
        print(f"ZF area {result['zf_area']:.4f}; DPC areas " +
              ", ".join(f"{k}: {v:.4f}" for k, v in result["dpc_areas"].items()) +
              f"; union {result['union_area']:.4f}")
    else:
        print(f"ZF sum rate {result['zf_sum_rate']:.4f}; "
              f"DPC sum rate {result['dpc_sum_rate']:.4f} (order {result['dpc_order']})")
    print(f"artifacts written to {out_dir}")
    return 0


def _run_contour_command(args) -> int:
    workers = args.workers if args.workers is not None else _default_workers()
    grid = experiments.SweepGrid(
        d_values=parse_range(args.d),
        s_values=parse_range(args.s),
        nx=args.nx,
        ny=args.ny,
        layout_kind=LayoutKind(args.layout),
        pt=args.pt,
        spacing=args.spacing,
        wavelength=args.wavelength,
        noise_power=args.noise_power,
    )
    cells = experiments.run_contour(grid, workers=workers)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    experiments.write_contour_csv(out_dir / "contour.csv", cells)
    echo = {
        "nx": grid.nx,
        "ny": grid.nx if grid.ny is None else grid.ny,
        "layout": grid.layout_kind.value,
        "d": args.d,
        "s": args.s,
        "d_values": list(grid.d_values),
        "s_values": list(grid.s_values),
        "pt": grid.pt,
        "spacing": grid.spacing,
        "wavelength": grid.wavelength,
        "noise_power": grid.noise_power,
    }
    _write_manifest(out_dir, "contour", echo, ["contour.csv"])
    n_ok = sum(1 for c in cells if c.status == experiments.STATUS_OK)
    print(f"{len(cells)} cells ({n_ok} Ok) -> {out_dir / 'contour.csv'}")
    return 0


def _run_gains_command(args) -> int:
    rows = experiments.run_gain_profile(
        d=args.d,
        s_values=parse_range(args.s),
        nx=args.nx,
        ny=args.ny,
        pt=args.pt,
        layout_kind=LayoutKind(args.layout),
        spacing=args.spacing,
        wavelength=args.wavelength,
        noise_power=args.noise_power,
    )
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    experiments.write_gain_csv(out_dir / "gains.csv", rows)
    echo = {
        "nx": args.nx,
        "ny": args.nx if args.ny is None else args.ny,
        "layout": args.layout,
        "d": args.d,
        "s": args.s,
        "s_values": [r.s for r in rows],
        "pt": args.pt,
        "spacing": args.spacing,
        "wavelength": args.wavelength,
        "noise_power": args.noise_power,
    }
    _write_manifest(out_dir, "gains", echo, ["gains.csv"])
    print(f"{len(rows)} rows -> {out_dir / 'gains.csv'}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"nfprecode: error: {exc}", file=sys.stderr)
        return 1

    try:
        if args.subcommand == "region":
            return _run_scenario_command(args, "region")
        if args.subcommand == "sumrate":
            return _run_scenario_command(args, "sumrate")
        if args.subcommand == "contour":
            return _run_contour_command(args)
        if args.subcommand == "gains":
            return _run_gains_command(args)
        if args.subcommand == "ffboundary":
            print(f"{far_field_boundary(args.aperture, args.wavelength):g}")
            return 0
        raise AssertionError(f"unhandled subcommand {args.subcommand}")
    except (ConfigError, ValueError) as exc:
        print(f"nfprecode: error: {exc}", file=sys.stderr)
        return 1
    except (RankDeficientError, CapExceededError, np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"nfprecode: numerical error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
