"""Batch experiment drivers: contour sweeps, gain profiles, scenario runs.

Every driver is deterministic: cells of a sweep are independent pure
computations, results are ordered row-major regardless of worker count,
and CSV floats use the shortest round-trip representation, so identical
configurations produce byte-identical artifacts.
"""

from __future__ import annotations

import concurrent.futures
import math
from dataclasses import dataclass
from pathlib import Path

from .channel import ScenarioConfig, build_channel
from .dpc import best_order_exhaustive
from .geometry import ArrayConfig, LayoutKind, UserLayout
from .rateregion import RateRegion, area_improvement, dpc_region, region_union, zf_region
from .zf import RankDeficientError, build_zf, zf_sum_rate

__all__ = [
    "SweepGrid",
    "SweepCell",
    "GainProfileRow",
    "run_contour",
    "run_gain_profile",
    "run_scenario",
    "order_label",
    "write_contour_csv",
    "write_gain_csv",
    "write_region_csv",
    "write_summary_csv",
    "CONTOUR_HEADER",
    "GAIN_HEADER",
    "REGION_HEADER",
    "SUMMARY_HEADER",
    "ALLOC_HEADER",
]

STATUS_OK = "Ok"
STATUS_ZF_RANK_DEFICIENT = "ZfRankDeficient"

CONTOUR_HEADER = "d,s,zf_sum_rate,dpc_sum_rate,diff,status"
GAIN_HEADER = "s,alpha_1,alpha_2,r11_sq,r22_sq,order"
REGION_HEADER = "scheme,order,t,q1,q2,r1,r2"
SUMMARY_HEADER = "scheme,order,r1_max,r2_max,area,improvement_vs_zf_pct"
ALLOC_HEADER = "scheme,order,user,q,rate,sum_rate"


@dataclass(frozen=True)
class SweepGrid:
    """Cartesian (D, s) grid for one UPA size and layout kind."""

    d_values: tuple[float, ...]
    s_values: tuple[float, ...]
    nx: int
    layout_kind: LayoutKind
    pt: float
    ny: int | None = None
    spacing: float = 0.5
    wavelength: float = 1.0
    noise_power: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "d_values", tuple(float(v) for v in self.d_values))
        object.__setattr__(self, "s_values", tuple(float(v) for v in self.s_values))
        object.__setattr__(self, "layout_kind", LayoutKind(self.layout_kind))
        if not self.d_values or not self.s_values:
            raise ValueError("sweep grid axes must be non-empty")
        if any(d <= 0 for d in self.d_values):
            raise ValueError("all d values must be positive")
        if any(s < 0 for s in self.s_values):
            raise ValueError("all s values must be non-negative")
        if list(self.d_values) != sorted(self.d_values) or list(self.s_values) != sorted(self.s_values):
            raise ValueError("sweep axes must be ascending")

    def array_config(self) -> ArrayConfig:
        ny = self.nx if self.ny is None else self.ny
        return ArrayConfig(nx=self.nx, ny=ny, spacing=self.spacing, wavelength=self.wavelength)


@dataclass(frozen=True)
class SweepCell:
    """One (d, s) evaluation: ZF and best-order DPC sum rates."""

    d: float
    s: float
    zf_sum_rate: float | None
    dpc_sum_rate: float
    diff: float | None
    status: str


@dataclass(frozen=True)
class GainProfileRow:
    """ZF power costs and DPC squared diagonal gains at one spacing."""

    s: float
    alpha_1: float | None
    alpha_2: float | None
    r11_sq: float
    r22_sq: float
    order: tuple[int, ...]


def order_label(order) -> str:
    """Human-readable encoding order, 1-based: (1, 0) -> '2>1'."""
    if isinstance(order, str):
        return order
    if order is None:
        return ""
    return ">".join(str(u + 1) for u in order)


def _evaluate_cell(args) -> SweepCell:
    d, s, nx, ny, layout_kind, pt, spacing, wavelength, noise_power = args
    cfg = ScenarioConfig(
        array=ArrayConfig(nx=nx, ny=ny, spacing=spacing, wavelength=wavelength),
        layout=UserLayout(kind=layout_kind, d=d, s=s),
        pt=pt,
        noise_power=noise_power,
    )
    h = build_channel(cfg)
    dpc = best_order_exhaustive(h, pt, noise_power=noise_power)
    try:
        zf = zf_sum_rate(h, pt, noise_power=noise_power)
    except RankDeficientError:
        return SweepCell(d, s, None, dpc.sum_rate, None, STATUS_ZF_RANK_DEFICIENT)
    return SweepCell(d, s, zf.sum_rate, dpc.sum_rate, dpc.sum_rate - zf.sum_rate, STATUS_OK)


def run_contour(grid: SweepGrid, workers: int = 1) -> list[SweepCell]:
    """Evaluate every (d, s) cell; rows come back row-major (d outer, s
    inner) for any worker count.  Rank-deficient ZF cells are flagged,
    not fatal."""
    ny = grid.nx if grid.ny is None else grid.ny
    specs = [
        (d, s, grid.nx, ny, grid.layout_kind, grid.pt, grid.spacing, grid.wavelength, grid.noise_power)
        for d in grid.d_values
        for s in grid.s_values
    ]
    if workers <= 1:
        return [_evaluate_cell(spec) for spec in specs]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(specs) // (4 * workers))
        return list(pool.map(_evaluate_cell, specs, chunksize=chunk))


def run_gain_profile(
    d: float,
    s_values,
    nx: int,
    pt: float,
    layout_kind: LayoutKind = LayoutKind.CO_LINEAR,
    ny: int | None = None,
    spacing: float = 0.5,
    wavelength: float = 1.0,
    noise_power: float = 1.0,
) -> list[GainProfileRow]:
    """ZF alpha_k and DPC (r_kk)^2 under the optimal ordering, per spacing.

    Rows are emitted in ascending s; spacings where ZF is rank-deficient
    keep the DPC gains and leave alpha empty.
    """
    rows = []
    for s in sorted(float(v) for v in s_values):
        cfg = ScenarioConfig(
            array=ArrayConfig(nx=nx, ny=nx if ny is None else ny, spacing=spacing, wavelength=wavelength),
            layout=UserLayout(kind=layout_kind, d=d, s=s),
            pt=pt,
            noise_power=noise_power,
        )
        h = build_channel(cfg)
        best = best_order_exhaustive(h, pt, noise_power=noise_power)
        gains = best.decomposition.diag_gains
        try:
            alpha = build_zf(h).alpha
            a1, a2 = float(alpha[0]), float(alpha[1])
        except RankDeficientError:
            a1 = a2 = None
        rows.append(
            GainProfileRow(
                s=s,
                alpha_1=a1,
                alpha_2=a2,
                r11_sq=float(gains[0]),
                r22_sq=float(gains[1]),
                order=best.decomposition.order,
            )
        )
    return rows


def run_scenario(cfg: ScenarioConfig, mode: str, out_dir, m_points: int = 4001) -> dict:
    """Run one scenario and emit its CSV artifacts under out_dir.

    region mode (K = 2): ZF region, per-ordering DPC regions, their
    union, and a summary with areas and improvements over ZF.
    sumrate mode (K <= 8): optimal ZF and best-order DPC allocations.
    Returns a dict with the artifact filenames and headline numbers.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    h = build_channel(cfg)

    if mode == "region":
        if h.k_users != 2:
            raise ValueError(f"region mode requires K = 2, got K = {h.k_users}")
        zf_reg = zf_region(h, cfg.pt, m_points=m_points, noise_power=cfg.noise_power)
        dpc_regs = [
            dpc_region(h, cfg.pt, order=pi, m_points=m_points, noise_power=cfg.noise_power)
            for pi in ((0, 1), (1, 0))
        ]
        union = region_union(dpc_regs)
        artifacts = {}
        artifacts["zf_region.csv"] = write_region_csv(out / "zf_region.csv", zf_reg)
        for reg in dpc_regs:
            name = f"dpc_region_{'_'.join(str(u + 1) for u in reg.order)}.csv"
            artifacts[name] = write_region_csv(out / name, reg)
        artifacts["dpc_region_union.csv"] = write_region_csv(out / "dpc_region_union.csv", union)
        summary_rows = [(zf_reg, None)] + [(reg, area_improvement(reg, zf_reg)) for reg in dpc_regs]
        summary_rows.append((union, area_improvement(union, zf_reg)))
        artifacts["summary.csv"] = write_summary_csv(out / "summary.csv", summary_rows)
        return {
            "artifacts": sorted(artifacts),
            "zf_area": zf_reg.area,
            "dpc_areas": {order_label(r.order): r.area for r in dpc_regs},
            "union_area": union.area,
        }

    if mode == "sumrate":
        if h.k_users > 8:
            raise ValueError(f"sumrate mode supports K <= 8, got K = {h.k_users}")
        zf_alloc = zf_sum_rate(h, cfg.pt, noise_power=cfg.noise_power)
        dpc_best = best_order_exhaustive(h, cfg.pt, noise_power=cfg.noise_power)
        path = out / "allocations.csv"
        lines = [ALLOC_HEADER]
        for k in range(h.k_users):
            lines.append(
                ",".join(
                    ["ZF", "", str(k + 1), _fmt(zf_alloc.q[k]), _fmt(zf_alloc.rates[k]), _fmt(zf_alloc.sum_rate)]
                )
            )
        label = order_label(dpc_best.decomposition.order)
        powers, rates = dpc_best.user_powers, dpc_best.user_rates
        for k in range(h.k_users):
            lines.append(
                ",".join(
                    ["DPC", label, str(k + 1), _fmt(powers[k]), _fmt(rates[k]), _fmt(dpc_best.sum_rate)]
                )
            )
        path.write_text("\n".join(lines) + "\n")
        return {
            "artifacts": ["allocations.csv"],
            "zf_sum_rate": zf_alloc.sum_rate,
            "dpc_sum_rate": dpc_best.sum_rate,
            "dpc_order": label,
        }

    raise ValueError(f"unknown scenario mode {mode!r} (expected 'region' or 'sumrate')")


def _fmt(value) -> str:
    """Shortest round-trip float formatting; empty for missing values."""
    if value is None:
        return ""
    value = float(value)
    if math.isnan(value):
        return ""
    return repr(value)


def write_contour_csv(path, cells: list[SweepCell]) -> str:
    lines = [CONTOUR_HEADER]
    for c in cells:
        lines.append(
            ",".join([_fmt(c.d), _fmt(c.s), _fmt(c.zf_sum_rate), _fmt(c.dpc_sum_rate), _fmt(c.diff), c.status])
        )
    text = "\n".join(lines) + "\n"
    with open(path, "w") as fh:
        fh.write(text)
    return str(path)


def write_gain_csv(path, rows: list[GainProfileRow]) -> str:
    lines = [GAIN_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [_fmt(r.s), _fmt(r.alpha_1), _fmt(r.alpha_2), _fmt(r.r11_sq), _fmt(r.r22_sq), order_label(r.order)]
            )
        )
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    return str(path)


def write_region_csv(path, region: RateRegion) -> str:
    lines = [REGION_HEADER]
    label = order_label(region.order)
    for i in range(region.r1.size):
        lines.append(
            ",".join(
                [
                    region.scheme,
                    label,
                    _fmt(region.t[i]),
                    _fmt(region.q1[i]),
                    _fmt(region.q2[i]),
                    _fmt(region.r1[i]),
                    _fmt(region.r2[i]),
                ]
            )
        )
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    return str(path)


def write_summary_csv(path, rows) -> str:
    lines = [SUMMARY_HEADER]
    for region, improvement in rows:
        lines.append(
            ",".join(
                [
                    region.scheme,
                    order_label(region.order),
                    _fmt(region.r1_max),
                    _fmt(region.r2_max),
                    _fmt(region.area),
                    _fmt(improvement),
                ]
            )
        )
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    return str(path)
