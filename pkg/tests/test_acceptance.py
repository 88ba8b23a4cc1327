"""Acceptance suite.

One test per criterion; each emits a single PASS/FAIL line (written to
the real stdout so it survives pytest's capture) with the measured
numbers next to their targets.
"""

import json
import math
import os
import time

import numpy as np
import pytest

from conftest import REFERENCE_PT, random_channel
from nfprecode import (
    ArrayConfig,
    RankDeficientError,
    ScenarioConfig,
    UserLayout,
    best_order_exhaustive,
    best_order_greedy,
    build_channel,
    build_zf,
    decompose,
    dpc_region,
    solve_waterfill,
    zf_region,
    zf_sum_rate,
)
from nfprecode.cli import main as cli_main
from nfprecode.experiments import STATUS_OK, SweepGrid, run_contour, run_gain_profile
from oracles import grid_search_sum_rate, kkt_residual, random_waterfill_problem


# Collected PASS/FAIL lines; conftest's pytest_terminal_summary hook prints
# them after capture ends so they show up in a plain `pytest -v` run.
_LINES = []


def _report(tag: str, ok: bool, detail: str):
    line = f"{tag} {'PASS' if ok else 'FAIL'} - {detail}"
    _LINES.append(line)
    assert ok, line


def _within(value, target, rel):
    return abs(value - target) <= rel * abs(target)


def test_A1_colinear_rate_region():
    start = time.time()
    cfg = ScenarioConfig(
        array=ArrayConfig(nx=500, ny=500, spacing=0.5, wavelength=1.0),
        layout=UserLayout(kind="colinear", d=10.0, s=0.2),
        pt=REFERENCE_PT,
    )
    h = build_channel(cfg)
    zf = zf_region(h, REFERENCE_PT, m_points=4001)
    dpc = dpc_region(h, REFERENCE_PT, order=(0, 1), m_points=4001)  # nearer user first
    improvement = 100.0 * (dpc.area - zf.area) / zf.area
    elapsed = time.time() - start

    # hard internal identities
    norm_sq = float(np.linalg.norm(h.entries[0]) ** 2)
    id_r1 = _within(dpc.r1_max, math.log2(1.0 + REFERENCE_PT * norm_sq), 1e-9)
    id_r2 = _within(dpc.r2_max, zf.r2_max, 1e-6)

    checks = [
        id_r1,
        id_r2,
        _within(dpc.r1_max, 5.717, 0.05),
        _within(dpc.r2_max, 2.578, 0.05),
        _within(zf.r1_max, 2.586, 0.05),
        _within(zf.r2_max, 2.578, 0.05),
        _within(dpc.area, 12.5125, 0.10),
        _within(zf.area, 5.0617, 0.10),
        abs(improvement - 147.2) <= 15.0,
        elapsed < 30.0,
    ]
    _report(
        "A1",
        all(checks),
        "co-linear region: "
        f"dpc r1max={dpc.r1_max:.4f}/r2max={dpc.r2_max:.4f} (5.717/2.578 +-5%), "
        f"zf r1max={zf.r1_max:.4f}/r2max={zf.r2_max:.4f} (2.586/2.578 +-5%), "
        f"areas dpc={dpc.area:.4f} (12.5125 +-10%) zf={zf.area:.4f} (5.0617 +-10%), "
        f"improvement={improvement:.1f}% (147.2 +-15pp), "
        f"identities r1max/r2max={'ok' if id_r1 and id_r2 else 'VIOLATED'}, "
        f"runtime={elapsed:.1f}s (<30s)",
    )


def test_A2_coplanar_rate_region(coplanar_channel):
    h = coplanar_channel
    zf = zf_region(h, REFERENCE_PT, m_points=4001)
    dpc = dpc_region(h, REFERENCE_PT, order=(0, 1), m_points=4001)
    improvement = 100.0 * (dpc.area - zf.area) / zf.area
    checks = [
        _within(zf.r1_max, 4.742, 0.05),
        _within(zf.r2_max, 4.742, 0.05),
        _within(dpc.r1_max, 5.717, 0.05),
        _within(dpc.r2_max, 4.742, 0.05),
        _within(dpc.area, 24.2146, 0.10),
        _within(zf.area, 19.7232, 0.10),
        abs(improvement - 22.77) <= 5.0,
    ]
    _report(
        "A2",
        all(checks),
        "coplanar region: "
        f"zf r1max={zf.r1_max:.4f}/r2max={zf.r2_max:.4f} (4.742 both +-5%), "
        f"dpc r1max={dpc.r1_max:.4f}/r2max={dpc.r2_max:.4f} (5.717/4.742 +-5%), "
        f"areas dpc={dpc.area:.4f} (24.2146 +-10%) zf={zf.area:.4f} (19.7232 +-10%), "
        f"improvement={improvement:.2f}% (22.77 +-5pp)",
    )


def test_A3_contour_positivity():
    start = time.time()
    worst = math.inf
    n_ok = n_total = 0
    for kind in ("colinear", "coplanar"):
        grid = SweepGrid(
            d_values=tuple(np.geomspace(5.0, 100.0, 20)),
            s_values=tuple(np.linspace(0.05, 2.0, 20)),
            nx=10,
            layout_kind=kind,
            pt=REFERENCE_PT,
        )
        cells = run_contour(grid)
        n_total += len(cells)
        for c in cells:
            if c.status == STATUS_OK:
                n_ok += 1
                worst = min(worst, c.diff)
    elapsed = time.time() - start
    ok = worst >= -1e-9 and n_ok > 0 and elapsed < 10.0
    _report(
        "A3",
        ok,
        f"contour positivity: {n_ok}/{n_total} Ok cells over two 20x20 grids, "
        f"min diff={worst:.3e} (>= -1e-9), runtime={elapsed:.1f}s (<10s)",
    )


def test_A4_gain_profile():
    rows = run_gain_profile(
        d=10.0, s_values=np.linspace(0.05, 2.0, 30), nx=100, pt=REFERENCE_PT
    )
    assert all(r.alpha_1 is not None for r in rows)
    a1_ratio = rows[0].alpha_1 / rows[-1].alpha_1
    a2_ratio = rows[0].alpha_2 / rows[-1].alpha_2
    ident_err = max(abs(r.r22_sq * r.alpha_2 - 1.0) for r in rows)
    r22_ratio = rows[0].r22_sq / rows[-1].r22_sq
    checks = [
        a1_ratio >= 10.0,
        a2_ratio >= 10.0,
        ident_err <= 1e-8,
        r22_ratio <= 0.1,
    ]
    _report(
        "A4",
        all(checks),
        f"gain profile (nx=100, 30 spacings): alpha ratios {a1_ratio:.0f}x/{a2_ratio:.0f}x (>=10x), "
        f"max |r22^2*alpha2 - 1|={ident_err:.2e} (<=1e-8), "
        f"r22^2 small-s/large-s={r22_ratio:.2e} (<=0.1)",
    )


def test_A5_waterfill_oracle():
    rng = np.random.default_rng(0)
    worst_gap = worst_kkt = 0.0
    for _ in range(200):
        p = random_waterfill_problem(rng)
        sol = solve_waterfill(p)
        grid = grid_search_sum_rate(p.gains, p.weights, p.budget, steps=2000)
        worst_gap = max(worst_gap, abs(sol.sum_rate - grid))
        worst_kkt = max(
            worst_kkt, kkt_residual(p.gains, p.weights, p.budget, sol.q, sol.water_level_dual)
        )
    ok = worst_gap <= 1e-6 and worst_kkt <= 1e-9
    _report(
        "A5",
        ok,
        f"water-filling vs simplex grid (200 problems, K<=4, step Pt/2000): "
        f"max gap={worst_gap:.2e} (<=1e-6), max KKT residual={worst_kkt:.2e} (<=1e-9)",
    )


def test_A6_ordering_determinant_invariant():
    import itertools

    rng = np.random.default_rng(1)
    worst = 0.0
    for _ in range(100):
        h = random_channel(rng, 4, 64)
        det = float(np.linalg.det(h.entries @ h.entries.conj().T).real)
        for pi in itertools.permutations(range(4)):
            prod = float(np.prod(decompose(h, pi).diag_gains))
            worst = max(worst, abs(prod - det) / abs(det))
    _report(
        "A6",
        worst <= 1e-8,
        f"product of squared diagonals vs det(H H^H) over 100 channels x 24 orderings: "
        f"max rel err={worst:.2e} (<=1e-8)",
    )


def test_A7_scheme_dominance():
    rng = np.random.default_rng(2)
    n_ok = 0
    min_margin = math.inf
    greedy_ok = True
    for _ in range(500):
        nx = int(rng.choice([10, 20]))
        kind = "colinear" if rng.random() < 0.5 else "coplanar"
        cfg = ScenarioConfig(
            array=ArrayConfig(nx=nx, ny=nx, spacing=0.5),
            layout=UserLayout(
                kind=kind,
                d=float(np.exp(rng.uniform(np.log(5.0), np.log(100.0)))),
                s=float(rng.uniform(0.05, 5.0)),
            ),
            pt=REFERENCE_PT,
        )
        h = build_channel(cfg)
        exhaustive = best_order_exhaustive(h, REFERENCE_PT)
        greedy = best_order_greedy(h, REFERENCE_PT)
        greedy_ok = greedy_ok and greedy.sum_rate <= exhaustive.sum_rate + 1e-12
        try:
            zf = zf_sum_rate(h, REFERENCE_PT)
        except RankDeficientError:
            continue
        n_ok += 1
        min_margin = min(min_margin, exhaustive.sum_rate - zf.sum_rate)
    ok = min_margin >= -1e-9 and greedy_ok and n_ok >= 400
    _report(
        "A7",
        ok,
        f"scheme dominance over {n_ok}/500 comparable geometries: "
        f"min(dpc - zf)={min_margin:.2e} (>= -1e-9); greedy<=exhaustive {'held' if greedy_ok else 'VIOLATED'}",
    )


def test_A8_zf_nulling_and_alpha_identity():
    rng = np.random.default_rng(3)
    worst_null = worst_alpha = 0.0
    n = 0
    while n < 200:
        k = int(rng.integers(1, 7))
        cols = int(rng.integers(max(2 * k, 8), 129))
        h = random_channel(rng, k, cols)
        gram = h.entries @ h.entries.conj().T
        if np.linalg.cond(gram) > 1e6:
            continue
        n += 1
        pre = build_zf(h)
        null_err = float(np.max(np.abs(h.entries @ pre.f - np.eye(k))))
        inv_diag = np.diagonal(np.linalg.inv(gram)).real
        alpha_err = float(np.max(np.abs(pre.alpha - inv_diag) / inv_diag))
        worst_null = max(worst_null, null_err)
        worst_alpha = max(worst_alpha, alpha_err)
    ok = worst_null <= 1e-8 and worst_alpha <= 1e-10
    _report(
        "A8",
        ok,
        f"zero-forcing over 200 channels (K<=6, N<=128, cond<=1e6): "
        f"max ||HF - I||={worst_null:.2e} (<=1e-8), max alpha rel err={worst_alpha:.2e} (<=1e-10)",
    )


def test_A9_contour_determinism(tmp_path):
    args = [
        "contour", "--nx", "10", "--layout", "colinear",
        "--d", "5:40:4", "--s", "0.1:1.5:4", "--pt", "10",
    ]
    serial_dir = tmp_path / "serial"
    parallel_dir = tmp_path / "parallel"
    # exercise the process-pool path even on a single-CPU box
    workers = str(max(2, min(4, os.cpu_count() or 1)))
    assert cli_main(args + ["--workers", "1", "--out-dir", str(serial_dir)]) == 0
    assert cli_main(args + ["--workers", workers, "--out-dir", str(parallel_dir)]) == 0
    serial = (serial_dir / "contour.csv").read_bytes()
    parallel = (parallel_dir / "contour.csv").read_bytes()
    same_manifest = json.loads((serial_dir / "manifest.json").read_text()) == json.loads(
        (parallel_dir / "manifest.json").read_text()
    )
    ok = serial == parallel and same_manifest
    _report(
        "A9",
        ok,
        f"contour CSV bytes identical for 1 vs {workers} workers: {serial == parallel}; "
        f"manifests identical: {same_manifest}",
    )


def test_note_s_dependence_grows_with_array_size():
    # Gated large-array reproduction stays out of the default suite; the
    # qualitative claim (sensitivity to s grows with the array) is checked
    # by comparing diff variance along s vs along d at two array sizes.
    ratios = {}
    for nx in (10, 100):
        grid = SweepGrid(
            d_values=tuple(np.geomspace(5.0, 100.0, 8)),
            s_values=tuple(np.linspace(0.05, 2.0, 8)),
            nx=nx,
            layout_kind="colinear",
            pt=REFERENCE_PT,
        )
        cells = run_contour(grid)
        diff = np.array(
            [c.diff if c.diff is not None else np.nan for c in cells]
        ).reshape(8, 8)
        v_s = float(np.nanmean(np.var(diff, axis=1)))
        v_d = float(np.nanmean(np.var(diff, axis=0)))
        ratios[nx] = v_s / v_d
    ok = ratios[100] > ratios[10]
    _report(
        "A-note",
        ok,
        f"s-dependence vs d-dependence of diff: variance ratio {ratios[10]:.3f} at nx=10 "
        f"-> {ratios[100]:.3f} at nx=100 (must grow)",
    )
