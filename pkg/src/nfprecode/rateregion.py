"""Two-user achievable rate regions for ZF and DPC.

Boundaries are swept in the power-split parameter t in [0, 1]: the full
budget is divided between the two users so the scheme's power constraint
holds with equality at every sample, and the enclosed area is the
trapezoidal integral of r2 over r1.  No time-sharing convexification is
applied by default (areas are the raw boundary integrals).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .channel import ChannelMatrix
from .dpc import decompose, validate_order
from .zf import COND_LIMIT_DEFAULT, build_zf

__all__ = ["RatePoint", "RateRegion", "zf_region", "dpc_region", "region_union", "area_improvement"]

UNION_ORDER = "union"


@dataclass(frozen=True)
class RatePoint:
    r1: float
    r2: float


@dataclass(frozen=True)
class RateRegion:
    """Sampled region boundary, sorted by r1 ascending.

    ``t``, ``q1``, ``q2`` carry the generating power split per boundary
    point (NaN for an envelope, which has no single split).
    """

    scheme: str
    order: tuple[int, ...] | str | None
    r1: np.ndarray
    r2: np.ndarray
    area: float
    t: np.ndarray = field(repr=False, default=None)
    q1: np.ndarray = field(repr=False, default=None)
    q2: np.ndarray = field(repr=False, default=None)

    @property
    def r1_max(self) -> float:
        return float(self.r1[-1])

    @property
    def r2_max(self) -> float:
        return float(self.r2[0])

    @property
    def points(self) -> list[RatePoint]:
        return [RatePoint(float(a), float(b)) for a, b in zip(self.r1, self.r2)]


def _check_two_users(h: ChannelMatrix):
    if h.k_users != 2:
        raise ValueError(f"rate regions are defined for K = 2, got K = {h.k_users}")


def _check_points(m_points: int):
    if m_points < 3:
        raise ValueError(f"m_points must be >= 3, got {m_points}")


def zf_region(
    h: ChannelMatrix,
    pt: float,
    m_points: int = 4001,
    noise_power: float = 1.0,
    cond_limit: float = COND_LIMIT_DEFAULT,
) -> RateRegion:
    """ZF boundary: q_1 = t*pt/alpha_1, q_2 = (1-t)*pt/alpha_2, so the
    weighted budget alpha_1 q_1 + alpha_2 q_2 = pt at every sample."""
    _check_two_users(h)
    _check_points(m_points)
    precoder = build_zf(h, cond_limit=cond_limit)
    t = np.linspace(0.0, 1.0, m_points)
    q1 = t * pt / precoder.alpha[0]
    q2 = (1.0 - t) * pt / precoder.alpha[1]
    r1 = np.log2(1.0 + q1 / noise_power)
    r2 = np.log2(1.0 + q2 / noise_power)
    return RateRegion(
        scheme="ZF",
        order=None,
        r1=r1,
        r2=r2,
        area=float(np.trapezoid(r2, r1)),
        t=t,
        q1=q1,
        q2=q2,
    )


def dpc_region(
    h: ChannelMatrix,
    pt: float,
    order=(0, 1),
    m_points: int = 4001,
    noise_power: float = 1.0,
) -> RateRegion:
    """DPC boundary for one encoding order: the first-encoded user gets
    t*pt, the second (1-t)*pt (orthonormal precoding keeps the budget
    unweighted); points are remapped to natural user indices."""
    _check_two_users(h)
    _check_points(m_points)
    pi = validate_order(order, 2)
    dec = decompose(h, pi)
    t = np.linspace(0.0, 1.0, m_points)
    q_enc = np.stack([t * pt, (1.0 - t) * pt])  # row k: power of k-th encoded user
    rates_enc = np.log2(1.0 + dec.diag_gains[:, None] * q_enc / noise_power)
    # Natural user indexing: user pi[k] is the k-th encoded.
    q_user = np.empty_like(q_enc)
    r_user = np.empty_like(rates_enc)
    q_user[list(pi), :] = q_enc
    r_user[list(pi), :] = rates_enc
    sort = np.argsort(r_user[0], kind="stable")
    r1, r2 = r_user[0][sort], r_user[1][sort]
    return RateRegion(
        scheme="DPC",
        order=pi,
        r1=r1,
        r2=r2,
        area=float(np.trapezoid(r2, r1)),
        t=t[sort],
        q1=q_user[0][sort],
        q2=q_user[1][sort],
    )


def region_union(regions: list[RateRegion]) -> RateRegion:
    """Pointwise upper envelope of boundaries on the merged r1 grid."""
    if not regions:
        raise ValueError("region_union needs at least one region")
    scheme = regions[0].scheme
    grid = np.unique(np.concatenate([reg.r1 for reg in regions]))
    env = np.full(grid.size, -np.inf)
    for reg in regions:
        r1, uniq = np.unique(reg.r1, return_index=True)
        r2 = reg.r2[uniq]
        # Outside a region's r1 span it contributes nothing to the envelope.
        contrib = np.interp(grid, r1, r2, left=-np.inf, right=-np.inf)
        env = np.maximum(env, contrib)
    nan_free = np.isfinite(env)
    grid, env = grid[nan_free], env[nan_free]
    filler = np.full(grid.size, np.nan)
    return RateRegion(
        scheme=scheme,
        order=UNION_ORDER,
        r1=grid,
        r2=env,
        area=float(np.trapezoid(env, grid)),
        t=filler,
        q1=filler,
        q2=filler,
    )


def area_improvement(a: RateRegion, b: RateRegion) -> float:
    """Percent area gain of region a over region b."""
    if not (b.area > 0):
        raise ValueError(f"reference region area must be positive, got {b.area}")
    return 100.0 * (a.area - b.area) / b.area
