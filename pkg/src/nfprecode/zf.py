"""Zero-forcing precoder and its sum-rate power allocation.

F = H^H (H H^H)^{-1} nulls inter-user interference; the price is the
per-user power inflation alpha_k = ||f_k||^2, which enters the budget
as sum_k alpha_k * q_k <= P_t.  The K-by-K Gram system is solved with a
pivoted factorization (K is small, N may be huge), never by forming an
explicit inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import ChannelMatrix, channel_gram
from .waterfill import PowerAllocation, WaterfillProblem, solve_waterfill

__all__ = ["ZfPrecoder", "RankDeficientError", "build_zf", "zf_sum_rate"]

COND_LIMIT_DEFAULT = 1e12


class RankDeficientError(RuntimeError):
    """Gram matrix is numerically singular (e.g. coincident users)."""

    def __init__(self, condition: float, limit: float):
        super().__init__(
            f"channel Gram condition estimate {condition:.3e} exceeds {limit:.3e}; "
            "zero-forcing is not computable for this geometry"
        )
        self.condition = condition
        self.limit = limit


@dataclass(frozen=True)
class ZfPrecoder:
    """N-by-K zero-forcing matrix with per-user power costs alpha_k."""

    f: np.ndarray
    alpha: np.ndarray
    condition_estimate: float


def build_zf(h: ChannelMatrix, cond_limit: float = COND_LIMIT_DEFAULT) -> ZfPrecoder:
    """Zero-forcing precoder for H, raising RankDeficientError when the
    Gram condition estimate exceeds cond_limit."""
    if h.k_users > h.n_antennas:
        raise ValueError(f"need K <= N, got K={h.k_users}, N={h.n_antennas}")
    gram = channel_gram(h)
    cond = float(np.linalg.cond(gram))
    if not np.isfinite(cond) or cond > cond_limit:
        raise RankDeficientError(cond, cond_limit)
    # F = H^H G^{-1} = (G^{-1} H)^H; LU with partial pivoting on the K-by-K Gram.
    f = np.linalg.solve(gram, h.entries).conj().T
    alpha = np.sum(np.abs(f) ** 2, axis=0)
    return ZfPrecoder(f=f, alpha=alpha, condition_estimate=cond)


def zf_sum_rate(
    h: ChannelMatrix,
    pt: float,
    noise_power: float = 1.0,
    cond_limit: float = COND_LIMIT_DEFAULT,
) -> PowerAllocation:
    """Sum-rate-optimal water-filling over the zero-forced channel.

    Each user sees a unit effective gain (scaled by 1/noise_power) and
    costs alpha_k per unit of symbol power.
    """
    precoder = build_zf(h, cond_limit=cond_limit)
    gains = np.full(h.k_users, 1.0 / noise_power)
    problem = WaterfillProblem(gains=gains, weights=precoder.alpha, budget=pt)
    return solve_waterfill(problem)
