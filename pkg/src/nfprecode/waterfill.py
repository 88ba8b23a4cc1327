"""Exact water-filling over a weighted linear power budget.

Solves

    maximize   sum_k log2(1 + g_k * q_k)
    subject to sum_k c_k * q_k <= budget,   q_k >= 0

by the closed-form active-set method: with xi_k = c_k / g_k, a set A of
users is active at water level mu = (budget + sum_{A} xi_k) / |A| and
q_k = (mu - xi_k) / c_k on it.  Sorting by xi ascending and taking the
largest prefix with mu > xi_max gives the exact maximizer in O(K log K),
with the budget met with equality whenever any gain is positive.

The zero-forcing problem uses unit gains with weights c_k = ||f_k||^2;
the dirty-paper problem uses unit weights with gains g_k = r_kk^2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["WaterfillProblem", "PowerAllocation", "solve_waterfill"]


@dataclass(frozen=True)
class WaterfillProblem:
    """Per-user power gains g_k, power-cost weights c_k, and total budget."""

    gains: np.ndarray
    weights: np.ndarray
    budget: float

    def __post_init__(self):
        g = np.atleast_1d(np.asarray(self.gains, dtype=float))
        c = np.atleast_1d(np.asarray(self.weights, dtype=float))
        object.__setattr__(self, "gains", g)
        object.__setattr__(self, "weights", c)
        if g.size == 0:
            raise ValueError("empty water-filling problem")
        if g.shape != c.shape:
            raise ValueError(f"gains and weights differ in length: {g.shape} vs {c.shape}")
        if not (np.all(np.isfinite(g)) and np.all(np.isfinite(c)) and np.isfinite(self.budget)):
            raise ValueError("non-finite gains, weights, or budget")
        if np.any(g < 0):
            raise ValueError("gains must be non-negative")
        if np.any(c <= 0):
            raise ValueError("weights must be positive")
        if not (self.budget > 0):
            raise ValueError(f"budget must be positive, got {self.budget}")


@dataclass(frozen=True)
class PowerAllocation:
    """Optimal per-user symbol powers and the rates they attain.

    ``water_level_dual`` is the Lagrange multiplier of the budget
    constraint (the reciprocal of the water level); it is 0 for the
    degenerate all-gains-zero problem, where the budget stays slack.
    """

    q: np.ndarray
    rates: np.ndarray
    sum_rate: float
    water_level_dual: float


def solve_waterfill(problem: WaterfillProblem, gain_floor_rel: float = 1e-15) -> PowerAllocation:
    """Exact maximizer of the water-filling problem.

    Gains below gain_floor_rel * max(gains) are treated as zero (such a
    user gets q = 0) to avoid overflow in 1/g when channels degenerate.
    """
    g = problem.gains
    c = problem.weights
    budget = problem.budget
    k = g.size

    usable = g > gain_floor_rel * g.max() if g.max() > 0 else np.zeros(k, dtype=bool)
    if not usable.any():
        return PowerAllocation(
            q=np.zeros(k), rates=np.zeros(k), sum_rate=0.0, water_level_dual=0.0
        )

    idx = np.flatnonzero(usable)
    xi = c[idx] / g[idx]
    order = np.argsort(xi, kind="stable")
    xi_sorted = xi[order]

    # Largest prefix m with water level mu_m = (budget + sum xi_1..m)/m above xi_m.
    prefix = np.cumsum(xi_sorted)
    m_candidates = np.arange(1, idx.size + 1)
    mu_all = (budget + prefix) / m_candidates
    feasible = mu_all > xi_sorted
    m = int(np.flatnonzero(feasible)[-1]) + 1
    mu = mu_all[m - 1]

    q = np.zeros(k)
    active = idx[order[:m]]
    q[active] = (mu - xi_sorted[:m]) / c[active]

    rates = np.log2(1.0 + g * q)
    return PowerAllocation(
        q=q,
        rates=rates,
        sum_rate=float(rates.sum()),
        water_level_dual=float(1.0 / mu),
    )
