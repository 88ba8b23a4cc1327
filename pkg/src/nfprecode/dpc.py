"""QR-based dirty-paper precoding.

For an encoding order pi the rows of H are permuted and the Hermitian
transpose is QR-factored, H_pi^H = Q R with Q orthonormal (N-by-K) and R
upper triangular.  Transmitting through Q turns the broadcast channel
into a lower-triangular one: the k-th encoded user sees gain |r_kk|^2
plus interference from earlier-encoded users only, which successive
encoding pre-cancels without raising transmit power (Q preserves norms,
so the budget is simply sum_k q_k <= P_t).

The diagonal of R is phase-normalised to be real and non-negative; only
its squares enter the rates, but a fixed convention keeps the
reconstruction identity H_pi = R^H Q^H exactly testable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .channel import ChannelMatrix
from .waterfill import PowerAllocation, WaterfillProblem, solve_waterfill

__all__ = [
    "DpcDecomposition",
    "DpcSolution",
    "CapExceededError",
    "validate_order",
    "decompose",
    "dpc_sum_rate",
    "best_order_exhaustive",
    "best_order_greedy",
    "EXHAUSTIVE_CAP_DEFAULT",
]

EXHAUSTIVE_CAP_DEFAULT = 8


class CapExceededError(RuntimeError):
    """Too many users for factorial ordering search; use best_order_greedy."""

    def __init__(self, k: int, cap: int):
        super().__init__(
            f"exhaustive ordering search over {k}! permutations exceeds the cap K <= {cap}; "
            "use best_order_greedy for larger K"
        )
        self.k = k
        self.cap = cap


def validate_order(order, k: int) -> tuple[int, ...]:
    """Check that order is a permutation of 0..k-1 (user encoded first is order[0])."""
    pi = tuple(int(u) for u in order)
    if sorted(pi) != list(range(k)):
        raise ValueError(f"order {order} is not a permutation of 0..{k - 1}")
    return pi


@dataclass(frozen=True)
class DpcDecomposition:
    """Per-ordering triangularization: precoder Q, triangular factor R, and
    the squared diagonal gains (r_kk)^2 in encoding order."""

    order: tuple[int, ...]
    q_basis: np.ndarray
    r_upper: np.ndarray
    diag_gains: np.ndarray


@dataclass(frozen=True)
class DpcSolution:
    """Water-filled allocation for one ordering.

    ``allocation`` is indexed in encoding order; ``user_powers`` and
    ``user_rates`` map it back to natural user indices.
    """

    decomposition: DpcDecomposition
    allocation: PowerAllocation
    sum_rate: float

    @property
    def user_powers(self) -> np.ndarray:
        out = np.zeros_like(self.allocation.q)
        out[list(self.decomposition.order)] = self.allocation.q
        return out

    @property
    def user_rates(self) -> np.ndarray:
        out = np.zeros_like(self.allocation.rates)
        out[list(self.decomposition.order)] = self.allocation.rates
        return out


def decompose(h: ChannelMatrix, order) -> DpcDecomposition:
    """Thin QR of the row-permuted channel's Hermitian transpose.

    Rank-deficient channels are permitted; trailing diagonal gains then
    collapse to ~0 and the water-filler shuts those users off.
    """
    k = h.k_users
    if k > h.n_antennas:
        raise ValueError(f"need K <= N, got K={k}, N={h.n_antennas}")
    pi = validate_order(order, k)
    h_pi = h.entries[list(pi), :]
    q, r = np.linalg.qr(h_pi.conj().T, mode="reduced")
    # Force r_kk real >= 0: scale column k of Q and row k of R by the
    # conjugate diagonal phase (QR is unique only up to these phases).
    diag = np.diagonal(r).copy()
    absd = np.abs(diag)
    phases = np.where(absd > 0, diag / np.where(absd > 0, absd, 1.0), 1.0)
    q = q * phases[np.newaxis, :]
    r = r * np.conj(phases)[:, np.newaxis]
    r[np.arange(k), np.arange(k)] = absd
    gains = absd**2
    return DpcDecomposition(order=pi, q_basis=q, r_upper=r, diag_gains=gains)


def dpc_sum_rate(h: ChannelMatrix, order, pt: float, noise_power: float = 1.0) -> DpcSolution:
    """Optimal power allocation for one encoding order.

    Gains are the squared triangular diagonals (scaled by 1/noise_power);
    the orthonormal precoder leaves the budget unweighted.
    """
    dec = decompose(h, order)
    problem = WaterfillProblem(
        gains=dec.diag_gains / noise_power,
        weights=np.ones(h.k_users),
        budget=pt,
    )
    alloc = solve_waterfill(problem)
    return DpcSolution(decomposition=dec, allocation=alloc, sum_rate=alloc.sum_rate)


def best_order_exhaustive(
    h: ChannelMatrix,
    pt: float,
    noise_power: float = 1.0,
    cap: int = EXHAUSTIVE_CAP_DEFAULT,
) -> DpcSolution:
    """Best ordering over all K! permutations; ties resolve to the
    lexicographically smallest permutation."""
    k = h.k_users
    if k > cap:
        raise CapExceededError(k, cap)
    best = None
    for pi in itertools.permutations(range(k)):
        sol = dpc_sum_rate(h, pi, pt, noise_power)
        if best is None or sol.sum_rate > best.sum_rate:
            best = sol
    return best


def best_order_greedy(h: ChannelMatrix, pt: float, noise_power: float = 1.0) -> DpcSolution:
    """Single ordering by descending channel norm ||h_k||^2 (ties by
    ascending user index), then the per-ordering water-filling."""
    norms = np.sum(np.abs(h.entries) ** 2, axis=1)
    pi = tuple(np.argsort(-norms, kind="stable"))
    return dpc_sum_rate(h, pi, pt, noise_power)
