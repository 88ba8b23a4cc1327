"""Near-field line-of-sight channel synthesis.

The coefficient from a transmit element at t to a user at r is the
spherical-wave response

    h = exp(-j*2*pi*d/wavelength) / (sqrt(4*pi) * d),   d = ||r - t||,

deterministic and purely geometric.  Rows of the channel matrix are
generated one user at a time so peak memory stays at O(K*N) complex
scalars even for million-element arrays.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .geometry import ArrayConfig, Position, UserLayout, build_array, build_users

__all__ = ["ChannelMatrix", "ScenarioConfig", "channel_coefficient", "build_channel", "channel_gram"]

_INV_SQRT_4PI = 1.0 / math.sqrt(4.0 * math.pi)


@dataclass(frozen=True)
class ChannelMatrix:
    """Complex K-by-N channel; row k is user k's response to every element."""

    entries: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=complex)
        if e.ndim != 2:
            raise ValueError(f"channel matrix must be 2-D, got shape {e.shape}")
        object.__setattr__(self, "entries", e)

    @property
    def k_users(self) -> int:
        return self.entries.shape[0]

    @property
    def n_antennas(self) -> int:
        return self.entries.shape[1]

    def row(self, k: int) -> np.ndarray:
        return self.entries[k]


@dataclass(frozen=True)
class ScenarioConfig:
    """Array geometry, user layout, and the power budget of one scenario.

    ``pt`` is the transmit power budget and ``noise_power`` the per-user
    noise variance; both are linear quantities and default to the
    noise-normalised convention (noise_power = 1).
    """

    array: ArrayConfig
    layout: UserLayout
    pt: float
    noise_power: float = 1.0

    def __post_init__(self):
        if not (self.pt > 0):
            raise ValueError(f"pt must be positive, got {self.pt}")
        if not (self.noise_power > 0):
            raise ValueError(f"noise_power must be positive, got {self.noise_power}")


def channel_coefficient(t, r, wavelength: float = 1.0) -> complex:
    """Single spherical-wave coefficient from element position t to user r."""
    tx, ty, tz = _as_xyz(t)
    rx, ry, rz = _as_xyz(r)
    d = math.sqrt((rx - tx) ** 2 + (ry - ty) ** 2 + (rz - tz) ** 2)
    if d == 0.0:
        raise ValueError("transmit element and user coincide (zero distance)")
    return (_INV_SQRT_4PI / d) * cmath.exp(-2j * math.pi * d / wavelength)


def build_channel(scenario: ScenarioConfig) -> ChannelMatrix:
    """Channel matrix for the scenario; rows follow user order, columns follow
    the row-major element ordering of build_array."""
    elements = build_array(scenario.array)
    users = build_users(scenario.layout)
    return channel_from_positions(elements, users, scenario.array.wavelength)


def channel_from_positions(elements: np.ndarray, users, wavelength: float) -> ChannelMatrix:
    elements = np.ascontiguousarray(elements, dtype=float)
    n = elements.shape[0]
    h = np.empty((len(users), n), dtype=complex)
    for k, user in enumerate(users):
        ux, uy, uz = _as_xyz(user)
        row = kernels.channel_row(elements, ux, uy, uz, wavelength)
        if not np.all(np.isfinite(row)):
            bad = int(np.flatnonzero(~np.isfinite(row))[0])
            raise ValueError(f"user {k} coincides with array element {bad} (zero distance)")
        h[k] = row
    return ChannelMatrix(h)


def channel_gram(h: ChannelMatrix | np.ndarray) -> np.ndarray:
    """Hermitian K-by-K Gram matrix H @ H^H."""
    m = h.entries if isinstance(h, ChannelMatrix) else np.asarray(h)
    return m @ m.conj().T


def _as_xyz(p) -> tuple[float, float, float]:
    if isinstance(p, Position):
        return (p.x, p.y, p.z)
    x, y, z = (float(v) for v in p)
    return (x, y, z)
