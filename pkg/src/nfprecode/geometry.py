"""Transmit-array and user geometry.

All lengths are in wavelengths unless stated otherwise (the default
wavelength is normalised to 1).  The transmit array is a uniform planar
array (UPA) centred at the origin on the xy-plane; users sit in the
half-space z > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

__all__ = [
    "ArrayConfig",
    "Position",
    "LayoutKind",
    "UserLayout",
    "build_array",
    "build_users",
    "far_field_boundary",
]


@dataclass(frozen=True)
class ArrayConfig:
    """Uniform planar array: nx-by-ny elements with a fixed grid pitch."""

    nx: int
    ny: int
    spacing: float = 0.5
    wavelength: float = 1.0

    def __post_init__(self):
        if int(self.nx) != self.nx or int(self.ny) != self.ny:
            raise ValueError("nx and ny must be integers")
        if self.nx < 1 or self.ny < 1:
            raise ValueError(f"nx and ny must be >= 1, got nx={self.nx}, ny={self.ny}")
        if not (self.spacing > 0):
            raise ValueError(f"spacing must be positive, got {self.spacing}")
        if not (self.wavelength > 0):
            raise ValueError(f"wavelength must be positive, got {self.wavelength}")

    @property
    def n_elements(self) -> int:
        return self.nx * self.ny

    @property
    def aperture(self) -> float:
        """Diagonal extent of the element grid (maximum array dimension)."""
        lx = (self.nx - 1) * self.spacing
        ly = (self.ny - 1) * self.spacing
        return math.hypot(lx, ly)


@dataclass(frozen=True)
class Position:
    """Cartesian point, coordinates in wavelengths."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.x, self.y, self.z)):
            raise ValueError(f"coordinates must be finite, got {(self.x, self.y, self.z)}")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)


class LayoutKind(str, Enum):
    CO_LINEAR = "colinear"
    COPLANAR = "coplanar"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class UserLayout:
    """Two-user parametric placement, or explicit positions for any K.

    ``d`` is the range of the first user (co-linear) or of the midpoint
    between the users (coplanar); ``s`` is the inter-user spacing.
    """

    kind: LayoutKind
    d: float = 0.0
    s: float = 0.0
    positions: tuple[Position, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "kind", LayoutKind(self.kind))
        if self.kind is LayoutKind.EXPLICIT:
            if not self.positions:
                raise ValueError("explicit layout requires at least one position")
            if any(p.z <= 0 for p in self.positions):
                raise ValueError("all users must be strictly in front of the array (z > 0)")
        else:
            if not (self.d > 0):
                raise ValueError(f"distance d must be positive, got {self.d}")
            if self.s < 0:
                raise ValueError(f"spacing s must be non-negative, got {self.s}")

    @property
    def k_users(self) -> int:
        if self.kind is LayoutKind.EXPLICIT:
            return len(self.positions)
        return 2


def build_array(cfg: ArrayConfig) -> np.ndarray:
    """Element positions of the UPA as an (N, 3) array on the z = 0 plane.

    Element (i, j) sits at ((i - (nx-1)/2) * spacing, (j - (ny-1)/2) * spacing, 0);
    rows are ordered row-major in (i, j), so the centroid is exactly the origin.
    """
    x = (np.arange(cfg.nx) - (cfg.nx - 1) / 2.0) * cfg.spacing
    y = (np.arange(cfg.ny) - (cfg.ny - 1) / 2.0) * cfg.spacing
    xx, yy = np.meshgrid(x, y, indexing="ij")
    pos = np.zeros((cfg.n_elements, 3), dtype=float)
    pos[:, 0] = xx.ravel()
    pos[:, 1] = yy.ravel()
    return pos


def build_users(layout: UserLayout) -> list[Position]:
    """User positions for the layout.

    Co-linear: both users on the boresight (+z) axis, the first at range d,
    the second d + s behind it.  Coplanar: users offset +-s/2 along x at a
    common range d.  Explicit: positions returned verbatim.
    """
    if layout.kind is LayoutKind.CO_LINEAR:
        return [Position(0.0, 0.0, layout.d), Position(0.0, 0.0, layout.d + layout.s)]
    if layout.kind is LayoutKind.COPLANAR:
        return [
            Position(-layout.s / 2.0, 0.0, layout.d),
            Position(+layout.s / 2.0, 0.0, layout.d),
        ]
    return list(layout.positions)


def far_field_boundary(aperture: float, wavelength: float) -> float:
    """Range threshold 2*aperture^2/wavelength separating near and far field.

    Both arguments must carry the same length unit; the result is in that unit.
    """
    if not (aperture > 0):
        raise ValueError(f"aperture must be positive, got {aperture}")
    if not (wavelength > 0):
        raise ValueError(f"wavelength must be positive, got {wavelength}")
    return 2.0 * aperture * aperture / wavelength
