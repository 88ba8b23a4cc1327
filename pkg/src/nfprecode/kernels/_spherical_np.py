"""Numpy fallback for the spherical-wave channel row kernel."""

import numpy as np

_INV_SQRT_4PI = 1.0 / np.sqrt(4.0 * np.pi)


def channel_row(elem_xyz, ux, uy, uz, wavelength):
    """Channel coefficients from every array element to one user.

    elem_xyz: (N, 3) float64 element positions.  Returns an (N,) complex128
    row with entries exp(-j*2*pi*d/wavelength) / (sqrt(4*pi)*d) where d is
    the element-to-user distance.  A coincident element yields a non-finite
    entry (caller detects and reports).
    """
    dx = elem_xyz[:, 0] - ux
    dy = elem_xyz[:, 1] - uy
    dz = elem_xyz[:, 2] - uz
    dist = np.sqrt(dx * dx + dy * dy + dz * dz)
    with np.errstate(divide="ignore", invalid="ignore"):
        amp = _INV_SQRT_4PI / dist
        row = amp * np.exp(-2j * np.pi / wavelength * dist)
    return row
