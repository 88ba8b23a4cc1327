# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython channel row kernel: fused distance/amplitude/phase loop.

Computes exp(-j*2*pi*d/wavelength) / (sqrt(4*pi)*d) per element without
the intermediate arrays the numpy version allocates.  Semantics match
_spherical_np.channel_row bit-for-bit up to libm rounding.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, sqrt, M_PI

cnp.import_array()


def channel_row(double[:, ::1] elem_xyz, double ux, double uy, double uz,
                double wavelength):
    cdef Py_ssize_t n = elem_xyz.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef double inv_sqrt4pi = 1.0 / sqrt(4.0 * M_PI)
    cdef double wavenum = -2.0 * M_PI / wavelength
    cdef double dx, dy, dz, dist, amp, phase
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            dx = elem_xyz[i, 0] - ux
            dy = elem_xyz[i, 1] - uy
            dz = elem_xyz[i, 2] - uz
            dist = sqrt(dx * dx + dy * dy + dz * dz)
            amp = inv_sqrt4pi / dist
            phase = wavenum * dist
            ov[i] = amp * cos(phase) + 1j * (amp * sin(phase))
    return out
