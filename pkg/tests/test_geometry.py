import math

import numpy as np
import pytest

from nfprecode import (
    ArrayConfig,
    LayoutKind,
    Position,
    UserLayout,
    build_array,
    build_users,
    far_field_boundary,
)


def test_element_count_and_shape():
    cfg = ArrayConfig(nx=4, ny=3, spacing=0.5)
    elems = build_array(cfg)
    assert elems.shape == (12, 3)
    assert cfg.n_elements == 12


def test_grid_is_centered_and_half_wavelength():
    cfg = ArrayConfig(nx=4, ny=4, spacing=0.5, wavelength=1.0)
    elems = build_array(cfg)
    # centroid at the origin, all elements in the z=0 plane
    assert np.allclose(elems.mean(axis=0), 0.0, atol=1e-15)
    assert np.all(elems[:, 2] == 0.0)
    xs = np.unique(elems[:, 0])
    assert np.allclose(np.diff(xs), 0.5)
    assert xs.min() == -0.75 and xs.max() == 0.75


def test_row_major_element_order():
    cfg = ArrayConfig(nx=2, ny=3, spacing=1.0)
    elems = build_array(cfg)
    # index n = i*ny + j: y (j) varies fastest
    assert np.allclose(elems[0], [-0.5, -1.0, 0.0])
    assert np.allclose(elems[1], [-0.5, 0.0, 0.0])
    assert np.allclose(elems[2], [-0.5, 1.0, 0.0])
    assert np.allclose(elems[3], [0.5, -1.0, 0.0])


def test_single_element_array():
    elems = build_array(ArrayConfig(nx=1, ny=1))
    assert elems.shape == (1, 3)
    assert np.allclose(elems[0], 0.0)


def test_aperture_is_diagonal_extent():
    cfg = ArrayConfig(nx=5, ny=3, spacing=0.5)
    # extents: (5-1)*0.5 = 2.0 and (3-1)*0.5 = 1.0
    assert cfg.aperture == pytest.approx(math.hypot(2.0, 1.0), rel=1e-15)


def test_far_field_boundary_known_value():
    # a=10, lambda=1 -> 2*a^2/lambda = 200
    assert far_field_boundary(10.0, 1.0) == pytest.approx(200.0, rel=1e-15)


def test_far_field_boundary_reference_array_scale():
    # 500x500 at half-wavelength spacing: extent ~249.5 per side,
    # diagonal aperture ~352.8, boundary ~2.5e5 wavelengths
    cfg = ArrayConfig(nx=500, ny=500, spacing=0.5, wavelength=1.0)
    boundary = far_field_boundary(cfg.aperture, cfg.wavelength)
    assert boundary == pytest.approx(2.0 * cfg.aperture**2, rel=1e-15)
    assert boundary > 2.0e5  # D=10 is deep inside the near field


def test_colinear_layout_positions():
    users = build_users(UserLayout(kind=LayoutKind.CO_LINEAR, d=10.0, s=0.2))
    assert users[0] == Position(0.0, 0.0, 10.0)
    assert users[1] == Position(0.0, 0.0, 10.2)


def test_coplanar_layout_positions():
    users = build_users(UserLayout(kind="coplanar", d=10.0, s=0.2))
    assert users[0] == Position(-0.1, 0.0, 10.0)
    assert users[1] == Position(0.1, 0.0, 10.0)


def test_explicit_layout_passthrough():
    pts = (Position(0.0, 1.0, 5.0), Position(1.0, -1.0, 7.0), Position(0.0, 0.0, 2.0))
    users = build_users(UserLayout(kind=LayoutKind.EXPLICIT, positions=pts))
    assert tuple(users) == pts


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(nx=0, ny=4),
        dict(nx=4, ny=-1),
        dict(nx=4, ny=4, spacing=0.0),
        dict(nx=4, ny=4, wavelength=-1.0),
    ],
)
def test_bad_array_config_rejected(kwargs):
    with pytest.raises(ValueError):
        ArrayConfig(**kwargs)


def test_bad_layouts_rejected():
    with pytest.raises(ValueError):
        UserLayout(kind="colinear", d=0.0, s=0.1)
    with pytest.raises(ValueError):
        UserLayout(kind="coplanar", d=5.0, s=-0.1)
    with pytest.raises(ValueError):
        UserLayout(kind="explicit", positions=(Position(0.0, 0.0, 0.0),))
    with pytest.raises(ValueError):
        UserLayout(kind="explicit")
    with pytest.raises(ValueError):
        Position(0.0, float("nan"), 1.0)
