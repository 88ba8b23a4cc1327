import numpy as np
import pytest

from nfprecode import ArrayConfig, ScenarioConfig, UserLayout, build_channel

REFERENCE_PT = 10.0


def reference_scenario(kind: str) -> ScenarioConfig:
    """Reference two-user setup: 500x500 half-wavelength UPA, d=10, s=0.2, pt=10."""
    return ScenarioConfig(
        array=ArrayConfig(nx=500, ny=500, spacing=0.5, wavelength=1.0),
        layout=UserLayout(kind=kind, d=10.0, s=0.2),
        pt=REFERENCE_PT,
    )


@pytest.fixture(scope="session")
def colinear_channel():
    return build_channel(reference_scenario("colinear"))


@pytest.fixture(scope="session")
def coplanar_channel():
    return build_channel(reference_scenario("coplanar"))


def random_channel(rng: np.random.Generator, k: int, n: int):
    """Complex Gaussian test channel (not a physical geometry)."""
    from nfprecode import ChannelMatrix

    h = (rng.standard_normal((k, n)) + 1j * rng.standard_normal((k, n))) / np.sqrt(2 * n)
    return ChannelMatrix(h)


def pytest_terminal_summary(terminalreporter):
    """Print one line per acceptance criterion after capture ends."""
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
