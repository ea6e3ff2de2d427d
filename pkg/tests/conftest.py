import math

import pytest

import melroot as m


@pytest.fixture(scope="session")
def zeta_ff():
    return m.build_zeta_factored()


@pytest.fixture(scope="session")
def ref_contour():
    """The circle used by the reference table: R = 0.1 about 0.57 + 1.57i."""
    return m.CircularContour(0.57 + 1.57j, 0.1)


@pytest.fixture(scope="session")
def coeffs():
    return m.PRESETS["appendixC"]


@pytest.fixture(scope="session")
def zeta_zf(zeta_ff):
    return zeta_ff.zf


def contour_angles():
    return [2.0 * math.pi * i / 8.0 for i in range(9)]
