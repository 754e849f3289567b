import math

import pytest
from hypothesis import settings

import bisteklov as bk

settings.register_profile("deterministic", deadline=None, derandomize=True)
settings.load_profile("deterministic")


@pytest.fixture(scope="session")
def disk_domain():
    return bk.build_quadrature(bk.Disk(1.0), 12)


@pytest.fixture(scope="session")
def ellipse_domain():
    return bk.build_quadrature(bk.Ellipse(2.0, 1.0), 16)


@pytest.fixture(scope="session")
def square_domain():
    square = bk.ConvexPolygon([(-0.5, -0.5), (0.5, -0.5), (0.5, 0.5), (-0.5, 0.5)])
    return bk.build_quadrature(square, 12)


@pytest.fixture(scope="session")
def hexagon():
    return bk.ConvexPolygon([(math.cos(math.pi * k / 3), math.sin(math.pi * k / 3))
                             for k in range(6)])


@pytest.fixture(scope="session")
def hexagon_domain(hexagon):
    return bk.build_quadrature(hexagon, 12)


@pytest.fixture(scope="session")
def circumscribed_triangle():
    # equilateral triangle whose inscribed circle is the unit disk
    return bk.ConvexPolygon([(2 * math.cos(math.pi / 2 + 2 * math.pi * k / 3),
                              2 * math.sin(math.pi / 2 + 2 * math.pi * k / 3))
                             for k in range(3)])
