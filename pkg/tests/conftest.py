import pytest

from evalcodes import PointSet, make_field, parse_polynomial

PTS8 = [(1, 1, 1), (1, 1, -1), (0, 0, 0), (0, 0, 1), (0, 0, -1), (0, 1, 0), (0, 1, 1), (0, 1, -1)]
PTS5 = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0), (2, 2, 2)]
PTS7 = [(1, 1, -1), (0, 0, 0), (0, 0, 1), (0, 0, -1), (0, 1, 0), (0, 1, 1), (0, 1, -1)]
LINE4 = [(1,), (3,), (4,), (5,)]
PLANE5 = [(0, 0), (1, 0), (0, 1), (1, 1), (0, -1)]


def polys(X, texts):
    return [parse_polynomial(t, X.field, X.nvars) for t in texts]


@pytest.fixture
def gf3():
    return make_field(3)


@pytest.fixture
def pts8(gf3):
    return PointSet(gf3, PTS8)


@pytest.fixture
def pts5(gf3):
    return PointSet(gf3, PTS5)


@pytest.fixture
def pts7(gf3):
    return PointSet(gf3, PTS7)


@pytest.fixture
def line4():
    return PointSet(make_field(7), LINE4)


@pytest.fixture
def plane5(gf3):
    return PointSet(gf3, PLANE5)
