import json

import pytest
from hypothesis import HealthCheck, settings

from toricflow import AffineMonoid, Cone, N_SIDE

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


# Double-description fixtures: (name, rank, rays).  All pointed and
# full-dimensional, mostly rank 2 and 3 with two rank-4 entries.
DUALITY_CONES = [
    ("quadrant", 2, [(1, 0), (0, 1)]),
    ("quadric", 2, [(0, 1), (2, -1)]),
    ("wide", 2, [(0, 1), (3, 1)]),
    ("skew", 2, [(1, 2), (2, -1)]),
    ("thin", 2, [(1, 5), (1, -5)]),
    ("octant", 3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    ("square", 3, [(1, 0, 0), (1, 2, 0), (1, 0, 2), (1, 2, 2)]),
    ("tilted", 3, [(1, 0, 0), (0, 1, 0), (1, 1, 2)]),
    ("pentagon", 3, [(2, 0, 1), (0, 2, 1), (-2, 0, 1), (0, -2, 1), (2, 2, 1)]),
    ("orthant4", 4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]),
    ("cube4", 4, [(1, 1, 1, 1), (1, -1, 1, 1), (1, 1, -1, 1), (1, -1, -1, 1),
                  (1, 1, 1, -1), (1, -1, 1, -1), (1, 1, -1, -1), (1, -1, -1, -1)]),
]


def cone_fixture(name):
    for fix_name, rank, rays in DUALITY_CONES:
        if fix_name == name:
            return Cone.from_rays(rays, rank, N_SIDE)
    raise KeyError(name)


@pytest.fixture
def line():
    return AffineMonoid([(1,)], 1)


@pytest.fixture
def a2():
    return AffineMonoid([(1, 0), (0, 1)], 2)


@pytest.fixture
def a3():
    return AffineMonoid([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)


@pytest.fixture
def quadric():
    # weight monoid of the quadric cone xz = y^2: Hilbert basis of the
    # dual of cone((0,1),(2,-1))
    return AffineMonoid([(1, 0), (1, 1), (1, 2)], 2)


@pytest.fixture
def cusp():
    return AffineMonoid([(2,), (3,)], 1)


QUADRIC_SCENE = {
    "rank": 2,
    "cone_rays": [[0, 1], [2, -1]],
    "points": {"p": {"torus": [3, 2]}},
    "subgroups": {"vertical": [0, 1]},
}

A2_SCENE = {
    "rank": 2,
    "monoid_generators": [[1, 0], [0, 1]],
    "points": {"x": {"torus": [2, 5]}},
    "subgroups": {"l": [1, 0]},
}

CUSP_SCENE = {
    "rank": 1,
    "monoid_generators": [[2], [3]],
    "points": {"p": {"torus": [2]}},
    "subgroups": {"l": [1]},
}


@pytest.fixture
def quadric_scene_path(tmp_path):
    path = tmp_path / "quadric.json"
    path.write_text(json.dumps(QUADRIC_SCENE))
    return str(path)


@pytest.fixture
def a2_scene_path(tmp_path):
    path = tmp_path / "a2.json"
    path.write_text(json.dumps(A2_SCENE))
    return str(path)


@pytest.fixture
def cusp_scene_path(tmp_path):
    path = tmp_path / "cusp.json"
    path.write_text(json.dumps(CUSP_SCENE))
    return str(path)
