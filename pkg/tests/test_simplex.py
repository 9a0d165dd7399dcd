""" test_simplex.py -- Right-corner simplexes: faces, heights, normals and De Gua.

    Language: Python 3.9
"""

import math

import numpy as np
import pytest

from pythagoras.func import simplex
from pythagoras.func.simplex import RightSimplex
from pythagoras.utils.exceptions import DomainError

UNIT = RightSimplex((1, 1, 1))
TALL = RightSimplex((3, 4, 12))
TRIANGLE = RightSimplex((3, 4))


def _random_simplexes(rng, count=200):
    for _ in range(count):
        n = int(rng.integers(2, 9))
        yield RightSimplex(tuple(rng.uniform(0.1, 10.0, size=n)))


@pytest.mark.parametrize("legs", [(1,), (1, -1), (1, 0), (1, float("inf")), tuple(range(1, 22))])
def test_rejects_invalid_legs(legs):
    with pytest.raises(DomainError):
        RightSimplex(legs)


def test_leg_face_volumes():
    assert simplex.leg_face_volume(UNIT, 1) == pytest.approx(0.5)
    assert [simplex.leg_face_volume(TALL, k) for k in (1, 2, 3)] == pytest.approx([24, 18, 6])
    assert [simplex.leg_face_volume(TRIANGLE, k) for k in (1, 2)] == pytest.approx([4, 3])


@pytest.mark.parametrize("k", [0, 4, -1])
def test_leg_face_volume_rejects_bad_index(k):
    with pytest.raises(DomainError):
        simplex.leg_face_volume(UNIT, k)


@pytest.mark.parametrize(
    "s, expected",
    [(UNIT, math.sqrt(3) / 2), (TALL, 6 * math.sqrt(26)), (TRIANGLE, 5.0)],
)
def test_hypotenusal_volume_three_ways(s, expected):
    assert simplex.hypotenusal_volume_gram(s) == pytest.approx(expected, rel=1e-12)
    assert simplex.hypotenusal_volume_pythagoras(s) == pytest.approx(expected, rel=1e-12)
    assert simplex.hypotenusal_volume_heights(s) == pytest.approx(expected, rel=1e-12)


def test_de_gua_unit_tetrahedron():
    faces = simplex.face_volumes(UNIT)
    assert faces[0] ** 2 == pytest.approx(sum(V * V for V in faces[1:]), rel=1e-14)


def test_hypotenusal_volume_oracle_equality(rng):
    for s in _random_simplexes(rng):
        gram = simplex.hypotenusal_volume_gram(s)
        assert simplex.hypotenusal_volume_pythagoras(s) == pytest.approx(gram, rel=1e-12)


def test_heights():
    assert simplex.height(UNIT, 0) == pytest.approx(1 / math.sqrt(3))
    assert simplex.height(TALL, 0) == pytest.approx(12 / math.sqrt(26))
    assert simplex.height(TALL, 2) == 4.0
    with pytest.raises(DomainError):
        simplex.height(TALL, 4)


def test_volumes():
    assert simplex.volume(TALL) == pytest.approx(24.0)
    assert simplex.volume(RightSimplex((1, 1, 1, 1))) == pytest.approx(1 / 24)
    assert simplex.volume(TRIANGLE) == pytest.approx(6.0)
    V0 = simplex.hypotenusal_volume_gram(TALL)
    assert V0 * simplex.height(TALL, 0) / 3 == pytest.approx(24.0, rel=1e-12)


def test_height_consistency(rng):
    for s in _random_simplexes(rng):
        nV = s.n * simplex.volume(s)
        for k, V in enumerate(simplex.face_volumes(s)):
            assert V * simplex.height(s, k) == pytest.approx(nV, rel=1e-12)


def test_outward_normals():
    normals = simplex.outward_normals(UNIT)
    np.testing.assert_allclose(normals[0], np.ones(3) / math.sqrt(3), rtol=1e-14)
    assert np.dot(normals[1], normals[2]) == 0.0
    tall = simplex.outward_normals(TALL)
    np.testing.assert_allclose(tall[0] / tall[0][2], [4.0, 3.0, 1.0], rtol=1e-12)
    for n in tall:
        assert np.linalg.norm(n) == pytest.approx(1.0, abs=1e-14)


def test_normal_closure(rng):
    for s in _random_simplexes(rng):
        assert simplex.normal_closure_residual(s) <= 1e-12


def test_scaling(rng):
    for s in _random_simplexes(rng, count=50):
        t = 2.5
        scaled = RightSimplex(tuple(t * a for a in s.legs))
        assert simplex.volume(scaled) == pytest.approx(t ** s.n * simplex.volume(s), rel=1e-12)
        assert simplex.face_volumes(scaled) == pytest.approx(
            [t ** (s.n - 1) * V for V in simplex.face_volumes(s)], rel=1e-12
        )


def test_two_legs_reduce_to_the_plane():
    assert simplex.hypotenusal_volume_pythagoras(TRIANGLE) == 5.0
    assert simplex.height(TRIANGLE, 0) == pytest.approx(12 / 5)


def test_simplex_table():
    table = simplex.simplex_table(TALL)
    assert list(table.index) == [0, 1, 2, 3]
    assert list(table.columns) == ["volume", "height", "cone_volume", "normal"]
    np.testing.assert_allclose(table["cone_volume"], 24.0, rtol=1e-12)
    assert table.loc[3, "volume"] == pytest.approx(6.0)
    assert table.loc[1, "normal"] == [-1.0, -0.0, -0.0]
