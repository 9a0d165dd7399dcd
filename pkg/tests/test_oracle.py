""" test_oracle.py -- Monte Carlo, quadrature and embedding oracles.

    Language: Python 3.9
"""

import math

import numpy as np
import pytest

from pythagoras.func import curved, oracle
from pythagoras.func.curved import Geometry
from pythagoras.func.exterior import RealFrame, gram_volume
from pythagoras.utils.exceptions import DomainError

SPHERE = Geometry.spherical(1.0)
PLANE = Geometry.euclidean()
HYPERBOLIC = Geometry.hyperbolic(1.0)


def test_mc_unit_square():
    estimate = oracle.mc_parallelotope_volume(RealFrame([[1, 0], [0, 1]]), 1000, 0)
    assert estimate.value == pytest.approx(1.0)
    # Every point of the bounding box is a hit, so the estimate has no spread.
    assert estimate.stderr == 0.0
    assert (estimate.samples, estimate.seed) == (1000, 0)


def test_mc_tilted_parallelogram():
    f = RealFrame([[1, 0, 1], [0, 1, 1]])
    estimate = oracle.mc_parallelotope_volume(f, 10 ** 6, 7)
    assert abs(estimate.value - math.sqrt(3)) <= 5 * estimate.stderr


def test_mc_degenerate_frame():
    estimate = oracle.mc_parallelotope_volume(RealFrame([[1, 2, 3], [2, 4, 6]]), 1000, 0)
    assert (estimate.value, estimate.stderr) == (0.0, 0.0)


def test_mc_is_reproducible():
    f = RealFrame([[1, 0, 0], [9, 1, 0]])
    first = oracle.mc_parallelotope_volume(f, 5000, 123)
    second = oracle.mc_parallelotope_volume(f, 5000, 123)
    assert first == second


def test_mc_rejects_bad_arguments():
    f = RealFrame([[1, 0], [0, 1]])
    with pytest.raises(DomainError):
        oracle.mc_parallelotope_volume(f, 999, 0)
    with pytest.raises(DomainError):
        oracle.mc_parallelotope_volume(f, 1000, -1)


@pytest.mark.parametrize(
    "vectors",
    [
        [[1, 0, 0], [9, 1, 0]],
        [[1, 0, 0, 0], [4, 1, 0, 0], [4, 4, 1, 0]],
    ],
)
def test_mc_calibration(vectors):
    f = RealFrame(vectors)
    exact = gram_volume(f)
    covered = 0
    for seed in range(1000):
        estimate = oracle.mc_parallelotope_volume(f, 2000, seed)
        covered += abs(estimate.value - exact) <= 2 * estimate.stderr
    # A 2-sigma bracket holds about 95% of the time; an inflated error would cover nearly all.
    assert 920 <= covered <= 985


def test_mc_stderr_tracks_the_observed_spread():
    f = RealFrame([[1, 0, 0], [9, 1, 0]])
    estimates = [oracle.mc_parallelotope_volume(f, 2000, seed) for seed in range(200)]
    spread = np.std([e.value for e in estimates])
    mean_stderr = np.mean([e.stderr for e in estimates])
    assert mean_stderr == pytest.approx(spread, rel=0.2)


@pytest.mark.parametrize(
    "g, r, expected, tolerance",
    [
        (PLANE, 1.0, math.pi, 1e-7),
        (SPHERE, math.pi, 4 * math.pi, 1e-6),
        (HYPERBOLIC, 2.0, 2 * math.pi * (math.cosh(2) - 1), 1e-6),
    ],
)
def test_quadrature_disk_area(g, r, expected, tolerance):
    assert oracle.quadrature_disk_area(g, r, 10 ** 4) == pytest.approx(expected, abs=tolerance)


@pytest.mark.parametrize("g, r", [(SPHERE, 1.0), (SPHERE, 3.0), (HYPERBOLIC, 2.0)])
def test_quadrature_converges_at_second_order(g, r):
    exact = curved.disk_area(g, r)
    coarse = abs(oracle.quadrature_disk_area(g, r, 100) - exact)
    fine = abs(oracle.quadrature_disk_area(g, r, 200) - exact)
    assert coarse / fine >= 3.9
    assert oracle.quadrature_order(g, r, 100) >= 1.9


def test_quadrature_rejects_bad_arguments():
    with pytest.raises(DomainError):
        oracle.quadrature_disk_area(SPHERE, 1.0, 99)
    with pytest.raises(DomainError):
        oracle.quadrature_disk_area(SPHERE, 4.0, 1000)
    with pytest.raises(DomainError):
        oracle.quadrature_order(PLANE, 1.0, 100)


@pytest.mark.parametrize(
    "g, b, c, expected",
    [
        (SPHERE, math.pi / 2, math.pi / 2, math.pi / 2),
        (HYPERBOLIC, 2.0, 2.0, 3.342),
        (PLANE, 3.0, 4.0, 5.0),
    ],
)
def test_embedded_hypotenuse_examples(g, b, c, expected):
    assert oracle.embedded_hypotenuse(g, b, c) == pytest.approx(expected, abs=1e-3)


@pytest.mark.parametrize(
    "g, reach",
    [(SPHERE, 3.0), (Geometry.spherical(7.0), 3.0), (HYPERBOLIC, 5.0), (Geometry.hyperbolic(0.3), 5.0)],
)
def test_embedded_hypotenuse_matches_closed_form(g, reach, rng):
    for b, c in rng.uniform(0.05 * g.R, reach * g.R, size=(1000, 2)):
        closed = curved.right_hypotenuse(g, b, c)
        assert oracle.embedded_hypotenuse(g, b, c) == pytest.approx(closed, rel=1e-10)


def test_embedded_hypotenuse_rejects_long_spherical_legs():
    with pytest.raises(DomainError):
        oracle.embedded_hypotenuse(SPHERE, math.pi, 1.0)
