""" oracle.py -- Independent estimators used to check the closed forms: Monte Carlo
    parallelotope volumes, quadrature of disk areas and hypotenuses measured on
    embedded points.

    Language: Python 3.9

    Nothing here calls the formulas it checks; only frames, geometries and elementary
    functions are imported.
"""

from dataclasses import dataclass
import itertools
import logging
import math

import numpy as np

from pythagoras.func.curved import Geometry
from pythagoras.func.exterior import RealFrame
from pythagoras.utils.exceptions import DomainError
from pythagoras.utils.numeric import check_length

MIN_SAMPLES = 1000
MIN_STEPS = 100
CHUNK = 100_000
REFERENCE_FACTOR = 64

# numpy 2 renamed trapz to trapezoid.
_trapezoid = getattr(np, "trapezoid", None) or np.trapz


@dataclass(frozen=True)
class McEstimate(object):
    """Monte Carlo volume estimate.

    Attributes:
    ----------
    value: float
        Estimated m-volume.
    stderr: float
        Standard error box_volume * sqrt(p (1 - p) / samples), p the observed hit fraction.
    samples: int
        Number of sample points drawn.
    seed: int
        Generator seed.
    """

    value: float
    stderr: float
    samples: int
    seed: int


def _orthonormal_chart(rows: np.ndarray) -> np.ndarray:
    """Gram-Schmidt basis (one vector per row) of the span of rows, or None if degenerate."""
    basis = []
    scale = max(float(np.max(np.linalg.norm(rows, axis=1))), 1e-300)
    for v in rows:
        w = v.copy()
        # Two passes keep the basis orthogonal to working precision.
        for _ in range(2):
            for q in basis:
                w -= np.dot(q, w) * q
        norm = np.linalg.norm(w)
        if norm <= 1e-12 * scale:
            return None
        basis.append(w / norm)
    return np.array(basis)


def mc_parallelotope_volume(f: RealFrame, samples: int, seed: int) -> McEstimate:
    """Hit-or-miss estimate of the m-volume of the parallelotope spanned by a real frame.

    The generating vectors are written in an orthonormal chart of their span; points are
    drawn uniformly from the chart's bounding box of the 2^m corners, and a point is a
    hit when its coefficients in the frame all lie in [0, 1].

    Parameters
    ----------
    f: RealFrame
        Frame spanning the parallelotope.
    samples: int
        Number of points to draw, at least 1000.
    seed: int
        Non-negative seed for numpy's default generator.

    Returns
    ----------
    McEstimate
        Estimate, standard error, sample count and seed. Degenerate frames give
        exactly 0 with zero error.
    """
    samples, seed = int(samples), int(seed)
    if samples < MIN_SAMPLES:
        raise DomainError(f"Monte Carlo needs at least {MIN_SAMPLES} samples, got {samples}.")
    if seed < 0:
        raise DomainError(f"Seed must be non-negative, got {seed}.")
    chart = _orthonormal_chart(f.vectors)
    if chart is None:
        logging.debug("Degenerate frame; Monte Carlo volume is exactly zero.")
        return McEstimate(value=0.0, stderr=0.0, samples=samples, seed=seed)

    # Frame vectors in chart coordinates, one per column.
    C = chart @ f.matrix
    corners = np.array(
        [C @ np.array(bits) for bits in itertools.product((0.0, 1.0), repeat=f.m)]
    )
    low, high = corners.min(axis=0), corners.max(axis=0)
    box = float(np.prod(high - low))

    rng = np.random.default_rng(seed)
    hits = 0
    remaining = samples
    while remaining:
        size = min(CHUNK, remaining)
        points = low + (high - low) * rng.random((size, f.m))
        coefficients = np.linalg.solve(C, points.T)
        inside = np.all((coefficients >= 0.0) & (coefficients <= 1.0), axis=0)
        hits += int(np.count_nonzero(inside))
        remaining -= size

    fraction = hits / samples
    value = box * fraction
    stderr = box * math.sqrt(fraction * (1.0 - fraction) / samples)
    logging.debug(f"Monte Carlo volume {value:.6g} +/- {stderr:.2g} from {samples} samples.")
    return McEstimate(value=value, stderr=stderr, samples=samples, seed=seed)


def _circumference(g: Geometry, t: np.ndarray) -> np.ndarray:
    if g.is_spherical:
        return 2.0 * math.pi * g.R * np.sin(t / g.R)
    if g.is_hyperbolic:
        return 2.0 * math.pi * g.R * np.sinh(t / g.R)
    return 2.0 * math.pi * t


def quadrature_disk_area(g: Geometry, r: float, steps: int) -> float:
    """Disk area as the composite trapezoid integral of the geodesic circle's circumference.

    Parameters
    ----------
    g: Geometry
        Surface the disk lives on.
    r: float
        Radius, at most pi R on the sphere.
    steps: int
        Number of subintervals, at least 100.

    Returns
    ----------
    float
        Integral of the circumference from 0 to r.
    """
    r = check_length("r", r)
    steps = int(steps)
    if steps < MIN_STEPS:
        raise DomainError(f"Quadrature needs at least {MIN_STEPS} steps, got {steps}.")
    if g.is_spherical and r > math.pi * g.R:
        raise DomainError(f"Spherical disk radius {r} exceeds pi R={math.pi * g.R}.")
    t = np.linspace(0.0, r, steps + 1)
    return float(_trapezoid(_circumference(g, t), t))


def quadrature_order(g: Geometry, r: float, steps: int) -> float:
    """Observed convergence order log2(e(steps) / e(2 steps)) of quadrature_disk_area.

    Errors are measured against the same rule at REFERENCE_FACTOR times the steps.
    """
    if g.K == 0:
        raise DomainError("The Euclidean circumference is linear; the trapezoid rule is exact.")
    reference = quadrature_disk_area(g, r, REFERENCE_FACTOR * int(steps))
    coarse = abs(quadrature_disk_area(g, r, steps) - reference)
    fine = abs(quadrature_disk_area(g, r, 2 * int(steps)) - reference)
    if fine == 0 or coarse == 0:
        raise DomainError(f"Quadrature error vanished at r={r}; no order can be observed.")
    return math.log2(coarse / fine)


def embedded_hypotenuse(g: Geometry, b: float, c: float) -> float:
    """Hypotenuse of a right triangle measured between embedded vertices.

    The right angle sits at A = (R, 0, 0). B is reached along e_y and C along e_z, so
    the hypotenuse comes from the Euclidean (sphere) or Minkowski (hyperboloid) products
    of B and C alone.

    Parameters
    ----------
    g: Geometry
        Surface the triangle lives on.
    b: float
        Leg AC. Must be shorter than pi R on the sphere.
    c: float
        Leg AB. Must be shorter than pi R on the sphere.

    Returns
    ----------
    float
        Length of BC.
    """
    b = check_length("b", b)
    c = check_length("c", c)
    if g.K == 0:
        B = np.array([0.0, c])
        C = np.array([b, 0.0])
        return float(np.linalg.norm(B - C))
    R = g.R
    if g.is_spherical:
        if max(b, c) >= math.pi * R:
            raise DomainError(f"Spherical legs must be shorter than pi R={math.pi * R}.")
        B = R * np.array([math.cos(c / R), math.sin(c / R), 0.0])
        C = R * np.array([math.cos(b / R), 0.0, math.sin(b / R)])
        return R * math.atan2(float(np.linalg.norm(np.cross(B, C))), float(np.dot(B, C)))
    B = R * np.array([math.cosh(c / R), math.sinh(c / R), 0.0])
    C = R * np.array([math.cosh(b / R), 0.0, math.sinh(b / R)])
    d = B - C
    chord = math.sqrt(max(0.0, -(d[0] * d[0] - d[1] * d[1] - d[2] * d[2])))
    return 2.0 * R * math.asinh(chord / (2.0 * R))
