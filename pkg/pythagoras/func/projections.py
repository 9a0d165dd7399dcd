""" projections.py -- Projection-volume theorems: real m-volumes, the binomial corollary,
    complex lines and complex subspaces, projected polygon areas.

    Language: Python 3.9
"""

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple
import logging
import math

import numpy as np

from pythagoras.func.exterior import (
    ComplexFrame,
    IdentityCheck,
    MultiIndex,
    RealFrame,
    complex_gram_2m_volume,
    gram_volume,
    minor,
    multiindices,
)
from pythagoras.utils.exceptions import DomainError
from pythagoras.utils.numeric import relative_residual

DEGENERATE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ProjectionReport(object):
    """Volume of a region and of its projections onto the coordinate subspaces C_I.

    Attributes:
    ----------
    theorem: str
        Which identity the report checks: "real", "complex-line", "complex-subspace" or
        "region".
    n: int
        Ambient dimension.
    m: int
        Multi-index length.
    total: float
        Volume of the region.
    per_index: Dict[MultiIndex, float]
        Projected volume per multi-index, in lexicographic order.
    identity_lhs: float
        total^2 for the real theorem, total for the complex ones.
    identity_rhs: float
        Sum of per_index^2 for the real theorem, sum of per_index for the complex ones.
    residual: float
        |lhs - rhs| / max(lhs, 1).
    """

    theorem: str
    n: int
    m: int
    total: float
    per_index: Dict[MultiIndex, float]
    identity_lhs: float
    identity_rhs: float
    residual: float

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "m": self.m,
            "total": self.total,
            "per_index": {I.label: v for I, v in self.per_index.items()},
            "identity_lhs": self.identity_lhs,
            "identity_rhs": self.identity_rhs,
            "residual": self.residual,
        }


def _report(theorem: str, n: int, m: int, total: float, per_index: dict, quadratic: bool):
    if quadratic:
        lhs = total * total
        rhs = float(sum(v * v for v in per_index.values()))
    else:
        lhs = total
        rhs = float(sum(per_index.values()))
    residual = relative_residual(lhs, rhs)
    logging.debug(f"{theorem} projection report n={n}, m={m}: residual {residual:.3e}.")
    return ProjectionReport(
        theorem=theorem,
        n=n,
        m=m,
        total=total,
        per_index=per_index,
        identity_lhs=lhs,
        identity_rhs=rhs,
        residual=residual,
    )


def real_projection_volumes(f: RealFrame) -> ProjectionReport:
    """m-volume of a real parallelotope and its projections: V^2 = sum V_I^2.

    Parameters
    ----------
    f: RealFrame
        Frame spanning the parallelotope.

    Returns
    ----------
    ProjectionReport
        total = gram_volume(f), per_index[I] = |det(M_I)|.
    """
    per_index = {I: abs(minor(f, I)) for I in multiindices(f.n, f.m)}
    return _report("real", f.n, f.m, gram_volume(f), per_index, quadratic=True)


def corollary_residual(f: RealFrame, m: int) -> IdentityCheck:
    """Projections of a p-volume onto m-dimensional coordinate subspaces, p <= m <= n.

    V^2 = C(n - p, n - m)^-1 * sum over I in I_m of V_I^2, with V_I the p-volume of the
    projection onto C_I.

    Parameters
    ----------
    f: RealFrame
        Frame of p vectors spanning the region.
    m: int
        Dimension of the coordinate subspaces.

    Returns
    ----------
    IdentityCheck
        lhs = gram_volume(f)^2, rhs the weighted sum of squared projections.
    """
    n, p, m = f.n, f.m, int(m)
    if not p <= m <= n:
        raise DomainError(f"Corollary needs p <= m <= n, got p={p}, m={m}, n={n}.")
    projected = [
        gram_volume(RealFrame(f.vectors[:, I.rows])) ** 2 for I in multiindices(n, m)
    ]
    lhs = gram_volume(f) ** 2
    rhs = math.fsum(projected) / math.comb(n - p, n - m)
    return IdentityCheck(lhs=lhs, rhs=rhs, residual=relative_residual(lhs, rhs))


def complex_line_areas(v: Sequence[complex]) -> ProjectionReport:
    """Area of the square on v in the complex line Cv and its projections onto Ce_k.

    A = A_1 + ... + A_n, linear in the areas.

    Parameters
    ----------
    v: Sequence[complex]
        Nonzero complex n-vector.

    Returns
    ----------
    ProjectionReport
        total = ||v||^2, per_index[(k,)] = |v_k|^2.
    """
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1 or v.size == 0 or not np.all(np.isfinite(v)):
        raise DomainError("Complex line needs a one-dimensional vector of finite entries.")
    if not np.any(v):
        raise DomainError("The zero vector spans no complex line.")
    per_index = {MultiIndex((k,)): float(abs(z) ** 2) for k, z in enumerate(v, start=1)}
    total = float(np.real(np.vdot(v, v)))
    return _report("complex-line", v.size, 1, total, per_index, quadratic=False)


def complex_subspace_volumes(f: ComplexFrame) -> ProjectionReport:
    """2m-volume of a complex parallelotope and its projections: V = sum V_I.

    Parameters
    ----------
    f: ComplexFrame
        Frame spanning the complex subspace.

    Returns
    ----------
    ProjectionReport
        total = det(M^dagger M), per_index[I] = |det(M_I)|^2.
    """
    per_index = {I: abs(minor(f, I)) ** 2 for I in multiindices(f.n, f.m)}
    return _report(
        "complex-subspace", f.n, f.m, complex_gram_2m_volume(f), per_index, quadratic=False
    )


def realify_vector(v: Sequence[complex]) -> np.ndarray:
    """(z_1, ..., z_n) -> (x_1, y_1, ..., x_n, y_n) with z_k = x_k + i y_k."""
    v = np.asarray(v, dtype=complex)
    return np.column_stack((v.real, v.imag)).ravel()


def realify_frame(f: ComplexFrame) -> RealFrame:
    """Real frame v_1, iv_1, ..., v_m, iv_m in R^2n spanning the same real subspace."""
    vectors = []
    for v in f.vectors:
        vectors.append(realify_vector(v))
        vectors.append(realify_vector(1j * v))
    return RealFrame(vectors)


def square_frame(a: float, b: float, c: float, d: float) -> RealFrame:
    """Square on v = (a, b, c, d) and w = (-b, a, -d, c) in R^4, the realified (v, iv)."""
    return RealFrame([[a, b, c, d], [-b, a, -d, c]])


def _polygon(region: Sequence[Tuple[float, float]]) -> np.ndarray:
    polygon = np.asarray(region, dtype=float)
    if polygon.ndim != 2 or polygon.shape[1] != 2 or polygon.shape[0] < 3:
        raise DomainError(f"Region must be a polygon of at least 3 (s, t) vertices, got {polygon.shape}.")
    if not np.all(np.isfinite(polygon)):
        raise DomainError("Polygon vertices must be finite.")
    return polygon


def shoelace_area(points: np.ndarray) -> float:
    """Area of a simple polygon from its ordered 2D vertices."""
    x, y = points[:, 0], points[:, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y)))


def _check_plane(plane: RealFrame):
    if plane.m != 2:
        raise DomainError(f"A plane needs exactly 2 spanning vectors, got {plane.m}.")
    norms = np.linalg.norm(plane.vectors, axis=1)
    if gram_volume(plane) <= DEGENERATE_TOLERANCE * float(np.prod(norms)) or not np.all(norms):
        raise DomainError("Plane vectors are linearly dependent.")


def region_projection_area(
    plane: RealFrame, region: Sequence[Tuple[float, float]], I: MultiIndex
) -> float:
    """Area of a planar polygon's projection onto C_I.

    The polygon is given in the coordinates (s, t) of the plane's frame, i.e. the point
    s v_1 + t v_2. Vertices are mapped into R^n, coordinates outside I are dropped and
    the shoelace formula is applied in an orthonormal basis of the projected plane.

    Parameters
    ----------
    plane: RealFrame
        Two independent vectors spanning the plane.
    region: Sequence[Tuple[float, float]]
        Ordered vertices of a simple polygon in plane coordinates.
    I: MultiIndex
        Coordinate subspace to project onto.

    Returns
    ----------
    float
        Projected area; zero when the projection collapses the plane.
    """
    _check_plane(plane)
    polygon = _polygon(region)
    if I.indices[-1] > plane.n:
        raise DomainError(f"Multi-index {I} exceeds the ambient dimension n={plane.n}.")
    image = plane.matrix[I.rows, :]
    singular = np.linalg.svd(image, compute_uv=False)
    if len(singular) < 2 or singular[1] <= DEGENERATE_TOLERANCE * singular[0]:
        return 0.0
    basis, _ = np.linalg.qr(image)
    coords = (polygon @ image.T) @ basis
    return shoelace_area(coords)


def region_projection_report(
    plane: RealFrame, region: Sequence[Tuple[float, float]]
) -> ProjectionReport:
    """Area of a planar polygon and its projections onto every coordinate plane C_I.

    Parameters
    ----------
    plane: RealFrame
        Two independent vectors spanning the plane.
    region: Sequence[Tuple[float, float]]
        Ordered vertices of a simple polygon in plane coordinates.

    Returns
    ----------
    ProjectionReport
        total = polygon area in the plane, per_index[I] = projected area.
    """
    _check_plane(plane)
    total = shoelace_area(_polygon(region)) * gram_volume(plane)
    per_index = {I: region_projection_area(plane, region, I) for I in multiindices(plane.n, 2)}
    return _report("region", plane.n, 2, total, per_index, quadratic=True)
