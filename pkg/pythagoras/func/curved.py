""" curved.py -- Constant-curvature surfaces: spherical, Euclidean and hyperbolic right and
    proper triangles, disk areas and geodesic distances.

    Language: Python 3.9

    Spherical points live on the sphere of radius R centred at the origin. Hyperbolic
    points live on the upper sheet x0^2 - x1^2 - x2^2 = R^2, x0 > 0. Euclidean points
    live in the plane z = 0 (any 3-vector is accepted).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple
import logging
import math

import numpy as np

from pythagoras import config
from pythagoras.utils.exceptions import DomainError, NoProperTriangleError
from pythagoras.utils.numeric import check_length, clamp_unit

POINT_TOLERANCE = 1e-12
SIDE_TOLERANCE = 1e-9
MINKOWSKI = np.array([1.0, -1.0, -1.0])


class GeometryKind(Enum):
    """Curvature class of a surface."""

    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"

    @classmethod
    def parse(cls, name: str) -> "GeometryKind":
        aliases = {"sphere": cls.SPHERICAL, "plane": cls.EUCLIDEAN, "flat": cls.EUCLIDEAN}
        try:
            return aliases.get(name.lower()) or cls(name.lower())
        except ValueError as e:
            raise DomainError(f"Unknown geometry '{name}'.") from e


@dataclass(frozen=True)
class Geometry(object):
    """Surface of constant curvature K.

    Attributes:
    ----------
    kind: GeometryKind
        Spherical for K > 0, Euclidean for K = 0, hyperbolic for K < 0.
    K: float
        Gaussian curvature, 1/length^2.
    """

    kind: GeometryKind
    K: float

    def __post_init__(self):
        K = float(self.K)
        object.__setattr__(self, "K", K)
        if not math.isfinite(K):
            raise DomainError(f"Curvature must be finite, got {K!r}.")
        expected = (
            GeometryKind.SPHERICAL
            if K > 0
            else GeometryKind.HYPERBOLIC
            if K < 0
            else GeometryKind.EUCLIDEAN
        )
        if self.kind is not expected:
            raise DomainError(f"Curvature K={K} does not match geometry '{self.kind.value}'.")

    @classmethod
    def spherical(cls, R: float) -> "Geometry":
        return cls(GeometryKind.SPHERICAL, 1.0 / _radius(R) ** 2)

    @classmethod
    def hyperbolic(cls, R: float) -> "Geometry":
        return cls(GeometryKind.HYPERBOLIC, -1.0 / _radius(R) ** 2)

    @classmethod
    def euclidean(cls) -> "Geometry":
        return cls(GeometryKind.EUCLIDEAN, 0.0)

    @classmethod
    def from_curvature(cls, K: float) -> "Geometry":
        K = float(K)
        if K > 0:
            return cls(GeometryKind.SPHERICAL, K)
        if K < 0:
            return cls(GeometryKind.HYPERBOLIC, K)
        return cls.euclidean()

    @classmethod
    def from_kind(cls, kind: GeometryKind, R: float = 1.0) -> "Geometry":
        if kind is GeometryKind.SPHERICAL:
            return cls.spherical(R)
        if kind is GeometryKind.HYPERBOLIC:
            return cls.hyperbolic(R)
        return cls.euclidean()

    @property
    def R(self) -> float:
        """(Pseudo-)radius 1/sqrt(|K|). Undefined for Euclidean geometry."""
        if self.K == 0:
            raise DomainError("Euclidean geometry has no radius.")
        return 1.0 / math.sqrt(abs(self.K))

    @property
    def is_spherical(self) -> bool:
        return self.kind is GeometryKind.SPHERICAL

    @property
    def is_hyperbolic(self) -> bool:
        return self.kind is GeometryKind.HYPERBOLIC

    def __str__(self) -> str:
        if self.K == 0:
            return "euclidean"
        return f"{self.kind.value} (R={self.R:g})"


def _radius(R: float) -> float:
    R = float(R)
    if not math.isfinite(R) or R <= 0:
        raise DomainError(f"Radius must be positive and finite, got {R!r}.")
    return R


@dataclass(frozen=True)
class SurfacePoint(object):
    """Point of a constant-curvature surface, given by its embedding 3-vector."""

    coordinates: Tuple[float, float, float]

    def __post_init__(self):
        coords = tuple(float(x) for x in self.coordinates)
        if len(coords) != 3 or not all(math.isfinite(x) for x in coords):
            raise DomainError(f"Surface points need three finite coordinates, got {coords}.")
        object.__setattr__(self, "coordinates", coords)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coordinates)


@dataclass(frozen=True)
class GeodesicTriangle(object):
    """Triangle ABC on a constant-curvature surface.

    Attributes:
    ----------
    geometry: Geometry
        Surface the triangle lives on.
    vertices: Tuple[SurfacePoint, SurfacePoint, SurfacePoint]
        A (the distinguished vertex), B and C.
    a: float
        Side BC, opposite A.
    b: float
        Side CA, opposite B.
    c: float
        Side AB, opposite C.
    """

    geometry: Geometry
    vertices: Tuple[SurfacePoint, SurfacePoint, SurfacePoint]
    a: float
    b: float
    c: float

    def __post_init__(self):
        g = self.geometry
        sides = tuple(float(s) for s in (self.a, self.b, self.c))
        if len(self.vertices) != 3:
            raise DomainError(f"A triangle needs three vertices, got {len(self.vertices)}.")
        if not all(math.isfinite(s) and s >= 0 for s in sides):
            raise DomainError(f"Triangle sides must be finite and non-negative, got {sides}.")
        if g.is_spherical and max(sides) >= math.pi * g.R:
            raise DomainError(f"Spherical triangle sides must be shorter than pi R={math.pi * g.R}.")
        A, B, C = self.vertices
        scale = g.R if g.K else 1.0
        for name, side, p, q in zip("abc", sides, (B, C, A), (C, A, B)):
            measured = geodesic_distance(g, p, q)
            if abs(side - measured) > SIDE_TOLERANCE * max(measured, scale):
                raise DomainError(
                    f"Side {name}={side} does not match its vertices, which are {measured} apart."
                )
        object.__setattr__(self, "a", sides[0])
        object.__setattr__(self, "b", sides[1])
        object.__setattr__(self, "c", sides[2])

    @classmethod
    def from_vertices(
        cls, g: Geometry, A: SurfacePoint, B: SurfacePoint, C: SurfacePoint
    ) -> "GeodesicTriangle":
        """Measure the sides of ABC with geodesic_distance."""
        return cls(
            geometry=g,
            vertices=(A, B, C),
            a=geodesic_distance(g, B, C),
            b=geodesic_distance(g, C, A),
            c=geodesic_distance(g, A, B),
        )


def _minkowski(p: np.ndarray, q: np.ndarray) -> float:
    return float(np.sum(MINKOWSKI * p * q))


def check_point(g: Geometry, p: SurfacePoint) -> np.ndarray:
    """Confirm p lies on the surface of g and return its coordinates.

    Parameters
    ----------
    g: Geometry
        Surface to test against.
    p: SurfacePoint
        Point to test.

    Returns
    ----------
    np.ndarray
        Embedding coordinates of p.
    """
    x = p.array
    if g.is_spherical:
        R = g.R
        if abs(np.linalg.norm(x) - R) > POINT_TOLERANCE * R:
            raise DomainError(f"Point {p.coordinates} is not on the sphere of radius {R}.")
    elif g.is_hyperbolic:
        R = g.R
        # Rounding in x0^2 - x1^2 - x2^2 scales with the Euclidean size of x, not R^2.
        scale = max(R * R, float(np.dot(x, x)))
        if x[0] <= 0 or abs(_minkowski(x, x) - R * R) > POINT_TOLERANCE * scale:
            raise DomainError(
                f"Point {p.coordinates} is not on the hyperboloid sheet of radius {R}."
            )
    return x


def surface_point(g: Geometry, coordinates: Sequence[float]) -> SurfacePoint:
    """Build a SurfacePoint from raw embedding coordinates, checked against g."""
    p = SurfacePoint(tuple(coordinates))
    check_point(g, p)
    return p


def geodesic_distance(g: Geometry, p: SurfacePoint, q: SurfacePoint) -> float:
    """Length of the shortest geodesic between p and q.

    Spherical: R arccos(<p,q>/R^2). Hyperbolic: R arccosh(<p,q>_M/R^2). Euclidean: ||p - q||.
    Both curved cases are evaluated in well-conditioned forms (atan2 of the cross and dot
    products; 2R asinh of half the Minkowski chord) that equal the arc-cosine formulas.

    Parameters
    ----------
    g: Geometry
        Surface both points lie on.
    p: SurfacePoint
        First point.
    q: SurfacePoint
        Second point.

    Returns
    ----------
    float
        Geodesic distance, symmetric in p and q, in [0, pi R] on the sphere.
    """
    x = check_point(g, p)
    y = check_point(g, q)
    if g.is_spherical:
        cross = np.linalg.norm(np.cross(x, y))
        return g.R * math.atan2(cross, float(np.dot(x, y)))
    if g.is_hyperbolic:
        R = g.R
        d = x - y
        # The chord is spacelike: -<d,d>_M = 2(<x,y>_M - R^2) >= 0.
        chord = math.sqrt(max(0.0, -_minkowski(d, d)))
        return 2.0 * R * math.asinh(chord / (2.0 * R))
    return float(np.linalg.norm(x - y))


def _check_leg(g: Geometry, name: str, value: float, strict_spherical: bool = True) -> float:
    value = check_length(name, value)
    if g.is_spherical and strict_spherical and value >= math.pi * g.R:
        raise DomainError(f"Spherical leg '{name}'={value} must be shorter than pi R={math.pi * g.R}.")
    return value


def right_hypotenuse(g: Geometry, b: float, c: float, second_root: bool = False) -> float:
    """Hypotenuse of a right triangle with legs b and c.

    Spherical: cos(a/R) = cos(b/R) cos(c/R). Hyperbolic: cosh(a/R) = cosh(b/R) cosh(c/R).
    Euclidean: a^2 = b^2 + c^2. The curved laws are solved in half-angle form,
    sin^2(a/2R) = sin^2(b/2R) + cos(b/R) sin^2(c/2R) and the sinh/cosh analogue.

    Parameters
    ----------
    g: Geometry
        Surface the triangle lives on.
    b: float
        First leg. Must be shorter than pi R on the sphere.
    c: float
        Second leg. Must be shorter than pi R on the sphere.
    second_root: bool
        Return the other spherical solution 2 pi R - a of cos(a/R) = cos(b/R) cos(c/R).
        (Optional) Defaults to: False

    Returns
    ----------
    float
        Hypotenuse length.
    """
    b = _check_leg(g, "b", b)
    c = _check_leg(g, "c", c)
    if second_root and not g.is_spherical:
        raise DomainError(f"Only spherical geometry has a second hypotenuse root, not {g}.")
    if g.is_spherical:
        R = g.R
        h = math.sin(b / (2 * R)) ** 2 + math.cos(b / R) * math.sin(c / (2 * R)) ** 2
        h = min(1.0, max(0.0, h))
        a = 2.0 * R * math.atan2(math.sqrt(h), math.sqrt(1.0 - h))
        return 2.0 * math.pi * R - a if second_root else a
    if g.is_hyperbolic:
        R = g.R
        h = math.sinh(b / (2 * R)) ** 2 + math.cosh(b / R) * math.sinh(c / (2 * R)) ** 2
        return 2.0 * R * math.asinh(math.sqrt(h))
    return math.hypot(b, c)


def disk_area(g: Geometry, r: float) -> float:
    """Area of the geodesic disk of radius r.

    Spherical 2 pi R^2 (1 - cos(r/R)), hyperbolic 2 pi R^2 (cosh(r/R) - 1), Euclidean pi r^2.

    Parameters
    ----------
    g: Geometry
        Surface the disk lives on.
    r: float
        Radius, at most pi R on the sphere.

    Returns
    ----------
    float
        Disk area.
    """
    r = check_length("r", r)
    if g.is_spherical:
        R = g.R
        if r > math.pi * R * (1 + config.CLAMP_TOLERANCE):
            raise DomainError(f"Spherical disk radius {r} exceeds pi R={math.pi * R}.")
        return 4.0 * math.pi * R * R * math.sin(min(r, math.pi * R) / (2 * R)) ** 2
    if g.is_hyperbolic:
        R = g.R
        return 4.0 * math.pi * R * R * math.sinh(r / (2 * R)) ** 2
    return math.pi * r * r


def unified_hypotenuse_area(g: Geometry, A1: float, A2: float) -> float:
    """Area of the disk on the hypotenuse from the disks on the legs: A1 + A2 - (K/2pi) A1 A2.

    Parameters
    ----------
    g: Geometry
        Surface the triangle lives on.
    A1: float
        Area of the disk with the first leg as radius.
    A2: float
        Area of the disk with the second leg as radius.

    Returns
    ----------
    float
        Area of the disk with the hypotenuse as radius.
    """
    A1 = check_length("A1", A1)
    A2 = check_length("A2", A2)
    if g.is_spherical:
        whole = 4.0 * math.pi * g.R ** 2
        if max(A1, A2) > whole * (1 + config.CLAMP_TOLERANCE):
            raise DomainError(f"Spherical disk areas cannot exceed the sphere's area {whole}.")
    return A1 + A2 - g.K / (2.0 * math.pi) * A1 * A2


def proper_hypotenuse(g: Geometry, b: float, c: float) -> float:
    """Hypotenuse of a proper triangle (one angle equal to the sum of the others).

    Spherical 1 + cos(a/R) = cos(b/R) + cos(c/R); hyperbolic with cosh; Euclidean a^2 = b^2 + c^2.
    In half-angle form: sin^2(a/2R) = sin^2(b/2R) + sin^2(c/2R), and the sinh analogue.

    Parameters
    ----------
    g: Geometry
        Surface the triangle lives on.
    b: float
        First leg.
    c: float
        Second leg.

    Returns
    ----------
    float
        Hypotenuse length.
    """
    b = check_length("b", b)
    c = check_length("c", c)
    if g.is_spherical:
        R = g.R
        h = math.sin(b / (2 * R)) ** 2 + math.sin(c / (2 * R)) ** 2
        if h > 1.0 + config.CLAMP_TOLERANCE or b > math.pi * R or c > math.pi * R:
            raise NoProperTriangleError(
                f"No spherical proper triangle with legs b={b}, c={c} on radius R={R}: "
                f"cos(b/R) + cos(c/R) - 1 = {1.0 - 2.0 * h:.6g} is below -1."
            )
        h = min(1.0, h)
        return 2.0 * R * math.atan2(math.sqrt(h), math.sqrt(1.0 - h))
    if g.is_hyperbolic:
        R = g.R
        h = math.sinh(b / (2 * R)) ** 2 + math.sinh(c / (2 * R)) ** 2
        return 2.0 * R * math.asinh(math.sqrt(h))
    return math.hypot(b, c)


def _origin(g: Geometry) -> np.ndarray:
    if g.K == 0:
        return np.zeros(3)
    return np.array([g.R, 0.0, 0.0])


def _walk(g: Geometry, start: np.ndarray, direction: np.ndarray, t: float) -> np.ndarray:
    """Follow the geodesic from start along a unit tangent direction for length t."""
    if g.is_spherical:
        R = g.R
        return math.cos(t / R) * start + R * math.sin(t / R) * direction
    if g.is_hyperbolic:
        R = g.R
        return math.cosh(t / R) * start + R * math.sinh(t / R) * direction
    return start + t * direction


def _build_from_corner(g: Geometry, b: float, c: float, alpha: float) -> GeodesicTriangle:
    """Triangle with sides c = AB and b = AC meeting at angle alpha at A."""
    A = _origin(g)
    u = np.array([0.0, 1.0, 0.0])
    if g.K == 0:
        # AC runs along x, so legs (3, 4) sit at (3, 0) and (0, 4).
        w = np.array([1.0, 0.0, 0.0])
    else:
        # At A = (R, 0, 0) the tangent plane is spanned by e_y and e_z in both models.
        w = np.array([0.0, 0.0, 1.0])
    ab, ac = u, math.cos(alpha) * u + math.sin(alpha) * w
    B = _walk(g, A, ab, c)
    C = _walk(g, A, ac, b)
    return GeodesicTriangle.from_vertices(
        g, SurfacePoint(tuple(A)), SurfacePoint(tuple(B)), SurfacePoint(tuple(C))
    )


def build_right_triangle(g: Geometry, b: float, c: float) -> GeodesicTriangle:
    """Embed a right triangle with legs b, c and the right angle at vertex A.

    Parameters
    ----------
    g: Geometry
        Surface to build on.
    b: float
        Leg CA.
    c: float
        Leg AB.

    Returns
    ----------
    GeodesicTriangle
        Triangle whose sides are measured from the embedded vertices.
    """
    b = _check_leg(g, "b", b)
    c = _check_leg(g, "c", c)
    logging.debug(f"Building right triangle on {g} with legs b={b}, c={c}.")
    return _build_from_corner(g, b, c, math.pi / 2)


def build_proper_triangle(g: Geometry, b: float, c: float) -> GeodesicTriangle:
    """Embed a proper triangle with legs b, c and hypotenuse proper_hypotenuse(g, b, c).

    The corner angle at A follows from the three side lengths.

    Parameters
    ----------
    g: Geometry
        Surface to build on.
    b: float
        Leg CA.
    c: float
        Leg AB.

    Returns
    ----------
    GeodesicTriangle
        Triangle whose sides are measured from the embedded vertices.
    """
    a = proper_hypotenuse(g, b, c)
    if b == 0 or c == 0:
        raise DomainError("Proper triangles need two positive legs.")
    if g.is_spherical:
        R = g.R
        if b >= math.pi * R or c >= math.pi * R:
            raise DomainError(f"Spherical legs must be shorter than pi R={math.pi * R}.")
        cos_alpha = (math.cos(a / R) - math.cos(b / R) * math.cos(c / R)) / (
            math.sin(b / R) * math.sin(c / R)
        )
    elif g.is_hyperbolic:
        R = g.R
        cos_alpha = (math.cosh(b / R) * math.cosh(c / R) - math.cosh(a / R)) / (
            math.sinh(b / R) * math.sinh(c / R)
        )
    else:
        cos_alpha = 0.0
    alpha = math.acos(clamp_unit(cos_alpha, tol=1e-9))
    logging.debug(f"Building proper triangle on {g} with legs b={b}, c={c}, corner {alpha}.")
    return _build_from_corner(g, b, c, alpha)


def _tangent(g: Geometry, p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Initial direction of the geodesic from p towards q."""
    if g.is_spherical:
        return q - (np.dot(p, q) / g.R ** 2) * p
    if g.is_hyperbolic:
        return q - (_minkowski(p, q) / g.R ** 2) * p
    return q - p


def _angle(g: Geometry, u: np.ndarray, w: np.ndarray) -> float:
    if g.is_hyperbolic:
        # Tangent vectors are spacelike; -<.,.>_M is positive definite on them.
        uw, uu, ww = -_minkowski(u, w), -_minkowski(u, u), -_minkowski(w, w)
    else:
        uw, uu, ww = float(np.dot(u, w)), float(np.dot(u, u)), float(np.dot(w, w))
    return math.acos(clamp_unit(uw / math.sqrt(uu * ww), tol=1e-9))


def triangle_angles(t: GeodesicTriangle) -> Tuple[float, float, float]:
    """Interior angles (alpha, beta, gamma) at A, B, C from the geodesic tangent vectors.

    Parameters
    ----------
    t: GeodesicTriangle
        Nondegenerate triangle.

    Returns
    ----------
    Tuple[float, float, float]
        Angles in radians at A, B and C.
    """
    g = t.geometry
    if min(t.a, t.b, t.c) <= 0:
        raise DomainError(f"Degenerate triangle with sides {(t.a, t.b, t.c)}.")
    A, B, C = (check_point(g, v) for v in t.vertices)
    alpha = _angle(g, _tangent(g, A, B), _tangent(g, A, C))
    beta = _angle(g, _tangent(g, B, C), _tangent(g, B, A))
    gamma = _angle(g, _tangent(g, C, A), _tangent(g, C, B))
    return alpha, beta, gamma


def latlon_point(latitude: float, longitude: float, R: float) -> SurfacePoint:
    """Embed a latitude/longitude pair (degrees) on the sphere of radius R.

    Parameters
    ----------
    latitude: float
        Degrees north, in [-90, 90].
    longitude: float
        Degrees east, in [-180, 180].
    R: float
        Sphere radius.

    Returns
    ----------
    SurfacePoint
        (R cos(lat) cos(lon), R cos(lat) sin(lon), R sin(lat)).
    """
    latitude, longitude, R = float(latitude), float(longitude), _radius(R)
    if not -90.0 <= latitude <= 90.0:
        raise DomainError(f"Latitude must lie in [-90, 90], got {latitude}.")
    if not -180.0 <= longitude <= 180.0:
        raise DomainError(f"Longitude must lie in [-180, 180], got {longitude}.")
    phi, lam = math.radians(latitude), math.radians(longitude)
    return SurfacePoint(
        (R * math.cos(phi) * math.cos(lam), R * math.cos(phi) * math.sin(lam), R * math.sin(phi))
    )
