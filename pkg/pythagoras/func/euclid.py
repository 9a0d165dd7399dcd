""" euclid.py -- Classical plane results: hypotenuse, law of cosines, triples, similar figures.

    Language: Python 3.9
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence
import logging
import math

import numpy as np

from pythagoras.func.exterior import IdentityCheck
from pythagoras.utils.exceptions import DomainError
from pythagoras.utils.numeric import check_length, relative_residual


@dataclass(frozen=True, order=True)
class Triple(object):
    """Pythagorean triple m1^2 + m2^2 = m3^2 with m1 <= m2 < m3.

    Attributes:
    ----------
    m1: int
        Shorter leg.
    m2: int
        Longer leg.
    m3: int
        Hypotenuse.
    """

    m1: int
    m2: int
    m3: int

    def __post_init__(self):
        if not 0 < self.m1 <= self.m2 < self.m3:
            raise DomainError(f"Triple {self.as_tuple()} is not ordered m1 <= m2 < m3.")
        if self.m1 * self.m1 + self.m2 * self.m2 != self.m3 * self.m3:
            raise DomainError(f"Triple {self.as_tuple()} fails m1^2 + m2^2 = m3^2.")

    def as_tuple(self) -> tuple:
        return (self.m1, self.m2, self.m3)


def pythagoras_hypotenuse(b: float, c: float) -> float:
    """Hypotenuse a = sqrt(b^2 + c^2) of a Euclidean right triangle.

    Parameters
    ----------
    b: float
        First leg.
    c: float
        Second leg.

    Returns
    ----------
    float
        Hypotenuse length, never shorter than either leg.
    """
    b = check_length("b", b)
    c = check_length("c", c)
    return math.hypot(b, c)


def law_of_cosines(b: float, c: float, theta: float) -> float:
    """Third side of a triangle with sides b, c meeting at angle theta (radians).

    Parameters
    ----------
    b: float
        First side.
    c: float
        Second side.
    theta: float
        Included angle in [0, pi].

    Returns
    ----------
    float
        sqrt(b^2 + c^2 - 2bc cos(theta)).
    """
    b = check_length("b", b)
    c = check_length("c", c)
    theta = float(theta)
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"Angle theta must lie in [0, pi], got {theta!r}.")
    # Rounding can push b = c, theta = 0 slightly below zero.
    return math.sqrt(max(0.0, b * b + c * c - 2.0 * b * c * math.cos(theta)))


def pythagorean_triples(limit: int) -> List[Triple]:
    """Every Pythagorean triple with hypotenuse at most limit, primitive or not.

    Exhaustive scan over leg pairs m1 <= m2; the hypotenuse candidate is the integer
    square root, accepted only when the identity holds exactly.

    Parameters
    ----------
    limit: int
        Largest hypotenuse to include. Zero yields an empty list.

    Returns
    ----------
    List[Triple]
        Triples sorted lexicographically, without duplicates.
    """
    limit = int(limit)
    if limit < 0:
        raise DomainError(f"Triple limit must be non-negative, got {limit}.")
    triples = []
    for m1 in range(1, limit + 1):
        for m2 in range(m1, limit + 1):
            square = m1 * m1 + m2 * m2
            m3 = math.isqrt(square)
            if m3 > limit:
                break
            if m3 * m3 == square:
                triples.append(Triple(m1, m2, m3))
    logging.debug(f"Found {len(triples)} Pythagorean triples with hypotenuse <= {limit}.")
    return sorted(triples)


def similar_figure_areas(kappa: float, b: float, c: float) -> IdentityCheck:
    """Areas of similar figures of shape constant kappa built on the three sides.

    A figure with linear size s and shape constant kappa has area kappa * s^2, so the
    figure on the hypotenuse equals the sum of the figures on the legs.

    Parameters
    ----------
    kappa: float
        Positive shape constant (1 for squares, pi for disks of radius s, ...).
    b: float
        First leg.
    c: float
        Second leg.

    Returns
    ----------
    IdentityCheck
        lhs = kappa * a^2, rhs = kappa * b^2 + kappa * c^2.
    """
    kappa = float(kappa)
    if not math.isfinite(kappa) or kappa <= 0:
        raise DomainError(f"Shape constant kappa must be positive, got {kappa!r}.")
    a = pythagoras_hypotenuse(b, c)
    lhs = kappa * a * a
    rhs = kappa * b * b + kappa * c * c
    return IdentityCheck(lhs=lhs, rhs=rhs, residual=relative_residual(lhs, rhs))


def norm_decomposition(
    v: Sequence[complex], basis: Optional[Sequence[Sequence[complex]]] = None
) -> IdentityCheck:
    """Squared norm of v against the sum of its squared components in an orthogonal basis.

    Parameters
    ----------
    v: Sequence[complex]
        Real or complex n-vector.
    basis: Sequence[Sequence[complex]]
        n mutually orthogonal nonzero vectors. The standard basis is used if None.
        (Optional) Defaults to: None

    Returns
    ----------
    IdentityCheck
        lhs = ||v||^2, rhs = sum of ||v_k||^2 for the components v_k of v.
    """
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1 or not np.all(np.isfinite(v)):
        raise DomainError("Vector must be one-dimensional with finite entries.")
    n = v.shape[0]
    if basis is None:
        basis = np.eye(n, dtype=complex)
    basis = np.asarray(basis, dtype=complex)
    if basis.shape != (n, n):
        raise DomainError(f"Basis must hold {n} vectors of length {n}, got {basis.shape}.")
    gram = basis.conj() @ basis.T
    scale = np.real(np.diag(gram))
    if np.any(scale <= 0):
        raise DomainError("Basis vectors must be nonzero.")
    off_diagonal = gram - np.diag(np.diag(gram))
    if np.max(np.abs(off_diagonal)) > 1e-12 * np.max(scale):
        raise DomainError("Basis vectors are not mutually orthogonal.")
    # ||v_k||^2 = |<e_k, v>|^2 / ||e_k||^2 for the projection of v on e_k.
    components = np.abs(basis.conj() @ v) ** 2 / scale
    lhs = float(np.real(np.vdot(v, v)))
    rhs = float(np.sum(components))
    return IdentityCheck(lhs=lhs, rhs=rhs, residual=relative_residual(lhs, rhs))


def euclidean_distance(p: Sequence[complex], q: Sequence[complex]) -> float:
    """Distance between points of R^n or C^n, d^2 = sum |p_k - q_k|^2."""
    p = np.asarray(p, dtype=complex)
    q = np.asarray(q, dtype=complex)
    if p.shape != q.shape or p.ndim != 1:
        raise DomainError(f"Points must be vectors of equal length, got {p.shape} and {q.shape}.")
    if not (np.all(np.isfinite(p)) and np.all(np.isfinite(q))):
        raise DomainError("Point coordinates must be finite.")
    return float(np.linalg.norm(p - q))
