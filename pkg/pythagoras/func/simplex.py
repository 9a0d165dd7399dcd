""" simplex.py -- Right-corner n-simplexes: face volumes, heights, normals and the
    hypotenusal face measured three independent ways.

    Language: Python 3.9

    Vertex A_0 sits at the origin and A_k = a_k e_k. Face F_k is the face spanned by
    every vertex except A_k, so F_0 is the hypotenusal face.
"""

from dataclasses import dataclass
from typing import List, Tuple
import logging
import math

import numpy as np
import pandas as pd

from pythagoras import config
from pythagoras.func.exterior import RealFrame, gram_volume
from pythagoras.utils.exceptions import DomainError


@dataclass(frozen=True)
class RightSimplex(object):
    """n-simplex with n mutually perpendicular edges of lengths a_1..a_n at the origin.

    Attributes:
    ----------
    legs: Tuple[float, ...]
        Leg lengths a_1..a_n, all positive and finite.
    """

    legs: Tuple[float, ...]

    def __post_init__(self):
        legs = tuple(float(a) for a in self.legs)
        object.__setattr__(self, "legs", legs)
        if not 2 <= len(legs) <= config.MAX_LEGS:
            raise DomainError(
                f"A right simplex needs 2 to {config.MAX_LEGS} legs, got {len(legs)}."
            )
        if not all(math.isfinite(a) and a > 0 for a in legs):
            raise DomainError(f"Simplex legs must be positive and finite, got {legs}.")

    @property
    def n(self) -> int:
        return len(self.legs)

    @property
    def vertices(self) -> np.ndarray:
        """(n + 1) x n array holding A_0, A_1, ..., A_n."""
        return np.vstack((np.zeros(self.n), np.diag(self.legs)))


def _check_face(s: RightSimplex, k: int, allow_hypotenuse: bool) -> int:
    k = int(k)
    lowest = 0 if allow_hypotenuse else 1
    if not lowest <= k <= s.n:
        raise DomainError(f"Face index {k} is outside {lowest}..{s.n}.")
    return k


def leg_face_volume(s: RightSimplex, k: int) -> float:
    """(n-1)-volume of the leg face F_k, the product of the other legs over (n-1)!.

    Parameters
    ----------
    s: RightSimplex
        Simplex to measure.
    k: int
        Face index, 1 <= k <= n. The hypotenusal face F_0 has its own routines.

    Returns
    ----------
    float
        Volume of F_k.
    """
    if int(k) == 0:
        raise DomainError("Face F_0 is the hypotenusal face; use the hypotenusal volume routines.")
    k = _check_face(s, k, allow_hypotenuse=False)
    others = s.legs[: k - 1] + s.legs[k:]
    return math.prod(others) / math.factorial(s.n - 1)


def hypotenusal_volume_gram(s: RightSimplex) -> float:
    """Volume of F_0 from the Gram determinant of the edges A_1A_2, ..., A_1A_n."""
    A = s.vertices
    edges = A[2:] - A[1]
    return gram_volume(RealFrame(edges)) / math.factorial(s.n - 1)


def hypotenusal_volume_pythagoras(s: RightSimplex) -> float:
    """Volume of F_0 as sqrt(V_1^2 + ... + V_n^2)."""
    return math.hypot(*(leg_face_volume(s, k) for k in range(1, s.n + 1)))


def height(s: RightSimplex, k: int) -> float:
    """Distance from A_k to the hyperplane of F_k.

    Parameters
    ----------
    s: RightSimplex
        Simplex to measure.
    k: int
        Vertex index, 0 <= k <= n.

    Returns
    ----------
    float
        a_k for k >= 1, (1/a_1^2 + ... + 1/a_n^2)^(-1/2) for k = 0.
    """
    k = _check_face(s, k, allow_hypotenuse=True)
    if k >= 1:
        return s.legs[k - 1]
    return 1.0 / math.hypot(*(1.0 / a for a in s.legs))


def volume(s: RightSimplex) -> float:
    """n-volume a_1 a_2 ... a_n / n!."""
    return math.prod(s.legs) / math.factorial(s.n)


def hypotenusal_volume_heights(s: RightSimplex) -> float:
    """Volume of F_0 from V = V_0 h_0 / n, without any face decomposition."""
    return s.n * volume(s) / height(s, 0)


def face_volumes(s: RightSimplex) -> List[float]:
    """[V_0, V_1, ..., V_n], with V_0 from the Gram oracle."""
    return [hypotenusal_volume_gram(s)] + [leg_face_volume(s, k) for k in range(1, s.n + 1)]


def outward_normals(s: RightSimplex) -> List[np.ndarray]:
    """Unit outward normals [n_0, n_1, ..., n_n] of the n + 1 faces.

    Leg faces lie in coordinate hyperplanes, so n_k = -e_k. The hypotenusal face lies in
    x_1/a_1 + ... + x_n/a_n = 1, whose normal is (1/a_1, ..., 1/a_n) normalised.

    Parameters
    ----------
    s: RightSimplex
        Simplex to measure.

    Returns
    ----------
    List[np.ndarray]
        n + 1 unit n-vectors.
    """
    inverse = 1.0 / np.array(s.legs)
    normals = [inverse / np.linalg.norm(inverse)]
    normals.extend(-row for row in np.eye(s.n))
    return normals


def normal_closure_residual(s: RightSimplex) -> float:
    """||V_0 n_0 + ... + V_n n_n|| / (V_0 + ... + V_n), zero for a closed polytope."""
    volumes = face_volumes(s)
    total = np.sum([V * n for V, n in zip(volumes, outward_normals(s))], axis=0)
    residual = float(np.linalg.norm(total)) / math.fsum(volumes)
    logging.debug(f"Normal closure residual for legs {s.legs}: {residual:.3e}.")
    return residual


def simplex_table(s: RightSimplex) -> pd.DataFrame:
    """One row per face: volume, height, V_k h_k / n and the unit outward normal.

    Parameters
    ----------
    s: RightSimplex
        Simplex to tabulate.

    Returns
    ----------
    pd.DataFrame
        Indexed by face k = 0..n. Every entry of the cone_volume column equals volume(s).
    """
    volumes = face_volumes(s)
    heights = [height(s, k) for k in range(s.n + 1)]
    table = pd.DataFrame(
        {
            "face": list(range(s.n + 1)),
            "volume": volumes,
            "height": heights,
            "cone_volume": [V * h / s.n for V, h in zip(volumes, heights)],
            "normal": [n.tolist() for n in outward_normals(s)],
        }
    ).set_index("face")
    return table
