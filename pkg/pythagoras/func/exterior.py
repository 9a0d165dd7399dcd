""" exterior.py -- Real/complex frame kernels: Gram determinants, minors, Cauchy-Binet, wedge norms.

    Language: Python 3.9

    Determinants go through numpy.linalg.det (LU with partial pivoting). Complex entries
    are complex128, i.e. (re, im) pairs of doubles.
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union
import functools
import itertools
import logging

import numpy as np

from pythagoras.utils.exceptions import DomainError
from pythagoras.utils.numeric import relative_residual


@dataclass(frozen=True)
class IdentityCheck(object):
    """Both sides of an identity and their relative residual.

    Attributes:
    ----------
    lhs: float
        Left-hand side.
    rhs: float
        Right-hand side.
    residual: float
        |lhs - rhs| / max(lhs, 1).
    """

    lhs: float
    rhs: float
    residual: float

    def as_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "residual": self.residual}


@dataclass(frozen=True, order=True)
class MultiIndex(object):
    """Strictly increasing 1-based index tuple selecting the coordinate subspace C_I."""

    indices: Tuple[int, ...]

    def __post_init__(self):
        indices = tuple(int(i) for i in self.indices)
        object.__setattr__(self, "indices", indices)
        if not indices:
            raise DomainError("A multi-index needs at least one index.")
        if indices[0] < 1 or any(a >= b for a, b in zip(indices, indices[1:])):
            raise DomainError(f"Multi-index {indices} is not strictly increasing from 1.")

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    @property
    def rows(self) -> List[int]:
        """0-based row positions for numpy slicing."""
        return [i - 1 for i in self.indices]

    @property
    def label(self) -> str:
        return ",".join(str(i) for i in self.indices)

    def __str__(self) -> str:
        return self.label


@functools.lru_cache(maxsize=None)
def _multiindices(n: int, m: int) -> Tuple[MultiIndex, ...]:
    return tuple(MultiIndex(c) for c in itertools.combinations(range(1, n + 1), m))


def multiindices(n: int, m: int) -> List[MultiIndex]:
    """All C(n, m) multi-indices 1 <= i1 < ... < im <= n in lexicographic order.

    Parameters
    ----------
    n: int
        Ambient dimension.
    m: int
        Multi-index length.

    Returns
    ----------
    List[MultiIndex]
        Lexicographically ordered multi-indices. Cached per (n, m).
    """
    n, m = int(n), int(m)
    if not 1 <= m <= n:
        raise DomainError(f"Multi-indices need 1 <= m <= n, got n={n}, m={m}.")
    return list(_multiindices(n, m))


class _Frame(object):
    """Ordered list of m generating vectors in an n-dimensional coordinate space.

    The vectors are the columns of the n x m matrix M.
    """

    dtype = float

    def __init__(self, vectors: Sequence[Sequence[Union[float, complex]]]):
        try:
            rows = np.array(vectors, dtype=self.dtype)
        except (TypeError, ValueError) as e:
            raise DomainError(f"Frame vectors are not a rectangular numeric array: {e}") from e
        if rows.ndim != 2 or rows.shape[0] == 0:
            raise DomainError(f"Frame needs a non-empty list of vectors, got shape {rows.shape}.")
        m, n = rows.shape
        if not 1 <= m <= n:
            raise DomainError(f"Frame needs 1 <= m <= n, got m={m} vectors in dimension {n}.")
        if not np.all(np.isfinite(rows)):
            raise DomainError("Frame entries must be finite.")
        rows.setflags(write=False)
        self._rows = rows

    @property
    def n(self) -> int:
        return self._rows.shape[1]

    @property
    def m(self) -> int:
        return self._rows.shape[0]

    @property
    def vectors(self) -> np.ndarray:
        """m x n array, one generating vector per row."""
        return self._rows

    @property
    def matrix(self) -> np.ndarray:
        """n x m matrix M with the vectors as columns."""
        return self._rows.T

    @functools.cached_property
    def canonical(self) -> Tuple[np.ndarray, float]:
        """Vectors sorted lexicographically, and the sign of that sorting permutation.

        Determinants are taken on this ordering, so reordering the vectors leaves the
        Gram determinant bit-for-bit unchanged and flips minors by exactly the parity.
        """
        keys = []
        for column in self._rows.T:
            keys.extend((column.real, column.imag))
        # lexsort treats its last key as the primary one.
        order = np.lexsort(keys[::-1])
        inversions = sum(
            1 for i in range(len(order)) for j in range(i + 1, len(order)) if order[i] > order[j]
        )
        rows = self._rows[order]
        rows.setflags(write=False)
        return rows, -1.0 if inversions % 2 else 1.0

    @property
    def is_complex(self) -> bool:
        return self.dtype is complex

    def swapped(self, i: int, j: int) -> "_Frame":
        """Copy of the frame with vectors i and j (0-based) exchanged."""
        rows = self._rows.copy()
        rows[[i, j]] = rows[[j, i]]
        return type(self)(rows)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.m}, vectors={self._rows.tolist()})"


class RealFrame(_Frame):
    """Frame of real vectors in R^n."""

    dtype = float


class ComplexFrame(_Frame):
    """Frame of complex vectors in C^n."""

    dtype = complex


Frame = Union[RealFrame, ComplexFrame]


def gram_determinant(f: RealFrame) -> float:
    """det(M^T M), clipped at zero."""
    M = f.canonical[0].T
    # Dependent frames can land a hair below zero.
    return float(max(np.linalg.det(M.T @ M), 0.0))


def gram_volume(f: RealFrame) -> float:
    """m-volume sqrt(det(M^T M)) of the parallelotope spanned by a real frame.

    Parameters
    ----------
    f: RealFrame
        Frame to measure.

    Returns
    ----------
    float
        Non-negative m-volume, zero for linearly dependent vectors.
    """
    return float(np.sqrt(gram_determinant(f)))


def complex_gram_2m_volume(f: ComplexFrame) -> float:
    """det(M^dagger M), the 2m-volume of the parallelotope on v1, iv1, ..., vm, ivm.

    The determinant itself is the 2m-volume; no square root is taken.
    """
    M = f.canonical[0].T.astype(complex)
    gram = M.conj().T @ M
    return float(max(np.real(np.linalg.det(gram)), 0.0))


def minor(f: Frame, I: MultiIndex) -> Union[float, complex]:
    """det(M_I) for the m x m submatrix of rows I.

    For a real frame |det(M_I)| is the m-volume of the projection onto C_I.

    Parameters
    ----------
    f: Frame
        Real or complex frame.
    I: MultiIndex
        Row selection, |I| = m.

    Returns
    ----------
    Union[float, complex]
        Signed (real) or complex determinant.
    """
    if len(I) != f.m:
        raise DomainError(f"Multi-index {I} has length {len(I)}, frame has m={f.m}.")
    if I.indices[-1] > f.n:
        raise DomainError(f"Multi-index {I} exceeds the ambient dimension n={f.n}.")
    rows, sign = f.canonical
    det = sign * np.linalg.det(rows.T[I.rows, :])
    return complex(det) if f.is_complex else float(det)


def wedge_components(f: Frame) -> Dict[MultiIndex, Union[float, complex]]:
    """Coordinates of the blade v1 ^ ... ^ vm in the basis e_I, ordered by I."""
    return {I: minor(f, I) for I in multiindices(f.n, f.m)}


def wedge_norm(f: RealFrame) -> float:
    """Euclidean norm of the wedge components, the m-volume of the frame."""
    components = np.array(list(wedge_components(f).values()))
    return float(np.linalg.norm(components))


def cauchy_binet_residual(f: Frame) -> IdentityCheck:
    """Cauchy-Binet: det(M^T M) = sum det(M_I)^2, or det(M^dagger M) = sum |det(M_I)|^2.

    Parameters
    ----------
    f: Frame
        Real or complex frame.

    Returns
    ----------
    IdentityCheck
        Gram determinant, sum of squared minors, and their relative residual.
    """
    if f.is_complex:
        lhs = complex_gram_2m_volume(f)
    else:
        lhs = gram_determinant(f)
    rhs = float(sum(abs(d) ** 2 for d in wedge_components(f).values()))
    residual = relative_residual(lhs, rhs)
    logging.debug(
        f"Cauchy-Binet on {'complex' if f.is_complex else 'real'} frame n={f.n}, m={f.m}: "
        f"residual {residual:.3e}."
    )
    return IdentityCheck(lhs=lhs, rhs=rhs, residual=residual)
