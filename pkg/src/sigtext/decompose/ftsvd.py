"""Flexible tensor singular value decompositions for third-order tensors.

Two factorizations of X in R^{I1 x I2 x I3}:

* first kind  — orthogonal U (I1 x I1) and V (I3 x I3) from the symmetric
  eigendecompositions of the mode-1 and mode-3 Gram matrices, with the core
  S = U^T . X . V contracted over modes 1 and 3;
* second kind — unfold X to the I1 x (I2 I3) matrix, take a matrix SVD,
  fold the rectangular-diagonal core back.  The right factor is kept in its
  unfolded matrix form (right singular vectors as columns).

Both reconstruct the input exactly up to floating-point error, and both
report a non-increasing, non-negative singular value sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .flexprod import FlexOrder, flexible_product


class FtsvdKind(str, Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class FtsvdResult:
    kind: FtsvdKind
    u: np.ndarray
    s: np.ndarray
    v: np.ndarray
    singular_values: np.ndarray
    shape: tuple[int, int, int]


def _as_tensor3(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 3:
        raise ValueError(f"expected a third-order tensor, got order {a.ndim}")
    if not np.all(np.isfinite(a)):
        raise ValueError("tensor contains non-finite values")
    return a


def unfold3(a: np.ndarray) -> np.ndarray:
    """I1 x (I2*I3) mode-1 unfolding, columns ordered with mode 2 fastest."""
    a = np.asarray(a)
    return np.reshape(a, (a.shape[0], -1), order="F")


def fold3(mat: np.ndarray, shape: tuple[int, int, int]) -> np.ndarray:
    """Inverse of :func:`unfold3`."""
    return np.reshape(np.asarray(mat), shape, order="F")


def _descending_eigh(gram: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    vals, vecs = np.linalg.eigh(gram)
    order = np.argsort(vals)[::-1]
    return np.clip(vals[order], 0.0, None), vecs[:, order]


def ftsvd_first(a: np.ndarray) -> FtsvdResult:
    """First-kind decomposition: X = U ._1 S ._3 V^T with orthogonal U, V.

    Singular values are the square roots of the (clamped) mode-1 Gram
    eigenvalues.
    """
    a = _as_tensor3(a)
    at = np.transpose(a, (2, 1, 0))
    g1 = flexible_product(a, at, q=2, alpha=FlexOrder.REVERSE, beta=FlexOrder.FORWARD)
    g3 = flexible_product(at, a, q=2, alpha=FlexOrder.REVERSE, beta=FlexOrder.FORWARD)
    evals1, u = _descending_eigh(g1)
    _, v = _descending_eigh(g3)
    core = flexible_product(flexible_product(u.T, a, q=1), v, q=1,
                            alpha=FlexOrder.REVERSE)
    return FtsvdResult(FtsvdKind.FIRST, u, core, v, np.sqrt(evals1), a.shape)


def ftsvd_second(a: np.ndarray, full_matrices: bool = True) -> FtsvdResult:
    """Second-kind decomposition via unfold -> matrix SVD -> fold."""
    a = _as_tensor3(a)
    i1, i2, i3 = a.shape
    u, sigma, vt = np.linalg.svd(unfold3(a), full_matrices=full_matrices)
    smat = np.zeros((i1, i2 * i3))
    k = sigma.size
    smat[np.arange(k), np.arange(k)] = sigma
    return FtsvdResult(FtsvdKind.SECOND, u, fold3(smat, (i1, i2, i3)), vt.T,
                       sigma, (i1, i2, i3))


def reconstruct(result: FtsvdResult) -> np.ndarray:
    """Rebuild the original tensor from the factors."""
    if result.kind is FtsvdKind.FIRST:
        left = flexible_product(result.u, result.s, q=1)
        return flexible_product(left, result.v.T, q=1, alpha=FlexOrder.REVERSE)
    k = result.singular_values.size
    mat = (result.u[:, :k] * result.singular_values) @ result.v[:, :k].T
    return fold3(mat, result.shape)
