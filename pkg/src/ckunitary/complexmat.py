"""Dense complex linear algebra for small matrices.

All matrices and vectors in this package are plain numpy arrays of dtype
complex128, row-major and dense.  Dimensions stay small (n up to a few
dozen), so nothing here attempts blocking, sparsity, or in-place tricks.
Every function is pure and safe for concurrent use.
"""

from __future__ import annotations

import numpy as np

from .errors import ShapeError

__all__ = [
    "as_matrix",
    "as_vector",
    "identity",
    "matmul",
    "adjoint",
    "kron",
    "determinant",
    "frobenius",
    "unitarity_residual",
]

# pivots at or below this magnitude are treated as an exactly singular matrix
_SINGULAR_PIVOT = 1e-14


def as_matrix(a) -> np.ndarray:
    """Coerce to a 2-D complex128 array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ShapeError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix contains NaN or Inf entries")
    return m


def as_vector(v) -> np.ndarray:
    """Coerce to a 1-D complex128 array, rejecting non-finite entries."""
    a = np.asarray(v, dtype=np.complex128)
    if a.ndim != 1 or a.shape[0] < 1:
        raise ShapeError(f"expected a non-empty 1-D vector, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("vector contains NaN or Inf entries")
    return a


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit inner-dimension check."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def kron(a, b) -> np.ndarray:
    """Kronecker product; block (i, j) equals a[i, j] * b."""
    return np.kron(as_matrix(a), as_matrix(b))


def determinant(a) -> complex:
    """Determinant by LU with partial pivoting.

    Dimensions 1 and 2 use the closed forms, which are exact.  For larger
    matrices a pivot magnitude at or below 1e-14 short-circuits to 0.
    """
    m = as_matrix(a)
    rows, cols = m.shape
    if rows != cols:
        raise ShapeError(f"determinant requires a square matrix, got {m.shape}")
    if rows == 1:
        return complex(m[0, 0])
    if rows == 2:
        return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])

    lu = m.copy()
    det = 1.0 + 0.0j
    for k in range(rows):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        if abs(lu[p, k]) <= _SINGULAR_PIVOT:
            return 0.0 + 0.0j
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            det = -det
        det *= lu[k, k]
        lu[k + 1 :, k] /= lu[k, k]
        lu[k + 1 :, k + 1 :] -= np.outer(lu[k + 1 :, k], lu[k, k + 1 :])
    return complex(det)


def frobenius(a) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(np.asarray(a, dtype=np.complex128)))


def unitarity_residual(u) -> float:
    """Frobenius norm of U†U - I; zero iff U is unitary."""
    m = as_matrix(u)
    if m.shape[0] != m.shape[1]:
        raise ShapeError(f"unitarity is defined for square matrices, got {m.shape}")
    return frobenius(m.conj().T @ m - identity(m.shape[0]))
