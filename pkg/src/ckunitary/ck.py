"""Product construction of special unitary matrices from Cayley-Klein pairs.

An n-dimensional special unitary matrix is assembled as a modified flip
matrix times a fixed sequence of embedded single-qubit factors, one factor
per lower-triangular index pair (alpha, beta) with alpha > beta.  Each
factor is driven by one Cayley-Klein pair (a, b) with |a|^2 + |b|^2 = 1.
The resulting matrix always has determinant 1 and single-term entries in
its first row and first column.

Conventions used throughout this module:

* all (alpha, beta) labels and row/column indices are 1-based; conversion
  to 0-based array indexing happens internally,
* the factor product runs with alpha ascending in the outer loop and beta
  ascending in the inner loop, applied by successive right-multiplication:
  (2,1), (3,1), (3,2), (4,1), ...
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterator, Mapping

import numpy as np

from .complexmat import determinant, identity
from .errors import DomainError

__all__ = [
    "CKPair",
    "CKParameterSet",
    "PAIR_NORM_TOL",
    "lower_triangle_indices",
    "gamma_n",
    "elementary",
    "subspace_identity",
    "qubit_q",
    "embed_m",
    "omega",
    "flip",
    "build_su",
    "swap_matrix",
    "reposition",
]

# construction rejects pairs whose constraint defect exceeds this, rather
# than renormalizing, so caller bugs are not silently masked
PAIR_NORM_TOL = 1e-12


def lower_triangle_indices(n: int) -> Iterator[tuple[int, int]]:
    """Yield (alpha, beta) pairs, alpha = 2..n outer and beta = 1..alpha-1
    inner, which is also the factor order of the product construction."""
    for alpha in range(2, n + 1):
        for beta in range(1, alpha):
            yield alpha, beta


@dataclass(frozen=True)
class CKPair:
    """One Cayley-Klein pair (a, b), constrained to |a|^2 + |b|^2 = 1."""

    a: complex
    b: complex

    def __post_init__(self):
        a, b = complex(self.a), complex(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not all(np.isfinite([a.real, a.imag, b.real, b.imag])):
            raise ValueError("pair components must be finite")
        defect = abs(abs(a) ** 2 + abs(b) ** 2 - 1.0)
        if defect > PAIR_NORM_TOL:
            raise ValueError(
                f"pair violates |a|^2 + |b|^2 = 1 by {defect:.3e} "
                f"(tolerance {PAIR_NORM_TOL:.0e})"
            )


@dataclass(frozen=True)
class CKParameterSet:
    """The full family of (n^2 - n)/2 pairs indexed by (alpha, beta)."""

    n: int
    pairs: Mapping[tuple[int, int], CKPair]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"dimension must be a positive integer, got {self.n}")
        expected = set(lower_triangle_indices(self.n))
        got = set(self.pairs)
        if got != expected:
            missing = sorted(expected - got)
            extra = sorted(got - expected)
            raise ValueError(
                f"pair index set mismatch for n={self.n}: "
                f"missing {missing}, unexpected {extra}"
            )
        object.__setattr__(self, "pairs", MappingProxyType(dict(self.pairs)))

    def pair(self, alpha: int, beta: int) -> CKPair:
        return self.pairs[(alpha, beta)]

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "CKParameterSet":
        """Draw every pair uniformly on its constraint sphere."""
        pairs = {}
        for idx in lower_triangle_indices(n):
            z = rng.standard_normal(4)
            norm = float(np.sqrt(np.sum(z * z)))
            while norm < 1e-8:
                z = rng.standard_normal(4)
                norm = float(np.sqrt(np.sum(z * z)))
            pairs[idx] = CKPair(
                complex(z[0], z[1]) / norm, complex(z[2], z[3]) / norm
            )
        return cls(n, pairs)


def gamma_n(n: int) -> int:
    """Sign (-1)^((2n - 1 + (-1)^n)/4), the sequence 1,-1,-1,1,1,-1,-1,..."""
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    exponent = (2 * n - 1 + (-1) ** n) // 4
    return -1 if exponent % 2 else 1


def _check_index(n: int, value: int, name: str) -> None:
    if not 1 <= value <= n:
        raise DomainError(f"{name} must be in 1..{n}, got {value}")


def _check_pair_order(n: int, alpha: int, beta: int) -> None:
    _check_index(n, alpha, "alpha")
    _check_index(n, beta, "beta")
    if beta >= alpha:
        raise DomainError(f"required beta < alpha, got alpha={alpha}, beta={beta}")


def elementary(n: int, a: int, b: int) -> np.ndarray:
    """Matrix with a single 1 at 1-based position (a, b)."""
    _check_index(n, a, "row")
    _check_index(n, b, "column")
    m = np.zeros((n, n), dtype=np.complex128)
    m[a - 1, b - 1] = 1.0
    return m


def subspace_identity(n: int, alpha: int, beta: int) -> np.ndarray:
    """Diagonal of ones with zeros at positions alpha and beta."""
    _check_pair_order(n, alpha, beta)
    m = identity(n)
    m[alpha - 1, alpha - 1] = 0.0
    m[beta - 1, beta - 1] = 0.0
    return m


def qubit_q(u1: complex, u2: complex) -> np.ndarray:
    """2x2 unitary [[u2, u1], [-u1*, u2*]]; note the reversed argument
    order relative to the (a, b) layout of the 2-dimensional result."""
    u1, u2 = complex(u1), complex(u2)
    return np.array(
        [[u2, u1], [-u1.conjugate(), u2.conjugate()]], dtype=np.complex128
    )


def embed_m(n: int, alpha: int, beta: int, s: complex, t: complex) -> np.ndarray:
    """Embed qubit_q(s, t) on the index pair {beta, alpha}, zero elsewhere.

    Placement: Q11 -> (beta, beta), Q12 -> (beta, alpha),
    Q21 -> (alpha, beta), Q22 -> (alpha, alpha).
    """
    _check_pair_order(n, alpha, beta)
    q = qubit_q(s, t)
    m = np.zeros((n, n), dtype=np.complex128)
    m[beta - 1, beta - 1] = q[0, 0]
    m[beta - 1, alpha - 1] = q[0, 1]
    m[alpha - 1, beta - 1] = q[1, 0]
    m[alpha - 1, alpha - 1] = q[1, 1]
    return m


def omega(n: int, alpha: int, beta: int, x: complex, y: complex) -> np.ndarray:
    """One embedded qubit factor of the product construction.

    Normally subspace_identity + embed_m(x, y).  The single factor with
    alpha + beta == 3 + (1 if n == 2 else 0) instead receives
    (x, gamma_n(n) * conj(y)); for n == 2 no factor meets the condition.
    """
    _check_pair_order(n, alpha, beta)
    y = complex(y)
    if alpha + beta == 3 + (1 if n == 2 else 0):
        y = gamma_n(n) * y.conjugate()
    return subspace_identity(n, alpha, beta) + embed_m(n, alpha, beta, x, y)


def flip(n: int) -> np.ndarray:
    """Anti-diagonal flip whose bottom-left entry carries gamma_n, which
    makes the determinant exactly 1 for every n."""
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    m = np.zeros((n, n), dtype=np.complex128)
    for row in range(1, n):
        m[row - 1, n - row] = 1.0
    m[n - 1, 0] = gamma_n(n)
    return m


def build_su(params: CKParameterSet) -> np.ndarray:
    """Assemble the n-dimensional special unitary matrix from its pairs.

    The result is flip(n) right-multiplied by the omega factors taken in
    lower_triangle_indices order, each called with (-conj(a), conj(b)) of
    its pair.  For n == 1 this is the 1x1 matrix [1].
    """
    n = params.n
    u = flip(n)
    for alpha, beta in lower_triangle_indices(n):
        p = params.pair(alpha, beta)
        u = u @ omega(n, alpha, beta, -p.a.conjugate(), p.b.conjugate())
    return u


def swap_matrix(n: int, z1: int, z2: int) -> np.ndarray:
    """Permutation matrix exchanging z1 and z2; identity when z1 == z2."""
    _check_index(n, z1, "z1")
    _check_index(n, z2, "z2")
    m = identity(n)
    if z1 != z2:
        m[z1 - 1, z1 - 1] = 0.0
        m[z2 - 1, z2 - 1] = 0.0
        m[z1 - 1, z2 - 1] = 1.0
        m[z2 - 1, z1 - 1] = 1.0
    return m


def reposition(u: np.ndarray, r: int, c: int, r0: int = 1, c0: int = 1) -> np.ndarray:
    """Move the single-term row from r0 to r and column from c0 to c.

    Returns det^(1/n)(S_(r0,r) S_(c0,c)) * S_(r0,r) @ u @ S_(c0,c), which
    stays special unitary.  The scalar is the principal n-th root of the
    swap-product determinant (+1 or -1), so an explicit phase e^(i*pi/n)
    appears whenever exactly one of the two swaps is a real exchange; it is
    not folded back into the pairs here.
    """
    m = np.asarray(u, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"reposition requires a square matrix, got {m.shape}")
    n = m.shape[0]
    for name, value in (("r", r), ("c", c), ("r0", r0), ("c0", c0)):
        _check_index(n, value, name)
    s_row = swap_matrix(n, r0, r)
    s_col = swap_matrix(n, c0, c)
    # swap products have determinant exactly +1 or -1
    d = determinant(s_row @ s_col).real
    scale = 1.0 + 0.0j if d > 0 else complex(np.exp(1j * np.pi / n))
    return scale * (s_row @ m @ s_col)
