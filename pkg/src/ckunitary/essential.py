"""Minimal angle parameterization of the pair family.

Assigning (a, b) = (cos(theta) e^(i*phi), sin(theta) e^(i*eps)) per pair
would spend three angles on every pair, which overshoots the true number
of degrees of freedom by (n-1)(n-2)/2.  The essential scheme removes the
excess by forcing eps to zero except on the pairs hugging the diagonal
(k = j - 1), whose b-phase is the single extra angle chi_j.  The count
then lands exactly on n^2 - 1 real scalars for the special group; adding
one global phase gives n^2 for the general group.

Superposition angles live in the first sector [0, pi/2] and phase angles
in [0, 2*pi).  Construction rejects out-of-range values instead of
reducing them, so parameter provenance stays explicit; wrap_phase and
fold_first_sector from the hypersphere module normalize arbitrary reals
when that is wanted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .ck import CKPair, CKParameterSet, build_su, lower_triangle_indices
from .errors import DomainError
from .hypersphere import TWO_PI

__all__ = [
    "EssentialParams",
    "GeneralUnitaryParams",
    "NaiveParams",
    "essential_to_ck",
    "naive_to_ck",
    "dof_count",
    "waste_count",
    "build_general",
    "f_element",
]


def dof_count(n: int, special: bool = True) -> int:
    """Real degrees of freedom of the n-dimensional (special) unitary group."""
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    return n * n - 1 if special else n * n


def waste_count(n: int) -> int:
    """Parameters the unconstrained three-angles-per-pair scheme adds
    beyond the essential count: (n-1)(n-2)/2."""
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    return (n - 1) * (n - 2) // 2


def _check_angle_keys(n: int, mapping: Mapping, name: str) -> dict:
    expected = set(lower_triangle_indices(n))
    cleaned = {(int(j), int(k)): float(v) for (j, k), v in mapping.items()}
    if set(cleaned) != expected:
        raise DomainError(
            f"{name} keys must be exactly the (j, k) pairs with "
            f"2 <= j <= {n}, 1 <= k <= j-1"
        )
    return cleaned


def _check_range(value: float, lo: float, hi: float, closed_hi: bool, label: str):
    ok = lo <= value <= hi if closed_hi else lo <= value < hi
    if not (math.isfinite(value) and ok):
        bracket = "]" if closed_hi else ")"
        raise DomainError(f"{label} out of [{lo}, {hi}{bracket}: {value}")


@dataclass(frozen=True)
class EssentialParams:
    """Exactly n^2 - 1 angles: theta/phi per pair plus chi per row j.

    chi is keyed by j alone since it only ever applies to the pair
    (j, j-1); that makes the scalar count structural rather than checked.
    """

    n: int
    theta: Mapping[tuple[int, int], float]
    phi: Mapping[tuple[int, int], float]
    chi: Mapping[int, float]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"dimension must be a positive integer, got {self.n}")
        theta = _check_angle_keys(self.n, self.theta, "theta")
        phi = _check_angle_keys(self.n, self.phi, "phi")
        chi = {int(j): float(v) for j, v in self.chi.items()}
        if set(chi) != set(range(2, self.n + 1)):
            raise DomainError(f"chi keys must be exactly 2..{self.n}")
        for idx, v in theta.items():
            _check_range(v, 0.0, math.pi / 2, True, f"theta{idx}")
        for idx, v in phi.items():
            _check_range(v, 0.0, TWO_PI, False, f"phi{idx}")
        for j, v in chi.items():
            _check_range(v, 0.0, TWO_PI, False, f"chi[{j}]")
        object.__setattr__(self, "theta", MappingProxyType(theta))
        object.__setattr__(self, "phi", MappingProxyType(phi))
        object.__setattr__(self, "chi", MappingProxyType(chi))

    @property
    def scalar_count(self) -> int:
        return len(self.theta) + len(self.phi) + len(self.chi)

    @classmethod
    def zeros(cls, n: int) -> "EssentialParams":
        idx = list(lower_triangle_indices(n))
        return cls(
            n,
            {i: 0.0 for i in idx},
            {i: 0.0 for i in idx},
            {j: 0.0 for j in range(2, n + 1)},
        )

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "EssentialParams":
        """Uniform draw over the canonical angle ranges."""
        idx = list(lower_triangle_indices(n))
        return cls(
            n,
            {i: rng.uniform(0.0, math.pi / 2) for i in idx},
            {i: rng.uniform(0.0, TWO_PI) for i in idx},
            {j: rng.uniform(0.0, TWO_PI) for j in range(2, n + 1)},
        )


@dataclass(frozen=True)
class GeneralUnitaryParams:
    """Essential angles plus one global phase: n^2 scalars total."""

    base: EssentialParams
    gamma: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "gamma", float(self.gamma))
        _check_range(self.gamma, 0.0, TWO_PI, False, "gamma")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def scalar_count(self) -> int:
        return self.base.scalar_count + 1

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "GeneralUnitaryParams":
        return cls(EssentialParams.random(n, rng), rng.uniform(0.0, TWO_PI))


@dataclass(frozen=True)
class NaiveParams:
    """The unconstrained scheme: theta, phi and a free b-phase eps for
    every pair, 3(n^2 - n)/2 scalars.  Kept only to demonstrate the
    parameter waste relative to EssentialParams; all angles take the full
    [0, 2*pi) range."""

    n: int
    theta: Mapping[tuple[int, int], float]
    phi: Mapping[tuple[int, int], float]
    epsilon: Mapping[tuple[int, int], float]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"dimension must be a positive integer, got {self.n}")
        theta = _check_angle_keys(self.n, self.theta, "theta")
        phi = _check_angle_keys(self.n, self.phi, "phi")
        eps = _check_angle_keys(self.n, self.epsilon, "epsilon")
        for mapping, name in ((theta, "theta"), (phi, "phi"), (eps, "epsilon")):
            for idx, v in mapping.items():
                _check_range(v, 0.0, TWO_PI, False, f"{name}{idx}")
        object.__setattr__(self, "theta", MappingProxyType(theta))
        object.__setattr__(self, "phi", MappingProxyType(phi))
        object.__setattr__(self, "epsilon", MappingProxyType(eps))

    @property
    def scalar_count(self) -> int:
        return len(self.theta) + len(self.phi) + len(self.epsilon)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "NaiveParams":
        idx = list(lower_triangle_indices(n))
        draw = lambda: rng.uniform(0.0, TWO_PI)
        return cls(
            n,
            {i: draw() for i in idx},
            {i: draw() for i in idx},
            {i: draw() for i in idx},
        )


def essential_to_ck(p: EssentialParams) -> CKParameterSet:
    """Pairs (cos(theta) e^(i*phi), sin(theta) e^(i*eps)) with eps equal to
    chi_j on the near-diagonal pair (j, j-1) and zero elsewhere.  The
    constraint |a|^2 + |b|^2 = 1 holds to machine precision by the
    trigonometric identity."""
    pairs = {}
    for j, k in lower_triangle_indices(p.n):
        theta = p.theta[(j, k)]
        eps = p.chi[j] if k == j - 1 else 0.0
        pairs[(j, k)] = CKPair(
            math.cos(theta) * complex(np.exp(1j * p.phi[(j, k)])),
            math.sin(theta) * complex(np.exp(1j * eps)),
        )
    return CKParameterSet(p.n, pairs)


def naive_to_ck(p: NaiveParams) -> CKParameterSet:
    """Same pair map but with every eps free; spends waste_count(n) more
    scalars than the essential route for the same matrix family."""
    pairs = {}
    for j, k in lower_triangle_indices(p.n):
        theta = p.theta[(j, k)]
        pairs[(j, k)] = CKPair(
            math.cos(theta) * complex(np.exp(1j * p.phi[(j, k)])),
            math.sin(theta) * complex(np.exp(1j * p.epsilon[(j, k)])),
        )
    return CKParameterSet(p.n, pairs)


def build_general(p: GeneralUnitaryParams) -> np.ndarray:
    """General unitary e^(i*gamma) times the special unitary of the base
    angles; its determinant is e^(i*n*gamma)."""
    return complex(np.exp(1j * p.gamma)) * build_su(essential_to_ck(p.base))


def f_element(v: float, w: float, x: float, y: float, z: float) -> complex:
    """-cos(v)cos(w)cos(x)e^(iy) - sin(w)sin(x)e^(-iz).

    With suitable shifts of its five angle arguments this single form
    reproduces every entry of the essential 3-dimensional matrix; it is
    exposed as an independent closed-form check."""
    return complex(
        -math.cos(v) * math.cos(w) * math.cos(x) * np.exp(1j * y)
        - math.sin(w) * math.sin(x) * np.exp(-1j * z)
    )
