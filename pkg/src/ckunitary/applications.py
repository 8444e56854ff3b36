"""Applications of the construction: basis completion from one state,
coherent-amplitude propagation through a multiport, and multi-party
tensor-product transforms built without any matrix exponentials."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from .ck import build_su
from .complexmat import as_vector, kron
from .errors import DomainError, ShapeError
from .essential import (
    EssentialParams,
    GeneralUnitaryParams,
    build_general,
    essential_to_ck,
)
from .hypersphere import TWO_PI, PureState, angles_from_state

__all__ = [
    "FreeParams",
    "BasisGenResult",
    "CoherentAmplitudes",
    "EPSpec",
    "complete_basis",
    "mpi_propagate",
    "ep_build",
    "ep_dof",
]


def _free_indices(n: int):
    for j in range(2, n):
        for k in range(1, j):
            yield j, k


@dataclass(frozen=True)
class FreeParams:
    """The n(n-2) freely choosable angles of basis completion.

    These are the essential angles whose first index is at most n-1: theta
    and phi per pair (j, k) with 2 <= j <= n-1, plus chi per row
    2 <= j <= n-1.  The pairs with first index n are determined by the
    generating state and are not represented here.
    """

    n: int
    theta: Mapping[tuple[int, int], float]
    phi: Mapping[tuple[int, int], float]
    chi: Mapping[int, float]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise DomainError(f"dimension must be an integer >= 2, got {self.n}")
        expected = set(_free_indices(self.n))
        theta = {(int(j), int(k)): float(v) for (j, k), v in self.theta.items()}
        phi = {(int(j), int(k)): float(v) for (j, k), v in self.phi.items()}
        chi = {int(j): float(v) for j, v in self.chi.items()}
        if set(theta) != expected or set(phi) != expected:
            raise DomainError(
                f"free theta/phi keys must be the (j, k) pairs with j <= {self.n - 1}"
            )
        if set(chi) != set(range(2, self.n)):
            raise DomainError(f"free chi keys must be exactly 2..{self.n - 1}")
        for idx, v in theta.items():
            if not (math.isfinite(v) and 0.0 <= v <= math.pi / 2):
                raise DomainError(f"theta{idx} out of [0, pi/2]: {v}")
        for label, mapping in (("phi", phi), ("chi", chi)):
            for idx, v in mapping.items():
                if not (math.isfinite(v) and 0.0 <= v < TWO_PI):
                    raise DomainError(f"{label}[{idx}] out of [0, 2*pi): {v}")
        object.__setattr__(self, "theta", MappingProxyType(theta))
        object.__setattr__(self, "phi", MappingProxyType(phi))
        object.__setattr__(self, "chi", MappingProxyType(chi))

    @property
    def scalar_count(self) -> int:
        return len(self.theta) + len(self.phi) + len(self.chi)

    @classmethod
    def zeros(cls, n: int) -> "FreeParams":
        idx = list(_free_indices(n))
        return cls(
            n,
            {i: 0.0 for i in idx},
            {i: 0.0 for i in idx},
            {j: 0.0 for j in range(2, n)},
        )

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "FreeParams":
        idx = list(_free_indices(n))
        return cls(
            n,
            {i: rng.uniform(0.0, math.pi / 2) for i in idx},
            {i: rng.uniform(0.0, TWO_PI) for i in idx},
            {j: rng.uniform(0.0, TWO_PI) for j in range(2, n)},
        )


@dataclass(frozen=True, eq=False)
class BasisGenResult:
    """Generated unitary plus its rows repackaged as kets."""

    matrix: np.ndarray = field(repr=False)
    basis: tuple[PureState, ...]


@dataclass(frozen=True, eq=False)
class CoherentAmplitudes:
    """Complex coherent-state parameters, one per port."""

    alphas: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = as_vector(self.alphas).copy()
        amps.setflags(write=False)
        object.__setattr__(self, "alphas", amps)

    @property
    def n(self) -> int:
        return self.alphas.shape[0]

    def total_power(self) -> float:
        """Sum of squared magnitudes; invariant under propagation."""
        return float(np.sum(np.abs(self.alphas) ** 2))


@dataclass(frozen=True)
class EPSpec:
    """Per-party essential angles plus one global phase.

    Local phases are absorbed by the single gamma, so the scalar count is
    1 - N + sum of n_m^2 by construction.
    """

    parties: tuple[EssentialParams, ...]
    gamma: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "parties", tuple(self.parties))
        object.__setattr__(self, "gamma", float(self.gamma))
        if len(self.parties) < 1:
            raise DomainError("at least one party is required")
        if not all(isinstance(p, EssentialParams) for p in self.parties):
            raise DomainError("every party must be an EssentialParams")
        if not 0.0 <= self.gamma < TWO_PI:
            raise DomainError(f"gamma out of [0, 2*pi): {self.gamma}")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(p.n for p in self.parties)

    @property
    def scalar_count(self) -> int:
        return 1 + sum(p.scalar_count for p in self.parties)


def complete_basis(psi: PureState, free: FreeParams | None = None) -> BasisGenResult:
    """Extend one state to a full orthonormal basis.

    The state's superposition and phase angles fix the essential angles
    whose first index is n: (theta_{n,k}, phi_{n,k}) takes (theta_k,
    phi_k) for k < n and chi_n takes phi_n.  The remaining n(n-2) angles
    are free; they default to zero, a convention chosen here for
    deterministic output.  The first row of the built matrix reproduces
    the generating state and the remaining rows complete the basis, so no
    orthogonalization sweep is ever needed.
    """
    n = psi.n
    if n < 2:
        raise DomainError("basis completion needs dimension >= 2")
    if free is None:
        free = FreeParams.zeros(n)
    if free.n != n:
        raise DomainError(f"free parameters sized for n={free.n}, state has n={n}")
    h = angles_from_state(psi)
    theta = dict(free.theta)
    phi = dict(free.phi)
    chi = dict(free.chi)
    for k in range(1, n):
        theta[(n, k)] = h.thetas[k - 1]
        phi[(n, k)] = h.phis[k - 1]
    chi[n] = h.phis[n - 1]
    u = build_su(essential_to_ck(EssentialParams(n, theta, phi, chi)))
    basis = tuple(PureState(n, row) for row in u)
    return BasisGenResult(u, basis)


def mpi_propagate(
    u_params: GeneralUnitaryParams, input: CoherentAmplitudes
) -> CoherentAmplitudes:
    """Coherent parameters leaving an n-port: alpha'_k = sum_m U_{k,m} alpha_m.

    A product of coherent states stays a product under the multiport, so
    the whole propagation reduces to this one matrix-vector product; the
    total squared magnitude is conserved because the rows of U are
    orthonormal.
    """
    if u_params.n != input.n:
        raise ShapeError(
            f"matrix dimension {u_params.n} does not match {input.n} input ports"
        )
    u = build_general(u_params)
    return CoherentAmplitudes(u @ input.alphas)


def ep_build(spec: EPSpec) -> np.ndarray:
    """Tensor product of per-party special unitaries times e^(i*gamma).

    Entanglement between the parties is unaffected by construction, and no
    generator exponentials are involved at any point.
    """
    u = build_su(essential_to_ck(spec.parties[0]))
    for party in spec.parties[1:]:
        u = kron(u, build_su(essential_to_ck(party)))
    return complex(np.exp(1j * spec.gamma)) * u


def ep_dof(dims: Sequence[int]) -> int:
    """Scalar count 1 - N + sum(n_m^2) of an N-party product transform."""
    dims = list(dims)
    if not dims:
        raise DomainError("at least one party dimension is required")
    if any(int(d) < 1 for d in dims):
        raise DomainError(f"party dimensions must be >= 1, got {dims}")
    return 1 - len(dims) + sum(int(d) ** 2 for d in dims)
