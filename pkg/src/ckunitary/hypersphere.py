"""Hyperspherical coordinates and their pure-state specialization.

A point of n-space is described by a radius and n-1 angles: the first n-2
are polar with range [0, pi], the last is azimuthal with range [0, 2*pi).
The n = 1 edge case keeps a single two-point angle in {0, pi} standing in
for the sign of the lone coordinate.

A pure state splits into one set of superposition angles restricted to the
first sector [0, pi/2] of a unit hypersphere (so every modulus is
non-negative) plus one independent phase angle per basis amplitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .complexmat import as_vector
from .errors import DegenerateInputError, DomainError

__all__ = [
    "TWO_PI",
    "HypersphericalPoint",
    "HypersphericalState",
    "PureState",
    "wrap_phase",
    "fold_first_sector",
    "to_cartesian",
    "from_cartesian",
    "state_from_angles",
    "angles_from_state",
]

TWO_PI = 2.0 * math.pi


def wrap_phase(x: float) -> float:
    """Wrap an arbitrary real angle into [0, 2*pi)."""
    w = float(x) % TWO_PI
    # x = -eps wraps to the float 2*pi itself; canonicalize to 0
    return 0.0 if w >= TWO_PI else w


def fold_first_sector(x: float) -> float:
    """Fold an arbitrary real angle into [0, pi/2].

    Reduces mod pi then reflects the upper half; |sin| and |cos| are
    preserved but signs are not, so this is a range normalization, not a
    value-preserving identity.
    """
    y = float(x) % math.pi
    return math.pi - y if y > math.pi / 2 else y


def _arccot(p: float, q: float) -> float:
    """Angle t with cot(t) = p/q, q >= 0; atan2 keeps t in [0, pi] and
    returns 0 for the doubly-degenerate p = q = 0."""
    return math.atan2(q, p)


def _moduli_from_angles(r: float, thetas: Sequence[float]) -> np.ndarray:
    """Cartesian coordinates of (r, thetas) for n = len(thetas) + 1 >= 2."""
    out = np.empty(len(thetas) + 1, dtype=np.float64)
    running = r
    for k, theta in enumerate(thetas):
        out[k] = running * math.cos(theta)
        running *= math.sin(theta)
    out[-1] = running
    return out


@dataclass(frozen=True)
class HypersphericalPoint:
    """Radius plus angles of one point in n-space."""

    n: int
    r: float
    thetas: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "thetas", tuple(float(t) for t in self.thetas))
        object.__setattr__(self, "r", float(self.r))
        if self.n < 1:
            raise DomainError(f"dimension must be >= 1, got {self.n}")
        if not math.isfinite(self.r) or self.r < 0.0:
            raise DomainError(f"radius must be finite and >= 0, got {self.r}")
        if self.n == 1:
            if len(self.thetas) != 1 or self.thetas[0] not in (0.0, math.pi):
                raise DomainError(
                    "n = 1 takes exactly one two-point angle in {0, pi}"
                )
            return
        if len(self.thetas) != self.n - 1:
            raise DomainError(
                f"expected {self.n - 1} angles for n={self.n}, got {len(self.thetas)}"
            )
        for k, t in enumerate(self.thetas[:-1]):
            if not 0.0 <= t <= math.pi:
                raise DomainError(f"polar angle {k + 1} out of [0, pi]: {t}")
        if not 0.0 <= self.thetas[-1] < TWO_PI:
            raise DomainError(f"azimuthal angle out of [0, 2*pi): {self.thetas[-1]}")


@dataclass(frozen=True)
class HypersphericalState:
    """First-sector superposition angles plus one phase circle per outcome."""

    n: int
    thetas: tuple[float, ...]
    phis: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "thetas", tuple(float(t) for t in self.thetas))
        object.__setattr__(self, "phis", tuple(float(p) for p in self.phis))
        if self.n < 1:
            raise DomainError(f"dimension must be >= 1, got {self.n}")
        if len(self.thetas) != self.n - 1:
            raise DomainError(
                f"expected {self.n - 1} superposition angles, got {len(self.thetas)}"
            )
        if len(self.phis) != self.n:
            raise DomainError(f"expected {self.n} phase angles, got {len(self.phis)}")
        for k, t in enumerate(self.thetas):
            if not 0.0 <= t <= math.pi / 2:
                raise DomainError(f"superposition angle {k + 1} out of [0, pi/2]: {t}")
        for k, p in enumerate(self.phis):
            if not 0.0 <= p < TWO_PI:
                raise DomainError(f"phase angle {k + 1} out of [0, 2*pi): {p}")

    def relative_phases(self) -> tuple[float, ...]:
        """Phases of outcomes 2..n relative to the first, in [0, 2*pi)."""
        first = self.phis[0]
        return tuple(wrap_phase(p - first) for p in self.phis[1:])


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit-norm complex amplitude vector."""

    n: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = as_vector(self.amplitudes).copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        if self.n < 1 or amps.shape[0] != self.n:
            raise DomainError(
                f"expected {self.n} amplitudes, got {amps.shape[0]}"
            )
        defect = abs(float(np.sum(np.abs(amps) ** 2)) - 1.0)
        if defect > 1e-12:
            raise ValueError(f"state norm violates unity by {defect:.3e}")

    @classmethod
    def from_components(cls, components) -> "PureState":
        amps = as_vector(components)
        return cls(amps.shape[0], amps)


def to_cartesian(p: HypersphericalPoint) -> np.ndarray:
    """Cartesian coordinates of a hyperspherical point.

    x_k = r * sin(theta_1)...sin(theta_{k-1}) * cos(theta_k) for k < n and
    x_n replaces the final cosine with a sine; the squared coordinates sum
    to r^2.
    """
    if p.n == 1:
        return np.array([p.r * math.cos(p.thetas[0])], dtype=np.float64)
    return _moduli_from_angles(p.r, p.thetas)


def from_cartesian(xs) -> HypersphericalPoint:
    """Recover radius and angles from Cartesian coordinates.

    Polar angles come from arccot of each coordinate over the norm of its
    tail; the azimuthal angle uses the two-argument arctangent of the last
    coordinate pair, wrapped into [0, 2*pi).  Inverse of to_cartesian for
    any nonzero input.
    """
    coords = np.asarray(xs, dtype=np.float64)
    if coords.ndim != 1 or coords.shape[0] < 1:
        raise DomainError(f"expected a 1-D coordinate sequence, got shape {coords.shape}")
    if not np.isfinite(coords).all():
        raise DomainError("coordinates must be finite")
    n = coords.shape[0]
    r = float(np.linalg.norm(coords))
    if r == 0.0:
        raise DegenerateInputError("angles of the zero vector are undefined")
    if n == 1:
        return HypersphericalPoint(1, r, (0.0 if coords[0] > 0 else math.pi,))
    # tail norms sqrt(x_{k+1}^2 + ... + x_n^2) for each k, stable via cumsum
    tail = np.sqrt(np.cumsum(coords[::-1] ** 2)[::-1])
    thetas = [_arccot(float(coords[k]), float(tail[k + 1])) for k in range(n - 2)]
    thetas.append(wrap_phase(math.atan2(coords[-1], coords[-2])))
    return HypersphericalPoint(n, r, tuple(thetas))


def state_from_angles(h: HypersphericalState) -> PureState:
    """Amplitudes c_k = r_k * e^(i*phi_k) with moduli from the first-sector
    angles on the unit hypersphere; unit norm holds by construction."""
    if h.n == 1:
        moduli = np.ones(1)
    else:
        moduli = _moduli_from_angles(1.0, h.thetas)
    amps = moduli * np.exp(1j * np.asarray(h.phis, dtype=np.float64))
    return PureState(h.n, amps)


def angles_from_state(psi: PureState) -> HypersphericalState:
    """Left inverse of state_from_angles on states with nonzero amplitudes.

    theta_k = arccot(|c_k| / tailnorm) lands in [0, pi/2] because both
    arguments are non-negative; a zero amplitude with zero tail yields
    theta = 0 by convention.  phi_k = arg(c_k) in [0, 2*pi) with
    arg(0) = 0.
    """
    moduli = np.abs(psi.amplitudes)
    tail = np.sqrt(np.cumsum((moduli**2)[::-1])[::-1])
    thetas = tuple(
        _arccot(float(moduli[k]), float(tail[k + 1])) for k in range(psi.n - 1)
    )
    phis = tuple(
        0.0 if a == 0 else wrap_phase(math.atan2(a.imag, a.real))
        for a in psi.amplitudes
    )
    return HypersphericalState(psi.n, thetas, phis)
