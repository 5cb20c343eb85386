"""
Data models for manifold module.
"""
from dataclasses import dataclass, field
from typing import List

import numpy as np

UNIT_MODULUS_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class BeamVector:
    """
    Passive beamforming vector on the product of unit circles.

    ``v`` has length Q_ris + 1: Q_ris phase shifts followed by the
    direct-path entry. ``theta`` is exported relative to the last entry.
    """
    v: np.ndarray

    def __post_init__(self):
        v = np.array(self.v, dtype=complex).reshape(-1)
        v.setflags(write=False)
        object.__setattr__(self, 'v', v)

    @classmethod
    def from_phases(cls, theta: np.ndarray) -> 'BeamVector':
        """Build the canonical vector [e^{j theta_1} ... e^{j theta_Q}, 1]."""
        theta = np.asarray(theta, dtype=float).reshape(-1)
        return cls(np.append(np.exp(1j * theta), 1.0 + 0j))

    @classmethod
    def random(cls, q_ris: int, rng: np.random.Generator) -> 'BeamVector':
        """Phases uniform on [0, 2pi) for all Q_ris + 1 entries."""
        return cls(np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, size=q_ris + 1)))

    @property
    def size(self) -> int:
        return int(self.v.shape[0])

    @property
    def q_ris(self) -> int:
        return self.size - 1

    @property
    def max_modulus_error(self) -> float:
        return float(np.max(np.abs(np.abs(self.v) - 1.0)))

    def is_unit_modulus(self, tol: float = UNIT_MODULUS_TOL) -> bool:
        return self.max_modulus_error <= tol

    def canonical(self) -> 'BeamVector':
        """Rotate so the direct-path entry equals 1."""
        ref = self.v[-1]
        return BeamVector(self.v * (np.conj(ref) / np.abs(ref)))

    @property
    def theta(self) -> np.ndarray:
        """Phase shifts theta_q in [0, 2pi), relative to the last entry."""
        rel = np.angle(self.v[:-1]) - np.angle(self.v[-1])
        return np.mod(rel, 2.0 * np.pi)

    @property
    def phase_matrix_diagonal(self) -> np.ndarray:
        """Diagonal of Theta, i.e. e^{j theta_q}."""
        return np.exp(1j * self.theta)


@dataclass(frozen=True, eq=False)
class QuadraticObjective:
    """
    f(v) = v^H A v - 2 Re(c^H v) + const, equal to sum_k |a_k - b_k^H v|^2.
    """
    A: np.ndarray
    c: np.ndarray
    const: float

    @classmethod
    def from_auxiliary(cls, a: np.ndarray, b: np.ndarray) -> 'QuadraticObjective':
        """
        Build from auxiliary variables a (K,) and channel rows b (K, Q+1).

        A = sum_k b_k b_k^H, c = sum_k a_k b_k, const = sum_k |a_k|^2.
        """
        a = np.asarray(a, dtype=complex).reshape(-1)
        b = np.asarray(b, dtype=complex)
        A = b.T @ b.conj()
        A = 0.5 * (A + A.conj().T)
        return cls(A=A, c=b.T @ a, const=float(np.sum(np.abs(a) ** 2)))

    @property
    def size(self) -> int:
        return int(self.c.shape[0])

    def value(self, v: np.ndarray) -> float:
        v = np.asarray(v, dtype=complex)
        quad = np.real(np.vdot(v, self.A @ v))
        lin = np.real(np.vdot(self.c, v))
        # Clamp rounding below zero; f is a sum of squares.
        return max(float(quad - 2.0 * lin + self.const), 0.0)


@dataclass
class DescentResult:
    """
    Output of Riemannian descent.

    Attributes:
        beam: final (best) iterate
        trace: objective values, one per accepted iterate including v0
        converged: False when max_iter was reached
        iterations: number of gradient steps taken
        step: base step size used
        halvings: total backtracking halvings
        iterates: accepted iterates, filled only on request
    """
    beam: BeamVector
    trace: List[float] = field(default_factory=list)
    converged: bool = True
    iterations: int = 0
    step: float = 0.0
    halvings: int = 0
    iterates: List[BeamVector] = field(default_factory=list)
