"""
Geometry of the product of complex unit circles.

Gradient projection, retraction and the step-size bound used by
Riemannian descent.
"""
from typing import Optional

import numpy as np

from ..config import ManifoldConfig
from ..errors import ManifoldPreconditionError
from ..logging import get_logger
from .models import BeamVector, QuadraticObjective

logger = get_logger(__name__)

# Precondition tolerance; retraction itself restores modulus to ~1e-16.
MODULUS_PRECONDITION_TOL = 1e-9


def euclidean_grad(obj: QuadraticObjective, v: np.ndarray) -> np.ndarray:
    """
    Euclidean gradient 2 A v - 2 c of f(v) = v^H A v - 2 Re(c^H v) + const.

    Uses the conjugate (Wirtinger) convention: for v = x + j y the
    result equals df/dx + j df/dy.
    """
    v = np.asarray(v, dtype=complex)
    return 2.0 * (obj.A @ v) - 2.0 * obj.c


def riemannian_grad(eg: np.ndarray, v: np.ndarray) -> np.ndarray:
    """
    Project a Euclidean gradient onto the tangent space at v.

    Args:
        eg: Euclidean gradient
        v: point with unit-modulus entries

    Returns:
        eg - Re(conj(eg) * v) * v

    Raises:
        ManifoldPreconditionError: If v is not unit-modulus
    """
    v = np.asarray(v, dtype=complex)
    eg = np.asarray(eg, dtype=complex)
    deviation = float(np.max(np.abs(np.abs(v) - 1.0))) if v.size else 0.0
    if deviation > MODULUS_PRECONDITION_TOL:
        raise ManifoldPreconditionError(
            f"point is not on the circle manifold (max | |v_q| - 1 | = {deviation:.3e})"
        )
    return eg - np.real(np.conj(eg) * v) * v


def largest_eigenvalue(
    A: np.ndarray,
    tol: float = 1e-8,
    max_iter: int = 10000,
    seed: int = 0,
) -> float:
    """
    Largest eigenvalue of a Hermitian PSD matrix by power iteration.

    Stops when the Rayleigh quotient changes by at most ``tol``
    relative. Returns 0.0 for the zero matrix.
    """
    A = np.asarray(A, dtype=complex)
    n = A.shape[0]
    if n == 0 or not np.any(A):
        return 0.0
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    x /= np.linalg.norm(x)
    lam = 0.0
    for i in range(max_iter):
        y = A @ x
        norm = np.linalg.norm(y)
        if norm == 0.0:
            # Start vector in the null space; restart from all-ones.
            x = np.ones(n, dtype=complex) / np.sqrt(n)
            continue
        x = y / norm
        lam_new = float(np.real(np.vdot(x, A @ x)))
        if abs(lam_new - lam) <= tol * max(abs(lam_new), np.finfo(float).tiny):
            logger.debug(f"Power iteration converged in {i + 1} steps: lambda_max={lam_new:.6e}")
            return lam_new
        lam = lam_new
    logger.warning(f"Power iteration hit {max_iter} steps; lambda_max estimate {lam:.6e}")
    return lam


def max_step(obj: QuadraticObjective, config: Optional[ManifoldConfig] = None) -> float:
    """
    Step size 1 / lambda_max(A).

    Returns ``config.fallback_step`` when A = 0 (f is affine).
    """
    config = config or ManifoldConfig()
    lam = largest_eigenvalue(obj.A, tol=config.power_tol, max_iter=config.power_max_iter)
    if lam <= 0.0:
        return config.fallback_step
    return 1.0 / lam


def retract(v_tilde: np.ndarray, previous: Optional[np.ndarray] = None) -> BeamVector:
    """
    Elementwise normalization v_q / |v_q| back onto the manifold.

    A zero entry takes the corresponding entry of ``previous`` (or 1
    when no previous iterate is given).
    """
    v_tilde = np.asarray(v_tilde, dtype=complex).reshape(-1)
    modulus = np.abs(v_tilde)
    zero = modulus == 0.0
    if np.any(zero):
        fallback = (
            np.ones_like(v_tilde) if previous is None
            else np.asarray(previous, dtype=complex).reshape(-1)
        )
        logger.warning(f"Retraction met {int(zero.sum())} zero entries; reusing previous phases")
        v_tilde = np.where(zero, fallback, v_tilde)
        modulus = np.abs(v_tilde)
    return BeamVector(v_tilde / modulus)
