"""
Manifold module.

Riemannian descent on the product of complex unit circles for the
passive beamforming subproblem.

Example:
    >>> obj = QuadraticObjective.from_auxiliary(a, channels.b)
    >>> result = descend(obj, BeamVector.random(q_ris, rng))
    >>> result.beam.theta
"""
from .models import BeamVector, QuadraticObjective, DescentResult, UNIT_MODULUS_TOL
from .circle import (
    euclidean_grad,
    riemannian_grad,
    largest_eigenvalue,
    max_step,
    retract,
)
from .descent import descend

__all__ = [
    # Models
    'BeamVector',
    'QuadraticObjective',
    'DescentResult',
    'UNIT_MODULUS_TOL',
    # Circle geometry
    'euclidean_grad',
    'riemannian_grad',
    'largest_eigenvalue',
    'max_step',
    'retract',
    # Descent
    'descend',
]
