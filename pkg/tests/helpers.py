"""Shared test helpers."""
import numpy as np


def random_complex(rng, *shape):
    """CN(0, 1) samples."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_unit(rng, n):
    """Unit-modulus vector with uniform phases."""
    return np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, size=n))
