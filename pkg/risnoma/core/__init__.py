"""
risnoma core

Channel model, power allocation, SCA and manifold solvers, the
alternating optimizer, baselines and the experiment harness.
"""
__version__ = '1.0.0'

__all__ = [
    '__version__',
]
