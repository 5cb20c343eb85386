"""risnoma CLI - sweeps, presets and single-realization solves."""
from .main import app

__all__ = ['app']
