"""Logging utilities for risnoma modules.

Loggers are grouped per solver subsystem: a module logger such as
``risnoma.core.sca.barrier`` is folded into ``risnoma.sca`` so one level
setting covers a whole stage of the optimizer.
"""

import logging
from typing import List, Optional

ROOT_LOGGER = 'risnoma'

SUBSYSTEMS = (
    'channel',
    'power',
    'sca',
    'manifold',
    'optimization',
    'baselines',
    'experiments',
)


def logger_name(name: Optional[str] = None) -> str:
    """
    Resolve a module path or subsystem name to its risnoma logger name.

    Examples:
        >>> logger_name('risnoma.core.sca.barrier')
        'risnoma.sca'
        >>> logger_name('manifold')
        'risnoma.manifold'
        >>> logger_name('risnoma.cli.main')
        'risnoma.cli.main'
    """
    if not name:
        return ROOT_LOGGER
    parts = name.split('.')
    if parts[0] == ROOT_LOGGER:
        parts = parts[1:]
    if parts[:1] == ['core']:
        parts = parts[1:]
    for part in parts:
        if part in SUBSYSTEMS:
            return f'{ROOT_LOGGER}.{part}'
    return '.'.join([ROOT_LOGGER, *parts])


def logger_names() -> List[str]:
    """The package logger and one logger per subsystem."""
    return [ROOT_LOGGER, *(f'{ROOT_LOGGER}.{s}' for s in SUBSYSTEMS)]


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Get a subsystem logger that inherits from the root logger.

    Works with basicConfig() without an explicit setup_logging() call.
    The logger will:
    - Propagate to root logger (default behavior)
    - Only set a default level if root logger has no handlers

    Args:
        name: Module path (typically __name__) or subsystem name

    Returns:
        Logger named by logger_name(name)
    """
    logger = logging.getLogger(logger_name(name))
    logger.propagate = True

    # basicConfig hasn't been called yet
    if not logging.getLogger().handlers:
        logger.setLevel(logging.WARNING)

    return logger
