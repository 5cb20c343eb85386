"""
CSV emission of sweep rows.

UTF-8, LF line endings, floats with 9 significant digits.
"""
from pathlib import Path
from typing import List, Sequence, Union

import pandas as pd

from ..errors import SweepOutputError
from .models import SweepRow

COLUMNS = ['variable', 'value', 'scheme', 'mean_sum_rate', 'stderr', 'feasible_frac', 'n_trials']
FLOAT_FORMAT = '%.9g'


def rows_to_frame(rows: Sequence[SweepRow]) -> pd.DataFrame:
    frame = pd.DataFrame([row.to_dict() for row in rows], columns=COLUMNS)
    frame['n_trials'] = frame['n_trials'].astype(int)
    return frame


def emit_csv(rows: Sequence[SweepRow], path: Union[str, Path]) -> Path:
    """
    Write rows with the fixed header.

    Raises:
        ValueError: If rows is empty
        SweepOutputError: If the file cannot be written
    """
    if not rows:
        raise ValueError("no rows to write")
    path = Path(path)
    try:
        rows_to_frame(rows).to_csv(
            path,
            index=False,
            float_format=FLOAT_FORMAT,
            lineterminator='\n',
            encoding='utf-8',
        )
    except OSError as e:
        raise SweepOutputError(str(path), e.strerror or str(e)) from e
    return path


def read_csv(path: Union[str, Path]) -> List[SweepRow]:
    """Parse a file written by emit_csv back into rows."""
    frame = pd.read_csv(path, encoding='utf-8', dtype={'variable': str, 'scheme': str})
    missing = [c for c in COLUMNS if c not in frame.columns]
    if missing:
        raise ValueError(f"{path}: missing columns {missing}")
    return [
        SweepRow(
            variable=str(rec['variable']),
            value=float(rec['value']),
            scheme=str(rec['scheme']),
            mean_sum_rate=float(rec['mean_sum_rate']),
            stderr=float(rec['stderr']),
            feasible_frac=float(rec['feasible_frac']),
            n_trials=int(rec['n_trials']),
        )
        for rec in frame.to_dict('records')
    ]
