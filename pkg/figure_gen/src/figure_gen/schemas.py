"""Documented input-file schemas and validated CSV loading.

The column lists mirror the file formats written by the ``mmcdrive`` CLI.
They are restated here on purpose: this package consumes the files, not the
library that produced them, so the schema is part of the external contract.
"""
from __future__ import annotations

from pathlib import Path

import pandas as pd

_PHASES = ("a", "b", "c")
_ARMS = ("u", "l")

TIMESERIES_COLUMNS: tuple[str, ...] = (
    ("t",)
    + tuple(f"i_s_{p}" for p in _PHASES)
    + tuple(f"i_circ_{p}" for p in _PHASES)
    + tuple(f"i_u_{p}" for p in _PHASES)
    + tuple(f"i_l_{p}" for p in _PHASES)
    + tuple(f"i_h_ref_{p}" for p in _PHASES)
    + tuple(f"i_h_real_{p}" for p in _PHASES)
    + ("v_h_ref",)
    + tuple(f"vc_min_{p}{y}" for p in _PHASES for y in _ARMS)
    + tuple(f"vc_mean_{p}{y}" for p in _PHASES for y in _ARMS)
    + tuple(f"vc_max_{p}{y}" for p in _PHASES for y in _ARMS)
    + tuple(f"n_insert_u_{p}" for p in _PHASES)
    + tuple(f"n_insert_l_{p}" for p in _PHASES)
    + ("f_s", "d")
)

FREQUENCY_SWEEP_COLUMNS: tuple[str, ...] = (
    "f_s", "delta_v_analytic", "delta_v_analytic_pct",
    "cvr_pp_sim", "cvr_pp_sim_pct",
)

D_SWEEP_COLUMNS: tuple[str, ...] = (
    "d", "k_theory", "i_h_theory", "i_h_sim", "cc_peak_raw", "cvr_pp_sim",
)

DYNAMIC_STEPS_COLUMNS: tuple[str, ...] = (
    "step", "d", "settle_time_s", "steady_peak_a",
)


class SchemaError(Exception):
    """Input file does not match the documented schema.

    ``column`` names the first offending column when the mismatch is
    column-level (missing or unexpected); it is ``None`` for structural
    problems such as an empty table.
    """

    def __init__(self, path: Path, message: str,
                 column: str | None = None) -> None:
        self.path = Path(path)
        self.column = column
        super().__init__(f"{self.path}: {message}")


def load_table(path: str | Path,
               expected_columns: tuple[str, ...]) -> pd.DataFrame:
    """Read a CSV and verify it carries exactly the expected columns.

    Raises :class:`SchemaError` naming the first missing or unexpected
    column, and rejects tables with no data rows.
    """
    path = Path(path)
    try:
        frame = pd.read_csv(path)
    except pd.errors.EmptyDataError:
        raise SchemaError(path, "file is empty (no header)") from None
    have = list(frame.columns)
    for col in expected_columns:
        if col not in have:
            raise SchemaError(path, f"missing required column {col!r}",
                              column=col)
    for col in have:
        if col not in expected_columns:
            raise SchemaError(path, f"unexpected column {col!r}", column=col)
    if len(frame) == 0:
        raise SchemaError(path, "no data rows")
    non_numeric = [c for c in have
                   if not pd.api.types.is_numeric_dtype(frame[c])]
    if non_numeric:
        raise SchemaError(path, f"non-numeric data in column "
                                f"{non_numeric[0]!r}", column=non_numeric[0])
    return frame
