"""Static-figure rendering over the file outputs of the mmcdrive CLI."""
from .render import (FIGURE_IDS, FIGURE_INPUTS, FigureSpec, RenderReport,
                     build_spec, render_all, render_figure)
from .schemas import (D_SWEEP_COLUMNS, DYNAMIC_STEPS_COLUMNS,
                      FREQUENCY_SWEEP_COLUMNS, SchemaError,
                      TIMESERIES_COLUMNS, load_table)

__all__ = [
    "FIGURE_IDS", "FIGURE_INPUTS", "FigureSpec", "RenderReport",
    "build_spec", "render_all", "render_figure",
    "D_SWEEP_COLUMNS", "DYNAMIC_STEPS_COLUMNS", "FREQUENCY_SWEEP_COLUMNS",
    "SchemaError", "TIMESERIES_COLUMNS", "load_table",
]
