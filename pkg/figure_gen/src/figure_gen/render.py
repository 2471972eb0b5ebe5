"""Figure layouts and rendering over the mmcdrive CLI output files.

Each figure id maps to a fixed set of input files and a documented layout.
Rendering is read-only with respect to the inputs and performs no data
transformation beyond unit scaling and window cropping.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

from .schemas import (D_SWEEP_COLUMNS, DYNAMIC_STEPS_COLUMNS,  # noqa: E402
                      FREQUENCY_SWEEP_COLUMNS, SchemaError,
                      TIMESERIES_COLUMNS, load_table)

FIGURE_IDS = ("fig4", "fig5", "fig6", "fig7", "fig8", "fig9")

# figure id -> input file names (relative to the run directory) and the
# column schema each file must carry
FIGURE_INPUTS: dict[str, dict[str, tuple[str, tuple[str, ...]]]] = {
    "fig4": {"table": ("fig4_table.csv", FREQUENCY_SWEEP_COLUMNS)},
    "fig5": {"timeseries": ("fig5_timeseries.csv", TIMESERIES_COLUMNS)},
    "fig6": {"timeseries": ("fig6_timeseries.csv", TIMESERIES_COLUMNS)},
    "fig7": {"timeseries": ("fig7_timeseries.csv", TIMESERIES_COLUMNS)},
    "fig8": {"timeseries": ("fig8_dynamic_timeseries.csv",
                            TIMESERIES_COLUMNS),
             "steps": ("fig8_dynamic_steps.csv", DYNAMIC_STEPS_COLUMNS)},
    "fig9": {"table": ("fig9_table.csv", D_SWEEP_COLUMNS)},
}

_DPI = 150
_PHASES = ("a", "b", "c")


@dataclass(frozen=True)
class FigureSpec:
    """One renderable figure: id, resolved input paths, output image path."""

    fig_id: str
    inputs: dict[str, Path]
    out_path: Path
    title: str = ""

    def __post_init__(self) -> None:
        if self.fig_id not in FIGURE_IDS:
            raise ValueError(f"unknown figure id {self.fig_id!r}; "
                             f"expected one of {', '.join(FIGURE_IDS)}")


def _locate(in_dir: Path, filename: str) -> Path | None:
    """Find an input file in the run directory or one level below it."""
    direct = in_dir / filename
    if direct.is_file():
        return direct
    for sub in sorted(p for p in in_dir.iterdir() if p.is_dir()):
        candidate = sub / filename
        if candidate.is_file():
            return candidate
    return None


def build_spec(fig_id: str, in_dir: str | Path,
               out_dir: str | Path) -> FigureSpec:
    """Resolve the input files for one figure; raises if any are missing."""
    in_dir = Path(in_dir)
    if not in_dir.is_dir():
        raise FileNotFoundError(f"input directory not found: {in_dir}")
    if fig_id not in FIGURE_IDS:
        raise ValueError(f"unknown figure id {fig_id!r}; "
                         f"expected one of {', '.join(FIGURE_IDS)}")
    inputs: dict[str, Path] = {}
    missing: list[str] = []
    for role, (filename, _schema) in FIGURE_INPUTS[fig_id].items():
        path = _locate(in_dir, filename)
        if path is None:
            missing.append(filename)
        else:
            inputs[role] = path
    if missing:
        raise FileNotFoundError(
            f"{fig_id}: missing input file(s) {', '.join(missing)} "
            f"under {in_dir}")
    return FigureSpec(fig_id=fig_id, inputs=inputs,
                      out_path=Path(out_dir) / f"{fig_id}.png")


def _load(spec: FigureSpec, role: str) -> pd.DataFrame:
    filename, schema = FIGURE_INPUTS[spec.fig_id][role]
    return load_table(spec.inputs[role], schema)


def _crop_tail(frame: pd.DataFrame, periods: float = 2.0) -> pd.DataFrame:
    """Last ``periods`` fundamental periods of a time series (window crop)."""
    f_s = float(frame["f_s"].iloc[-1])
    if f_s <= 0.0:
        return frame
    t_end = float(frame["t"].iloc[-1])
    return frame[frame["t"] >= t_end - periods / f_s]


def _phase_lines(ax, frame: pd.DataFrame, prefix: str, unit: str) -> None:
    for p in _PHASES:
        ax.plot(frame["t"], frame[f"{prefix}_{p}"], linewidth=0.8,
                label=f"phase {p}")
    ax.set_ylabel(unit)
    ax.legend(loc="upper right", fontsize=7, ncol=3)


def _capacitor_band(ax, frame: pd.DataFrame) -> None:
    """Min/max envelope across all six arms plus the six per-arm means."""
    mins = frame[[c for c in frame.columns if c.startswith("vc_min_")]]
    maxs = frame[[c for c in frame.columns if c.startswith("vc_max_")]]
    ax.fill_between(frame["t"], mins.min(axis=1), maxs.max(axis=1),
                    alpha=0.25, linewidth=0.0, label="min/max envelope")
    for col in (c for c in frame.columns if c.startswith("vc_mean_")):
        ax.plot(frame["t"], frame[col], linewidth=0.6)
    ax.set_ylabel("SM capacitor voltage [V]")
    ax.legend(loc="upper right", fontsize=7)


def _render_fig4(spec: FigureSpec) -> None:
    table = _load(spec, "table").sort_values("f_s")
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(table["f_s"], table["delta_v_analytic_pct"], "o-",
            label="analytic")
    ax.plot(table["f_s"], table["cvr_pp_sim_pct"], "s--", label="simulated")
    ax.set_xlabel("Fundamental frequency [Hz]")
    ax.set_ylabel("Capacitor voltage ripple [% of SM voltage]")
    ax.set_title(spec.title or "Ripple vs. operating frequency")
    ax.grid(True, alpha=0.3)
    ax.legend()
    _save(fig, spec)


def _render_timeseries(spec: FigureSpec, title: str,
                       crop_periods: float | None) -> None:
    frame = _load(spec, "timeseries")
    if crop_periods is not None:
        frame = _crop_tail(frame, crop_periods)
    fig, axes = plt.subplots(4, 1, figsize=(7.0, 8.5), sharex=True)
    _phase_lines(axes[0], frame, "i_s", "Line current [A]")
    _phase_lines(axes[1], frame, "i_circ", "Circulating current [A]")
    _phase_lines(axes[2], frame, "i_u", "Upper-arm current [A]")
    _capacitor_band(axes[3], frame)
    axes[3].set_xlabel("Time [s]")
    axes[0].set_title(title)
    for ax in axes:
        ax.grid(True, alpha=0.3)
    _save(fig, spec)


def _render_fig5(spec: FigureSpec) -> None:
    _render_timeseries(spec, spec.title or
                       "Rated speed, 40 % load, no injection",
                       crop_periods=3.0)


def _render_fig6(spec: FigureSpec) -> None:
    _render_timeseries(spec, spec.title or
                       "Low speed: square CMV + sinusoidal CC injection",
                       crop_periods=None)


def _render_fig7(spec: FigureSpec) -> None:
    _render_timeseries(spec, spec.title or
                       "Low speed: square CMV + trapezoidal CC injection",
                       crop_periods=None)


def _render_fig8(spec: FigureSpec) -> None:
    frame = _load(spec, "timeseries")
    steps = _load(spec, "steps").sort_values("step")
    fig, axes = plt.subplots(3, 1, figsize=(7.0, 7.0), sharex=True)
    _phase_lines(axes[0], frame, "i_h_real", "Injected CC [A]")
    _capacitor_band(axes[1], frame)
    axes[2].plot(frame["t"], frame["d"], drawstyle="steps-post")
    axes[2].set_ylabel("Slope parameter d")
    axes[2].set_xlabel("Time [s]")
    # step boundaries and measured settling times from the steps table
    durations = np.diff(frame["t"].iloc[[0, -1]])[0] / (len(steps) + 1)
    for _, row in steps.iterrows():
        t0 = (row["step"] + 1.0) * durations
        for ax in axes:
            ax.axvline(t0, color="grey", linewidth=0.6, linestyle=":")
        axes[0].annotate(f"settle {row['settle_time_s']:.2f} s",
                         (t0, 0.0), fontsize=7, rotation=90,
                         textcoords="offset points", xytext=(3, 10))
    axes[0].set_title("Dynamic slope-parameter steps")
    for ax in axes:
        ax.grid(True, alpha=0.3)
    _save(fig, spec)


def _render_fig9(spec: FigureSpec) -> None:
    table = _load(spec, "table").sort_values("d")
    fig, ax_k = plt.subplots(figsize=(6.0, 4.0))
    ax_i = ax_k.twinx()
    line_k, = ax_k.plot(table["d"], table["k_theory"], "k-",
                        label="k(d) theory (left)")
    line_t, = ax_i.plot(table["d"], table["i_h_theory"], "b--",
                        label="injected CC peak, theory (right)")
    line_s, = ax_i.plot(table["d"], table["i_h_sim"], "rs",
                        label="injected CC peak, simulated (right)")
    ax_k.set_xlabel("Slope parameter d")
    ax_k.set_ylabel("Scaling factor k")
    ax_i.set_ylabel("Injected CC peak [A]")
    ax_k.set_title(spec.title or "Scaling factor and injected current vs. d")
    ax_k.grid(True, alpha=0.3)
    ax_k.legend(handles=[line_k, line_t, line_s], loc="upper left",
                fontsize=8)
    _save(fig, spec)


def _save(fig, spec: FigureSpec) -> None:
    spec.out_path.parent.mkdir(parents=True, exist_ok=True)
    # fixed dpi and stripped metadata keep re-renders byte-stable
    fig.savefig(spec.out_path, dpi=_DPI, metadata={"Software": None})
    plt.close(fig)


_RENDERERS = {
    "fig4": _render_fig4,
    "fig5": _render_fig5,
    "fig6": _render_fig6,
    "fig7": _render_fig7,
    "fig8": _render_fig8,
    "fig9": _render_fig9,
}


def render_figure(spec: FigureSpec) -> Path:
    """Render one figure to ``spec.out_path``; returns the image path.

    Raises :class:`SchemaError` if an input does not match its schema; no
    image file is written in that case.
    """
    _RENDERERS[spec.fig_id](spec)
    return spec.out_path


@dataclass
class RenderReport:
    """Outcome of :func:`render_all`: images written and per-figure warnings."""

    images: list[Path] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def render_all(in_dir: str | Path, out_dir: str | Path) -> RenderReport:
    """Render every figure whose inputs are present in ``in_dir``.

    Missing or invalid inputs are skipped with a warning; the input
    directory itself must exist.
    """
    in_dir = Path(in_dir)
    if not in_dir.is_dir():
        raise FileNotFoundError(f"input directory not found: {in_dir}")
    report = RenderReport()
    for fig_id in FIGURE_IDS:
        try:
            spec = build_spec(fig_id, in_dir, out_dir)
            report.images.append(render_figure(spec))
        except FileNotFoundError as exc:
            report.warnings.append(str(exc))
        except SchemaError as exc:
            report.warnings.append(f"{fig_id}: {exc}")
    return report
