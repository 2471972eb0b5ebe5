"""Synthetic, schema-conforming input files for the rendering tests."""
import csv

import numpy as np
from figure_gen.schemas import (D_SWEEP_COLUMNS, DYNAMIC_STEPS_COLUMNS,
                                FREQUENCY_SWEEP_COLUMNS, TIMESERIES_COLUMNS)


def write_csv(path, columns, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(columns)
        writer.writerows(rows)
    return path


def make_timeseries(path, n=400, f_s=10.0, d=0.2, t_end=1.0):
    t = np.linspace(0.0, t_end, n)
    rng = np.random.default_rng(4)
    rows = []
    for i, ti in enumerate(t):
        row = {"t": ti, "f_s": f_s, "d": d, "v_h_ref": 2800.0}
        for k, p in enumerate("abc"):
            ph = 2.0 * np.pi * (f_s * ti - k / 3.0)
            row[f"i_s_{p}"] = 100.0 * np.sin(ph)
            row[f"i_circ_{p}"] = 20.0 * np.sin(3.0 * ph)
            row[f"i_u_{p}"] = 60.0 * np.sin(ph + 0.2)
            row[f"i_l_{p}"] = row[f"i_u_{p}"] - row[f"i_s_{p}"]
            row[f"i_h_ref_{p}"] = 50.0 * np.sin(20.0 * ph)
            row[f"i_h_real_{p}"] = row[f"i_h_ref_{p}"] + rng.normal(0, 0.5)
            for y in "ul":
                mean = 350.0 + 8.0 * np.sin(ph)
                row[f"vc_min_{p}{y}"] = mean - 2.0
                row[f"vc_mean_{p}{y}"] = mean
                row[f"vc_max_{p}{y}"] = mean + 2.0
            row[f"n_insert_u_{p}"] = 10.0
            row[f"n_insert_l_{p}"] = 10.0
        rows.append([row[c] for c in TIMESERIES_COLUMNS])
    return write_csv(path, TIMESERIES_COLUMNS, rows)


def make_fig4_table(path):
    rows = [[f, 120.0 / f, 120.0 / f / 7.0, 100.0 / f, 100.0 / f / 7.0]
            for f in (5.0, 10.0, 20.0, 40.0, 60.0)]
    return write_csv(path, FREQUENCY_SWEEP_COLUMNS, rows)


def make_fig9_table(path):
    rows = [[d, 1.0 / (1.0 - 0.5 * d), 48.6 / (1.0 - 0.5 * d),
             48.0 / (1.0 - 0.5 * d), 60.0 + 30.0 * d, 25.0]
            for d in (0.04, 0.2, 0.4, 0.6, 0.8, 1.0)]
    return write_csv(path, D_SWEEP_COLUMNS, rows)


def make_fig8_steps(path):
    rows = [[float(i), d, 0.02 * (i + 1), 50.0 + 10.0 * i]
            for i, d in enumerate((0.04, 0.2, 0.5, 1.0))]
    return write_csv(path, DYNAMIC_STEPS_COLUMNS, rows)


def populate_run_dir(run_dir):
    make_fig4_table(run_dir / "fig4_table.csv")
    for fig in ("fig5", "fig6", "fig7"):
        make_timeseries(run_dir / f"{fig}_timeseries.csv")
    make_timeseries(run_dir / "fig8_dynamic_timeseries.csv", t_end=4.0)
    make_fig8_steps(run_dir / "fig8_dynamic_steps.csv")
    make_fig9_table(run_dir / "fig9_table.csv")
    return run_dir
