"""Parameter sweeps over circulant families, with CSV and SVG output.

Four experiments are available:

``phonons_vs_n``
    ``<N>`` and ``c`` at fixed ``beta`` against ``n``, with ``l = floor((n/2)^r)``.
``cap_vs_n``
    ``cap / n`` against ``n`` for the same families.
``heat_vs_l``
    ``c`` at fixed ``n`` and ``beta`` against the neighbour count ``l``.
``bound_vs_T``
    Exact ``c`` and its low-temperature bound against ``T = 1/beta``.
"""
from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Sequence

import numpy as np

from .bounds import heat_bound_value
from .capacity import kirchhoff_index
from .circulant import circulant_eigenvalues
from .graph import GeneratorSpec, generate, laplacian
from .spectral import eigendecompose
from .thermo import thermo_point

__all__ = [
    "EXPERIMENTS",
    "SweepConfig",
    "parse_range",
    "neighbours_for_power",
    "family_eigenvalues",
    "format_number",
    "phonons_vs_n",
    "cap_vs_n",
    "heat_vs_l",
    "bound_vs_T",
    "run_sweep",
    "write_csv",
    "plot_rows",
]

EXPERIMENTS = ("phonons_vs_n", "cap_vs_n", "heat_vs_l", "bound_vs_T")

DEFAULT_R = (0.0, 0.2, 0.4, 0.6, 0.8, 1.0)


def parse_range(text: str, *, integer: bool = False) -> np.ndarray:
    """``start:stop:step`` (stop inclusive) or a comma list of values."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"range must be start:stop:step, got {text!r}")
        start, stop, step = (float(p) for p in parts)
        if step <= 0 or stop < start:
            raise ValueError(f"empty or invalid range {text!r}")
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        values = start + step * np.arange(count)
    else:
        values = np.array([float(v) for v in text.split(",") if v.strip()])
        if values.size == 0:
            raise ValueError("empty value list")
    if integer:
        if not np.allclose(values, np.round(values)):
            raise ValueError(f"range {text!r} must contain integers")
        return np.round(values).astype(int)
    return values


def neighbours_for_power(n: int, r: float) -> int:
    """``l = floor((n/2)^r)``, clamped to the valid range ``1 <= l <= (n-1)//2``."""
    l = int(math.floor((n / 2) ** r + 1e-12))
    return max(1, min(l, (n - 1) // 2))


@lru_cache(maxsize=64)
def _complete_eigenvalues(n: int) -> np.ndarray:
    w = eigendecompose(laplacian(generate(GeneratorSpec("complete", n)))).eigenvalues
    return np.array(w)


def family_eigenvalues(n: int, l: int) -> np.ndarray:
    """Laplacian spectrum of ``Ci(n, l)``.

    Closed form, except for the complete graph ``2l + 1 == n`` which goes
    through the dense eigensolver.
    """
    if 2 * l + 1 == n:
        return _complete_eigenvalues(n)
    return np.array(circulant_eigenvalues(n, l).eigenvalues)


def format_number(v) -> str:
    """12 significant digits, scientific notation outside ``[1e-6, 1e6)``."""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    v = float(v)
    if v == 0.0:
        return "0"
    if abs(v) >= 1e6 or abs(v) < 1e-6:
        return np.format_float_scientific(v, precision=11, unique=False, trim="-")
    return np.format_float_positional(v, precision=12, unique=False, fractional=False, trim="-")


@dataclass
class SweepConfig:
    """Settings for one experiment; unused ranges are ignored."""

    experiment: str
    n_range: Sequence[int] = field(default_factory=lambda: list(range(10, 1001, 10)))
    l_range: Sequence[int] | None = None
    T_range: Sequence[float] = field(default_factory=lambda: list(np.round(np.arange(1, 301) * 0.01, 10)))
    r_values: Sequence[float] = DEFAULT_R
    beta: float = 1.0
    n: int = 1000
    output_dir: str | os.PathLike = "."
    log_scale: bool = False
    include_complete: bool = False

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"unknown experiment {self.experiment!r}; choose from {EXPERIMENTS}")
        if not self.beta > 0:
            raise ValueError("beta must be positive")
        if len(self.r_values) == 0 or any(not 0 <= r <= 1 for r in self.r_values):
            raise ValueError("r values must be a nonempty subset of [0, 1]")
        if len(self.n_range) == 0 or min(self.n_range) < 3:
            raise ValueError("n range must be nonempty with n >= 3")
        if len(self.T_range) == 0 or min(self.T_range) <= 0:
            raise ValueError("temperatures must be positive")
        if self.l_range is not None:
            if len(self.l_range) == 0 or min(self.l_range) < 1:
                raise ValueError("l range must be nonempty with l >= 1")
            if self.experiment in ("heat_vs_l", "bound_vs_T") and 2 * max(self.l_range) >= self.n:
                raise ValueError(f"every l must satisfy 2l < n = {self.n}")


def phonons_vs_n(ns, r_values, beta: float) -> list[dict]:
    rows = []
    for r in r_values:
        for n in ns:
            l = neighbours_for_power(int(n), r)
            tp = thermo_point(family_eigenvalues(int(n), l), beta)
            rows.append({"r": r, "n": int(n), "l": l, "beta": beta, "avg_N": tp.avg_N, "heat": tp.heat})
    return rows


def cap_vs_n(ns, r_values) -> list[dict]:
    rows = []
    for r in r_values:
        for n in ns:
            l = neighbours_for_power(int(n), r)
            cap = kirchhoff_index(family_eigenvalues(int(n), l))
            rows.append({"r": r, "n": int(n), "l": l, "cap_avg": cap, "cap_ratio": cap / n})
    return rows


def heat_vs_l(n: int, ls, beta: float, *, include_complete: bool = False) -> list[dict]:
    rows = []
    for l in ls:
        tp = thermo_point(family_eigenvalues(n, int(l)), beta)
        kind = "complete" if 2 * l + 1 == n else "circulant"
        rows.append({"n": n, "l": int(l), "beta": beta, "heat": tp.heat, "graph": kind})
    if include_complete and not (n % 2 == 1 and rows and rows[-1]["graph"] == "complete"):
        tp = thermo_point(_complete_eigenvalues(n), beta)
        rows.append({"n": n, "l": n // 2, "beta": beta, "heat": tp.heat, "graph": "complete"})
    return rows


def bound_vs_T(n: int, ls, temperatures) -> list[dict]:
    """Exact specific heat, its bound, and the validity threshold ``sqrt(n / cap)``."""
    rows = []
    for l in ls:
        lam = family_eigenvalues(n, int(l))
        cap = kirchhoff_index(lam)
        t_max = math.sqrt(n / cap)
        for T in temperatures:
            beta = 1.0 / T
            rows.append({
                "n": n,
                "l": int(l),
                "T": float(T),
                "beta": beta,
                "exact": thermo_point(lam, beta).heat,
                "bound": heat_bound_value(cap, n, beta),
                "threshold_T": t_max,
                "valid": T < t_max,
            })
    return rows


def write_csv(rows: list[dict], path) -> Path:
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        columns = list(rows[0])
        writer.writerow(columns)
        for row in rows:
            writer.writerow(
                [row[c] if isinstance(row[c], str) else format_number(row[c]) for c in columns]
            )
    return path


def _series(rows, key, x, y):
    groups: dict = {}
    for row in rows:
        groups.setdefault(row[key], ([], []))
        groups[row[key]][0].append(row[x])
        groups[row[key]][1].append(row[y])
    return groups


def plot_rows(experiment: str, rows: list[dict], path, *, log_scale: bool = False) -> Path:
    """Render a sweep as a self-contained SVG file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    plt.rcParams["svg.fonttype"] = "path"
    plt.rcParams["svg.hashsalt"] = "phonon-graphs"
    if experiment == "phonons_vs_n":
        fig, axes = plt.subplots(2, 1, figsize=(6.5, 7), sharex=True)
        for ax, y, label in zip(axes, ("avg_N", "heat"), (r"$\langle N\rangle$", r"$c(\beta)$")):
            for r, (xs, ys) in _series(rows, "r", "n", y).items():
                ax.plot(xs, ys, label=f"r = {r:g}")
            ax.set_ylabel(label)
            if log_scale:
                ax.set_yscale("log")
        axes[0].legend(fontsize="small")
        axes[-1].set_xlabel("n")
    elif experiment == "cap_vs_n":
        fig, ax = plt.subplots(figsize=(6.5, 4.5))
        for r, (xs, ys) in _series(rows, "r", "n", "cap_ratio").items():
            ax.plot(xs, ys, label=f"r = {r:g}")
        ax.set_xlabel("n")
        ax.set_ylabel(r"$\overline{cap}/n$")
        ax.set_yscale("log")
        ax.legend(fontsize="small")
    elif experiment == "heat_vs_l":
        fig, ax = plt.subplots(figsize=(6.5, 4.5))
        ax.plot([r["l"] for r in rows], [r["heat"] for r in rows], ".", ms=3)
        ax.set_xlabel("l")
        ax.set_ylabel(r"$c(\beta)$")
        ax.set_title(f"n = {rows[0]['n']}, beta = {rows[0]['beta']:g}")
        if log_scale:
            ax.set_yscale("log")
    else:
        groups = _series(rows, "l", "T", "exact")
        bounds = _series(rows, "l", "T", "bound")
        fig, axes = plt.subplots(1, len(groups), figsize=(4 * len(groups), 3.6), squeeze=False)
        for ax, (l, (ts, exact)) in zip(axes[0], groups.items()):
            ax.plot(ts, exact, "g-", label="exact")
            ax.plot(ts, bounds[l][1], "b--", label="bound")
            t_max = next(r["threshold_T"] for r in rows if r["l"] == l)
            ax.axvline(t_max, color="k", lw=0.8)
            ax.set_title(f"l = {l}")
            ax.set_xlabel("T")
            if log_scale:
                ax.set_yscale("log")
        axes[0][0].set_ylabel(r"$c(\beta)$")
        axes[0][0].legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return path


def run_sweep(config: SweepConfig) -> tuple[list[dict], Path, Path]:
    """Run one experiment and write ``<experiment>.csv`` and ``.svg`` into ``output_dir``."""
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    if not os.access(out, os.W_OK):
        raise PermissionError(f"output directory {out} is not writable")
    exp = config.experiment
    if exp == "phonons_vs_n":
        rows = phonons_vs_n(config.n_range, config.r_values, config.beta)
    elif exp == "cap_vs_n":
        rows = cap_vs_n(config.n_range, config.r_values)
    elif exp == "heat_vs_l":
        ls = config.l_range if config.l_range is not None else range(1, (config.n - 1) // 2 + 1)
        rows = heat_vs_l(config.n, ls, config.beta, include_complete=config.include_complete)
    else:
        ls = config.l_range if config.l_range is not None else (100, 200, 300, 400)
        rows = bound_vs_T(config.n, ls, config.T_range)
    for row in rows:
        for k, v in row.items():
            if isinstance(v, float) and not math.isfinite(v):
                raise ArithmeticError(f"non-finite {k} in sweep row {row}")
    csv_path = write_csv(rows, out / f"{exp}.csv")
    svg_path = plot_rows(exp, rows, out / f"{exp}.svg", log_scale=config.log_scale)
    return rows, csv_path, svg_path
