"""Render vector figures from motzkinlab CSV output.

This package never imports motzkinlab: it consumes only the published CSV
contracts, so the two components stay independently buildable.

Two input schemas are understood:

* sweep CSV   — header ``s,t,n,entropy_nats,mstar,logN,status``; rows whose
  status is not ``ok`` are skipped (kinds ``entropy-vs-n``, ``mstar-vs-n``).
* Schmidt table — header ``m,logM,p`` (kind ``p-vs-m``).

Rendering is a pure function of the CSV: a fixed style, no timestamps and a
fixed SVG hash salt make reruns byte-identical.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("svg")
matplotlib.rcParams["svg.hashsalt"] = "motzkinfig"

from matplotlib.figure import Figure  # noqa: E402

KINDS = ("entropy-vs-n", "p-vs-m", "mstar-vs-n")

SWEEP_COLUMNS = ("s", "t", "n", "entropy_nats", "mstar", "logN", "status")
SCHMIDT_COLUMNS = ("m", "logM", "p")


@dataclass(frozen=True)
class FigureSpec:
    in_path: str
    kind: str
    out_path: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}; choose from {KINDS}")


def _read_csv(path: str, required: tuple[str, ...]) -> list[dict[str, str]]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in required if c not in header]
        if missing:
            raise ValueError(f"{path} is missing required columns {missing}")
        return list(reader)


def _sweep_curves(path: str, y_column: str) -> dict[tuple[int, float], list[tuple[int, float]]]:
    """Group ok-rows of a sweep CSV into per-(s, t) curves sorted in n."""
    curves: dict[tuple[int, float], list[tuple[int, float]]] = {}
    for row in _read_csv(path, SWEEP_COLUMNS):
        if row["status"] != "ok":
            continue
        key = (int(row["s"]), float(row["t"]))
        curves.setdefault(key, []).append((int(row["n"]), float(row[y_column])))
    for pts in curves.values():
        pts.sort()
    if not curves:
        raise ValueError(f"{path} holds no usable rows (empty selection)")
    return curves


def _schmidt_rows(path: str) -> list[tuple[int, float]]:
    rows = [(int(r["m"]), float(r["p"])) for r in _read_csv(path, SCHMIDT_COLUMNS)]
    if not rows:
        raise ValueError(f"{path} holds no usable rows (empty selection)")
    return sorted(rows)


def _new_axes():
    fig = Figure(figsize=(6.0, 4.0))
    return fig, fig.add_subplot(111)


def _plot_sweep(path: str, y_column: str, y_label: str):
    curves = _sweep_curves(path, y_column)
    fig, ax = _new_axes()
    for (s, t), pts in sorted(curves.items()):
        (line,) = ax.plot([n for n, _ in pts], [y for _, y in pts],
                          label=f"s={s}, t={t:g}")
        line.set_gid(f"curve-s{s}-t{t:g}")
    ax.set_xlabel("n")
    ax.set_ylabel(y_label)
    ax.legend()
    return fig


def _plot_schmidt(path: str):
    rows = _schmidt_rows(path)
    fig, ax = _new_axes()
    (line,) = ax.plot([m for m, _ in rows], [p for _, p in rows])
    line.set_gid("curve-schmidt")
    ax.set_xlabel("m")
    ax.set_ylabel("p_{n,m}")
    return fig


def render(spec: FigureSpec) -> Path:
    """Write the requested vector figure; returns the output path.

    All CSV validation happens before the output file is touched, so a bad
    input never leaves a partial image behind.
    """
    if spec.kind == "entropy-vs-n":
        fig = _plot_sweep(spec.in_path, "entropy_nats", "S_n")
    elif spec.kind == "mstar-vs-n":
        fig = _plot_sweep(spec.in_path, "mstar", "m*")
    else:
        fig = _plot_schmidt(spec.in_path)
    out = Path(spec.out_path)
    fig.savefig(out, format="svg", metadata={"Date": None})
    return out
