"""Parameter-grid sweeps over (s, t) and scaling fits of the entropy curves.

Plan files are line-oriented ``key=value`` text:

    grid=1,1;2,0.5;2,2        # semicolon-separated s,t pairs
    n=10,20,50:300:50         # ints and start:stop:step ranges
    out=sweep.csv
    jobs=1

Output CSV schema: ``s,t,n,entropy_nats,mstar,logN,status``.  Per-point
failures become error rows so a long sweep never dies on one bad point.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from motzkinlab import schmidt

CSV_HEADER = "s,t,n,entropy_nats,mstar,logN,status"


@dataclass(frozen=True)
class SweepPlan:
    grid: tuple[tuple[int, float], ...]
    n_samples: tuple[int, ...]
    out: str | None = None
    jobs: int = 1

    def __post_init__(self):
        for s, t in self.grid:
            if s < 1 or int(s) != s:
                raise ValueError(f"s must be a positive integer, got {s}")
            if not t > 0:
                raise ValueError(f"t must be positive, got {t}")
        if any(n < 1 for n in self.n_samples):
            raise ValueError("all n samples must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


def _parse_n_tokens(text: str) -> tuple[int, ...]:
    out: list[int] = []
    for tok in text.split(","):
        tok = tok.strip()
        if ":" in tok:
            parts = [int(p) for p in tok.split(":")]
            start, stop = parts[0], parts[1]
            step = parts[2] if len(parts) > 2 else 1
            out.extend(range(start, stop + 1, step))
        elif tok:
            out.append(int(tok))
    return tuple(sorted(set(out)))


def parse_plan(text: str) -> SweepPlan:
    grid: list[tuple[int, float]] = []
    n_samples: tuple[int, ...] = ()
    out = None
    jobs = 1
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key == "grid":
            for pair in val.split(";"):
                s_str, t_str = pair.split(",")
                grid.append((int(s_str), float(t_str)))
        elif key == "n":
            n_samples = _parse_n_tokens(val)
        elif key == "out":
            out = val
        elif key == "jobs":
            jobs = int(val)
        else:
            raise ValueError(f"unknown plan key {key!r}")
    if not grid or not n_samples:
        raise ValueError("plan needs at least a grid= and an n= line")
    return SweepPlan(tuple(grid), n_samples, out, jobs)


def load_plan(path: str | Path) -> SweepPlan:
    return parse_plan(Path(path).read_text())


def _rows_for_point(args: tuple[int, float, tuple[int, ...]]) -> list[str]:
    s, t, n_samples = args
    wanted = set(n_samples)
    rows = []
    try:
        for pt in schmidt.entropy_curve(max(n_samples), s, t):
            if pt.n in wanted:
                rows.append(
                    f"{s},{t!r},{pt.n},{pt.entropy!r},{pt.mstar},{pt.log_norm!r},ok"
                )
    except Exception as exc:  # error rows keep the sweep alive
        reason = str(exc).replace(",", ";").replace("\n", " ")
        for n in n_samples:
            rows.append(f"{s},{t!r},{n},,,,error:{reason}")
    return rows


def run_sweep(plan: SweepPlan, out: str | Path | None = None) -> list[str]:
    """Execute the plan; returns the CSV rows (plan order) and optionally
    writes them atomically to ``out`` (or the plan's own output path)."""
    points = [(s, t, plan.n_samples) for s, t in plan.grid]
    if plan.jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=plan.jobs) as pool:
            chunks = list(pool.map(_rows_for_point, points))
    else:
        chunks = [_rows_for_point(p) for p in points]
    rows = [row for chunk in chunks for row in chunk]

    target = out if out is not None else plan.out
    if target is not None:
        path = Path(target)
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text(CSV_HEADER + "\n" + "\n".join(rows) + "\n")
        tmp.replace(path)
    return rows


# --- scaling fits -------------------------------------------------------------

FIT_MODELS = ("linear", "sqrt", "log", "constant")


@dataclass(frozen=True)
class FitResult:
    model: str
    coefficient: float
    residual: float  # RMS
    n_range: tuple[int, int]


def _regressor(model: str, n: np.ndarray) -> np.ndarray | None:
    if model == "linear":
        return n
    if model == "sqrt":
        return np.sqrt(n)
    if model == "log":
        return np.log(n)
    if model == "constant":
        return None
    raise ValueError(f"unknown fit model {model!r}; choose from {FIT_MODELS}")


def fit_scaling(rows: list[tuple[int, float]], model: str) -> FitResult:
    """Least-squares fit of S_n against the chosen model (with intercept).

    ``rows`` is a slice of (n, entropy) pairs; at least 10 are required.
    For 'constant' the coefficient is the fitted mean.
    """
    if len(rows) < 10:
        raise ValueError(f"need >= 10 rows to fit, got {len(rows)}")
    n = np.array([r[0] for r in rows], dtype=float)
    y = np.array([r[1] for r in rows], dtype=float)
    if np.all(n == n[0]):
        raise ValueError("degenerate slice: all n equal")
    g = _regressor(model, n)
    if g is None:
        coef = float(y.mean())
        pred = np.full_like(y, coef)
    else:
        design = np.column_stack([g, np.ones_like(g)])
        sol, *_ = np.linalg.lstsq(design, y, rcond=None)
        coef = float(sol[0])
        pred = design @ sol
    rms = float(math.sqrt(np.mean((y - pred) ** 2)))
    return FitResult(model, coef, rms, (int(n.min()), int(n.max())))


def read_sweep_rows(
    path: str | Path,
    s: int | None = None,
    t: float | None = None,
    n_min: int | None = None,
    n_max: int | None = None,
) -> list[tuple[int, float]]:
    """Load (n, entropy) pairs from a sweep CSV, optionally filtered."""
    rows = []
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"{path} does not carry the sweep CSV header")
    for line in lines[1:]:
        parts = line.split(",")
        if len(parts) < 7 or parts[6] != "ok":
            continue
        row_s, row_t, row_n = int(parts[0]), float(parts[1]), int(parts[2])
        if s is not None and row_s != s:
            continue
        if t is not None and row_t != t:
            continue
        if n_min is not None and row_n < n_min:
            continue
        if n_max is not None and row_n > n_max:
            continue
        rows.append((row_n, float(parts[3])))
    return rows
