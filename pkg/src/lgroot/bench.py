"""Timing harness comparing :func:`reconstruct` with the Krausz-partition baseline.

For every ``(N_G, p, trial)`` a random root is drawn, its line graph built
once, and both algorithms are timed on that in-memory matrix.  Each timing
is the minimum over several runs after a few discarded warmup runs.
"""

from __future__ import annotations

import csv
import math
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .errors import NotALineGraph
from .graph import SplitMix64, SymBitMatrix, generate_er, lam_of
from .reconstruct import reconstruct
from .reference.krausz import roussopoulos_root

__all__ = [
    "BenchConfig",
    "BenchRecord",
    "BenchAborted",
    "CellSummary",
    "trial_seed",
    "time_call",
    "run_bench",
    "write_records",
    "summarize",
    "format_summary",
    "histogram",
    "write_histograms",
]

CSV_COLUMNS = ("n_g", "p", "trial", "seed", "t_marinlinga_ns", "t_baseline_ns",
               "delta_t_ns", "both_verified")

TIMERS: dict[str, Callable[[], int]] = {
    "perf_counter_ns": time.perf_counter_ns,
    "monotonic_ns": time.monotonic_ns,
}

DEFAULT_NODE_COUNTS = (10, 20, 30, 50)
DEFAULT_PROBABILITIES = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


class BenchAborted(RuntimeError):
    """A reconstruction in the run did not reproduce its input."""


def _default_seed() -> int:
    return int(os.environ.get("LG_SEED", "0"))


@dataclass
class BenchConfig:
    node_counts: tuple[int, ...] = DEFAULT_NODE_COUNTS
    probabilities: tuple[float, ...] = DEFAULT_PROBABILITIES
    trials: int = 1000
    seed: int = field(default_factory=_default_seed)
    warmup: int = 3
    repeats: int = 5
    timer: str = "perf_counter_ns"

    def __post_init__(self):
        self.node_counts = tuple(int(n) for n in self.node_counts)
        self.probabilities = tuple(float(p) for p in self.probabilities)
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.warmup < 0:
            raise ValueError("warmup must be non-negative")
        if self.repeats < 1:
            raise ValueError("repeats must be at least 1")
        if any(n < 0 for n in self.node_counts):
            raise ValueError("node counts must be non-negative")
        if any(not 0.0 <= p <= 1.0 for p in self.probabilities):
            raise ValueError("probabilities must lie in [0, 1]")
        if self.timer not in TIMERS:
            raise ValueError(f"unknown timer {self.timer!r}; choose from {sorted(TIMERS)}")

    @staticmethod
    def parse_text(text: str) -> dict:
        """Flat ``key = value`` lines; ``#`` starts a comment; arrays are comma separated."""
        out: dict = {}
        for no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"config line {no}: expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.replace("-", "_")
            if key in ("node_counts", "probabilities"):
                cast = int if key == "node_counts" else float
                out[key] = tuple(cast(v) for v in value.split(",") if v.strip())
            elif key in ("trials", "seed", "warmup", "repeats"):
                out[key] = int(value)
            elif key == "timer":
                out[key] = value
            else:
                raise ValueError(f"config line {no}: unknown key {key!r}")
        return out

    @classmethod
    def from_sources(cls, path: str | Path | None = None, **overrides) -> "BenchConfig":
        """Config file values, then any non-``None`` overrides on top."""
        values = cls.parse_text(Path(path).read_text()) if path else {}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass(frozen=True)
class BenchRecord:
    n_g: int
    p: float
    trial: int
    seed: int
    t_marinlinga: int
    t_baseline: int
    delta_t: int
    both_verified: bool

    def row(self) -> list:
        return [self.n_g, f"{self.p:g}", self.trial, self.seed, self.t_marinlinga,
                self.t_baseline, self.delta_t, int(self.both_verified)]


def trial_seed(base: int, n_g: int, p: float, trial: int) -> int:
    """Seed for one generated root; depends only on the arguments."""
    mix = SplitMix64(base)
    z = mix.next_u64()
    for part in (n_g, round(p * 1_000_000), trial):
        z = SplitMix64(z ^ part).next_u64()
    return z & ((1 << 63) - 1)


def time_call(fn: Callable, arg, warmup: int, repeats: int, clock: Callable[[], int]) -> int:
    """Minimum wall time in nanoseconds of ``fn(arg)`` over ``repeats`` runs after ``warmup``."""
    for _ in range(warmup):
        fn(arg)
    best = None
    for _ in range(repeats):
        t0 = clock()
        fn(arg)
        dt = clock() - t0
        if best is None or dt < best:
            best = dt
    return best


def _check_outputs(c: SymBitMatrix) -> bool:
    rep = reconstruct(c)
    if not rep.verified or lam_of(rep.root) != c:
        return False
    try:
        base = roussopoulos_root(c)
    except NotALineGraph:
        return False
    return lam_of(base) == c


def run_bench(config: BenchConfig, progress: Callable[[BenchRecord], None] | None = None
              ) -> list[BenchRecord]:
    """Run every cell of the grid; raises :class:`BenchAborted` on any unverified output."""
    clock = TIMERS[config.timer]
    records = []
    for n_g in config.node_counts:
        for p in config.probabilities:
            for trial in range(config.trials):
                seed = trial_seed(config.seed, n_g, p, trial)
                c = lam_of(generate_er(n_g, p, seed))
                if not _check_outputs(c):
                    raise BenchAborted(
                        f"unverified reconstruction at n_g={n_g} p={p:g} trial={trial} seed={seed}")
                t_m = time_call(reconstruct, c, config.warmup, config.repeats, clock)
                t_b = time_call(roussopoulos_root, c, config.warmup, config.repeats, clock)
                rec = BenchRecord(n_g, p, trial, seed, t_m, t_b, t_b - t_m, True)
                records.append(rec)
                if progress:
                    progress(rec)
    return records


def _header(config: BenchConfig) -> list[str]:
    return [
        "# delta_t_ns = t_baseline_ns - t_marinlinga_ns",
        f"# each time: minimum of {config.repeats} runs after {config.warmup} discarded warmup runs"
        f" ({config.timer})",
        "# each run times one full call on an in-memory matrix, including the"
        " per-component split for disconnected inputs; generation and I/O excluded",
        f"# seed={config.seed} trials={config.trials}",
    ]


def write_records(records: list[BenchRecord], path: str | Path, config: BenchConfig) -> None:
    with open(path, "w", newline="") as fh:
        for line in _header(config):
            fh.write(line + "\n")
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for rec in records:
            w.writerow(rec.row())


@dataclass(frozen=True)
class CellSummary:
    n_g: int
    p: float
    count: int
    mean_delta_t: float
    pr_negative: float


def summarize(records: list[BenchRecord]) -> dict[tuple[int, float], CellSummary]:
    """Mean of ``delta_t`` and the fraction of negative values per ``(n_g, p)`` cell."""
    cells: dict[tuple[int, float], list[int]] = {}
    for rec in records:
        cells.setdefault((rec.n_g, rec.p), []).append(rec.delta_t)
    return {
        key: CellSummary(key[0], key[1], len(ds), sum(ds) / len(ds),
                         sum(1 for d in ds if d < 0) / len(ds))
        for key, ds in cells.items()
    }


def format_summary(summary: dict[tuple[int, float], CellSummary]) -> str:
    """Two tables, rows ``p`` and columns ``N_G``: E[dT] in microseconds, then Pr[dT < 0]."""
    ns = sorted({k[0] for k in summary})
    ps = sorted({k[1] for k in summary})
    lines = ["E[dT] (us)", "p     " + "".join(f"{'N_G=' + str(n):>12}" for n in ns)]
    for p in ps:
        cells = (summary.get((n, p)) for n in ns)
        lines.append(f"{p:<6g}" + "".join(
            f"{c.mean_delta_t / 1000:>12.2f}" if c else f"{'-':>12}" for c in cells))
    lines += ["", "Pr[dT<0]", "p     " + "".join(f"{'N_G=' + str(n):>12}" for n in ns)]
    for p in ps:
        cells = (summary.get((n, p)) for n in ns)
        lines.append(f"{p:<6g}" + "".join(
            f"{c.pr_negative:>12.3f}" if c else f"{'-':>12}" for c in cells))
    return "\n".join(lines) + "\n"


def histogram(deltas: list[int], bins: int = 20) -> list[tuple[int, int, int]]:
    """Equal-width bins ``(lo, hi, count)`` over the range of ``deltas``; the last bin is closed."""
    if not deltas:
        return []
    lo, hi = min(deltas), max(deltas)
    if lo == hi:
        return [(lo, hi, len(deltas))]
    width = math.ceil((hi - lo + 1) / bins)
    counts = [0] * bins
    for d in deltas:
        counts[min((d - lo) // width, bins - 1)] += 1
    return [(lo + i * width, lo + (i + 1) * width, k) for i, k in enumerate(counts)]


def write_histograms(records: list[BenchRecord], directory: str | Path, bins: int = 20) -> list[Path]:
    """One ``hist_n<N>_p<p>.csv`` per cell with columns bin_lo_ns,bin_hi_ns,count,probability."""
    out_dir = Path(directory)
    out_dir.mkdir(parents=True, exist_ok=True)
    cells: dict[tuple[int, float], list[int]] = {}
    for rec in records:
        cells.setdefault((rec.n_g, rec.p), []).append(rec.delta_t)
    paths = []
    for (n_g, p), ds in sorted(cells.items()):
        path = out_dir / f"hist_n{n_g}_p{p:g}.csv"
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["bin_lo_ns", "bin_hi_ns", "count", "probability"])
            for lo, hi, k in histogram(ds, bins):
                w.writerow([lo, hi, k, f"{k / len(ds):.6f}"])
        paths.append(path)
    return paths
