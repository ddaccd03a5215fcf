"""Seeded Monte Carlo sweeps over (strategy, alpha, cost) grids.

Every trial seed is derived from the master seed and the cell's *values*
(strategy, alpha, cost) plus the trial index, so any cell can be rerun on its
own and reordering the grid changes nothing.
"""

from __future__ import annotations

import csv
import hashlib
import io
import logging
import math
import os
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from .attack import KINDS, AttackStrategy, critical_fraction_targeted, random_failure_empirical
from .enhance import MODES, add_links, complement_size, links_for_cost
from .generators import BAParams, generate_ba, load_edge_list
from .graph import Graph, degree_stats, largest_component_fraction
from .metrics import critical_fraction_random, efficiency

log = logging.getLogger(__name__)

CSV_HEADER = ["strategy", "alpha", "cost", "metric", "mean", "ci_low", "ci_high", "trials", "status"]


def confidence_interval(samples, level: float = 0.95) -> tuple[float, float, float]:
    """Mean and two-sided normal-approximation interval mean +/- z s / sqrt(n)."""
    xs = list(samples)
    if len(xs) < 2:
        raise ValueError("confidence interval needs at least 2 samples")
    if not 0 < level < 1:
        raise ValueError("level must be in (0, 1)")
    mean = statistics.fmean(xs)
    z = statistics.NormalDist().inv_cdf(0.5 + level / 2)
    half = z * statistics.stdev(xs) / math.sqrt(len(xs))
    return mean, mean - half, mean + half


def _parse_bool(s: str) -> bool:
    v = s.strip().lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {s!r}")


def _floats(s: str) -> list[float]:
    return [float(x) for x in s.split(",") if x.strip()]


def _strings(s: str) -> list[str]:
    return [x.strip() for x in s.split(",") if x.strip()]


@dataclass
class SweepConfig:
    source: str = "ba"
    m: int = 3
    n: int = 1000
    path: str | None = None
    graph_seed: int | None = None
    alphas: list[float] = field(default_factory=list)
    costs: list[float] = field(default_factory=lambda: [0.0])
    strategies: list[str] = field(default_factory=lambda: ["alpha"])
    trials: int = 100
    master_seed: int = 0
    attack: str = "degree"
    recompute: bool = True
    outputs: str = "results"
    empirical_fr: bool = False
    fr_trials: int = 20
    efficiency: bool = False
    workers: int = 1

    def validate(self) -> None:
        if self.source not in ("ba", "file"):
            raise ValueError(f"source must be 'ba' or 'file', got {self.source!r}")
        if self.source == "file" and not self.path:
            raise ValueError("source = file needs a path")
        if self.source == "ba":
            BAParams(self.m, self.n, self.graph_seed or 0)
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if any(c < 0 for c in self.costs) or self.costs != sorted(self.costs):
            raise ValueError("costs must be non-negative and ascending")
        if not self.costs:
            raise ValueError("costs must not be empty")
        bad = [s for s in self.strategies if s not in MODES]
        if bad:
            raise ValueError(f"unknown strategies {bad}; expected any of {MODES}")
        if "alpha" in self.strategies and not self.alphas:
            raise ValueError("strategy 'alpha' needs a non-empty alphas list")
        if self.attack not in KINDS:
            raise ValueError(f"attack must be one of {KINDS}")
        if self.master_seed < 0:
            raise ValueError("master_seed must be non-negative")
        if self.workers < 1 or self.fr_trials < 1:
            raise ValueError("workers and fr_trials must be >= 1")

    def cells(self) -> list[tuple[str, float | None, float]]:
        out = []
        for strat in self.strategies:
            for alpha in self.alphas if strat == "alpha" else [None]:
                for cost in self.costs:
                    out.append((strat, None if alpha is None else float(alpha), float(cost)))
        return out


_CONVERTERS = {
    "m": int, "n": int, "graph_seed": int, "trials": int, "master_seed": int,
    "fr_trials": int, "workers": int,
    "alphas": _floats, "costs": _floats, "strategies": _strings,
    "recompute": _parse_bool, "empirical_fr": _parse_bool, "efficiency": _parse_bool,
}


def parse_config(text: str) -> SweepConfig:
    """Read ``key = value`` lines; lists are comma separated, '#' starts a comment."""
    known = {f.name for f in fields(SweepConfig)}
    kwargs = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in known:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        try:
            kwargs[key] = _CONVERTERS.get(key, str)(value)
        except ValueError as exc:
            raise ValueError(f"config line {lineno}: {exc}") from None
    cfg = SweepConfig(**kwargs)
    cfg.validate()
    return cfg


def load_config(path) -> SweepConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


def derive_seed(master_seed: int, *key) -> np.random.SeedSequence:
    """Seed for one unit of work, keyed by values rather than position."""
    parts = [x.hex() if isinstance(x, float) else str(x) for x in key]
    digest = hashlib.blake2b("|".join(parts).encode(), digest_size=8).digest()
    return np.random.SeedSequence([master_seed, int.from_bytes(digest, "little")])


def base_graph(cfg: SweepConfig) -> Graph:
    if cfg.source == "file":
        return load_edge_list(cfg.path)[0]
    seed = cfg.master_seed if cfg.graph_seed is None else cfg.graph_seed
    return generate_ba(BAParams(cfg.m, cfg.n, seed))


def run_trial(base: Graph, cfg: SweepConfig, cell, trial: int) -> dict[str, float]:
    strat, alpha, cost = cell
    h = base.copy()
    d = links_for_cost(base.edge_count, cost)
    rng = np.random.default_rng(derive_seed(cfg.master_seed, strat, alpha, cost, trial))
    add_links(h, strat, d, rng, alpha)
    attack_seed = derive_seed(cfg.master_seed, strat, alpha, cost, trial, "attack")
    attack = AttackStrategy(cfg.attack, cfg.recompute, attack_seed if cfg.attack == "random" else None)
    stats = degree_stats(h)
    out = {
        "f_t": critical_fraction_targeted(h, attack).value,
        "f_r_formula": critical_fraction_random(stats).value,
        "kappa": stats.kappa,
        "S": largest_component_fraction(h),
    }
    if cfg.empirical_fr:
        fr_seed = derive_seed(cfg.master_seed, strat, alpha, cost, trial, "failure")
        out["f_r_empirical"] = random_failure_empirical(h, fr_seed, cfg.fr_trials).value
    if cfg.efficiency:
        out["E"] = efficiency(h)
    return out


def _trial_task(args):
    return run_trial(*args)


@dataclass(frozen=True)
class SweepRow:
    strategy: str
    alpha: float | None
    cost: float
    metric: str
    mean: float | None
    ci_low: float | None
    ci_high: float | None
    trials: int
    status: str


@dataclass
class SweepResult:
    rows: list[SweepRow]
    samples: dict = field(default_factory=dict)  # (strategy, alpha, cost) -> list of per-trial dicts

    def get(self, strategy: str, alpha: float | None, cost: float, metric: str) -> SweepRow:
        for r in self.rows:
            if (r.strategy, r.alpha, r.cost, r.metric) == (strategy, alpha, cost, metric):
                return r
        raise KeyError((strategy, alpha, cost, metric))


def _aggregate(cell, values: list[dict[str, float]]) -> list[SweepRow]:
    strat, alpha, cost = cell
    rows = []
    for metric in values[0]:
        xs = [v[metric] for v in values]
        if len(xs) >= 2:
            mean, lo, hi = confidence_interval(xs)
            rows.append(SweepRow(strat, alpha, cost, metric, mean, lo, hi, len(xs), "ok"))
        else:
            rows.append(SweepRow(strat, alpha, cost, metric, xs[0], None, None, 1, "single"))
    return rows


def run_sweep(cfg: SweepConfig, base: Graph | None = None, write: bool = True) -> SweepResult:
    """Run every (cell, trial) unit, aggregate per cell and write the CSVs."""
    cfg.validate()
    if base is None:
        base = base_graph(cfg)
    cells = cfg.cells()
    feasible = []
    rows_by_cell: dict = {}
    available = complement_size(base)
    for cell in cells:
        d = links_for_cost(base.edge_count, cell[2])
        if d > available:
            log.warning("cell %s infeasible: %d links requested, %d available", cell, d, available)
            rows_by_cell[cell] = [SweepRow(*cell, "f_t", None, None, None, 0, "infeasible")]
        else:
            feasible.append(cell)
    units = [(base, cfg, cell, t) for cell in feasible for t in range(cfg.trials)]
    if cfg.workers > 1 and len(units) > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            results = list(pool.map(_trial_task, units, chunksize=max(1, len(units) // (4 * cfg.workers))))
    else:
        results = [_trial_task(u) for u in units]
    samples = {}
    for (_, _, cell, t), res in zip(units, results):
        log.info("enhancement run strategy=%s alpha=%s cost=%g trial=%d f_t=%.6g", cell[0], cell[1], cell[2], t, res["f_t"])
        samples.setdefault(cell, []).append(res)
    for cell in feasible:
        rows_by_cell[cell] = _aggregate(cell, samples[cell])
    result = SweepResult([r for cell in cells for r in rows_by_cell[cell]], samples)
    if write:
        write_sweep(result, cfg.outputs)
    return result


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, int):
        return str(x)
    return f"{x:.6g}"


def format_rows(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([
            r.strategy, _fmt(r.alpha), _fmt(r.cost), r.metric, _fmt(r.mean),
            _fmt(r.ci_low), _fmt(r.ci_high), r.trials, r.status,
        ])
    return buf.getvalue()


def write_sweep(result: SweepResult, outdir) -> list[Path]:
    """One CSV per figure family: alpha sweeps and ERR/ELL/EHH strategies."""
    outdir = Path(outdir)
    os.makedirs(outdir, exist_ok=True)
    families = {
        "alpha_sweep.csv": [r for r in result.rows if r.strategy == "alpha"],
        "strategy_sweep.csv": [r for r in result.rows if r.strategy != "alpha"],
    }
    written = []
    for name, rows in families.items():
        if not rows:
            continue
        path = outdir / name
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(format_rows(rows))
        written.append(path)
    return written
