"""f_t and f_r against cost C under ERR, ELL and EHH."""

import argparse

from _common import graph_args, load_graph
from sfrobust.harness import SweepConfig, run_sweep

ap = argparse.ArgumentParser(description=__doc__)
graph_args(ap)
ap.add_argument("--costs", default="0,0.05,0.1,0.15,0.2,0.25,0.3,0.35,0.4")
ap.add_argument("--trials", type=int, default=100)
ap.add_argument("--seed", type=int, default=0)
ap.add_argument("--workers", type=int, default=1)
ap.add_argument("--out", default="results/fig3")
args = ap.parse_args()

cfg = SweepConfig(
    costs=[float(c) for c in args.costs.split(",")],
    strategies=["ERR", "ELL", "EHH"],
    trials=args.trials,
    master_seed=args.seed,
    workers=args.workers,
    outputs=args.out,
)
res = run_sweep(cfg, base=load_graph(args))
for r in res.rows:
    if r.metric in ("f_t", "f_r_formula"):
        print(f"{r.strategy} C={r.cost:g} {r.metric}={r.mean:.4f}")
