"""f_t and f_r against cost C for several enforcing parameters alpha."""

import argparse

from _common import graph_args, load_graph
from sfrobust.harness import SweepConfig, run_sweep

ap = argparse.ArgumentParser(description=__doc__)
graph_args(ap)
ap.add_argument("--alphas", default="-8,-4,-2,-1,0,1,2")
ap.add_argument("--costs", default="0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0")
ap.add_argument("--trials", type=int, default=100)
ap.add_argument("--seed", type=int, default=0)
ap.add_argument("--workers", type=int, default=1)
ap.add_argument("--out", default="results/fig2")
args = ap.parse_args()

cfg = SweepConfig(
    alphas=[float(a) for a in args.alphas.split(",")],
    costs=[float(c) for c in args.costs.split(",")],
    strategies=["alpha"],
    trials=args.trials,
    master_seed=args.seed,
    workers=args.workers,
    outputs=args.out,
)
res = run_sweep(cfg, base=load_graph(args))
for r in res.rows:
    if r.metric == "f_t":
        print(f"alpha={r.alpha:g} C={r.cost:g} f_t={r.mean:.4f} [{r.ci_low:.4f}, {r.ci_high:.4f}]")
