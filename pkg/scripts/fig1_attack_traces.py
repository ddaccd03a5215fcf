"""S and E against the fraction of removed nodes for degree, betweenness and random removal."""

import argparse
import csv
import os

from _common import graph_args, load_graph
from sfrobust.attack import AttackStrategy, run_attack

ap = argparse.ArgumentParser(description=__doc__)
graph_args(ap)
ap.add_argument("--seed", type=int, default=0, help="random-failure seed")
ap.add_argument("--interval", type=int, default=None)
ap.add_argument("--skip-betweenness", action="store_true", help="betweenness attack is O(N^2 M)")
ap.add_argument("--out", default="results/fig1")
args = ap.parse_args()

g = load_graph(args)
os.makedirs(args.out, exist_ok=True)
kinds = ["degree", "random"] + ([] if args.skip_betweenness else ["betweenness"])
for kind in kinds:
    strategy = AttackStrategy(kind, seed=args.seed if kind == "random" else None)
    trace = run_attack(g, strategy, args.interval, until_collapse=False)
    path = os.path.join(args.out, f"trace_{kind}.csv")
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["fraction_removed", "S", "E"])
        for s in trace.samples:
            w.writerow([f"{s.fraction_removed:.6g}", f"{s.S:.6g}", f"{s.E:.6g}"])
    print(f"{kind:12s} f_c={trace.critical_fraction.value:.4f} -> {path}")
