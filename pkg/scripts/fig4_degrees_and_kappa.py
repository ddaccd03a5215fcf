"""Degree distribution during ELL enhancement, and predicted kappa(d) for several alpha."""

import argparse
import csv
import os
from collections import Counter

import numpy as np

from _common import graph_args, load_graph
from sfrobust.enhance import add_links
from sfrobust.theory import predict_curve

ap = argparse.ArgumentParser(description=__doc__)
graph_args(ap)
ap.add_argument("--checkpoints", default="0,200,400,800,1000", help="link counts d for the ELL snapshots")
ap.add_argument("--alphas", default="-8,-4,-2,-1,0,1,2")
ap.add_argument("--ds", default="0,100,600,900,1800")
ap.add_argument("--seed", type=int, default=0)
ap.add_argument("--out", default="results/fig4")
args = ap.parse_args()

g = load_graph(args)
os.makedirs(args.out, exist_ok=True)

h = g.copy()
rng = np.random.default_rng(args.seed)
done = 0
with open(os.path.join(args.out, "ell_degree_distribution.csv"), "w", newline="") as fh:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["d", "degree", "count"])
    for d in sorted(int(x) for x in args.checkpoints.split(",")):
        add_links(h, "ELL", d - done, rng)
        done = d
        for k, c in sorted(Counter(h.degrees()).items()):
            w.writerow([d, k, c])

with open(os.path.join(args.out, "kappa_prediction.csv"), "w", newline="") as fh:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["alpha", "d", "kappa_pred", "f_r_pred"])
    ds = [int(x) for x in args.ds.split(",")]
    for alpha in (float(a) for a in args.alphas.split(",")):
        for p in predict_curve(g, alpha, ds):
            w.writerow([f"{alpha:g}", p.d, f"{p.kappa_pred:.6g}", f"{p.f_r_pred:.6g}"])
            print(f"alpha={alpha:g} d={p.d} kappa={p.kappa_pred:.4f}")
