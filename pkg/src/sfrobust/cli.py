"""Command line interface: generate, attack, enhance, sweep, predict."""

from __future__ import annotations

import argparse
import csv
import logging
import sys

from .attack import KINDS, AttackStrategy, run_attack
from .enhance import EnhancePlan, enhance, links_for_cost
from .generators import BAParams, format_edge_list, generate_ba, load_edge_list, save_edge_list
from .harness import load_config, run_sweep
from .theory import predict_curve

log = logging.getLogger("sfrobust")


def _floats(s: str) -> list[float]:
    try:
        return [float(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {s!r}")


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def cmd_generate(args) -> None:
    g = generate_ba(BAParams(args.m, args.n, args.seed))
    save_edge_list(g, args.output)


def cmd_attack(args) -> None:
    if args.strategy == "random" and args.seed is None:
        raise ValueError("--seed is required for the random strategy")
    g, _ = load_edge_list(args.input)
    strategy = AttackStrategy(args.strategy, not args.no_recompute, args.seed)
    trace = run_attack(
        g,
        strategy,
        args.interval,
        until_collapse=not args.full,
        criterion=args.criterion,
        with_efficiency=not args.no_efficiency,
    )
    with open(args.output, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["fraction_removed", "S", "E", "largest_component"])
        for s in trace.samples:
            w.writerow([_fmt(s.fraction_removed), _fmt(s.S), _fmt(s.E), s.size])
    cf = trace.critical_fraction
    print(f"critical_fraction={_fmt(cf.value) if cf else 'none'}")


def cmd_enhance(args) -> None:
    g, labels = load_edge_list(args.input)
    if args.alpha is not None:
        plan = EnhancePlan("alpha", args.cost, args.seed, args.alpha)
    else:
        plan = EnhancePlan(args.strategy, args.cost, args.seed)
    h, added = enhance(g, plan)
    save_edge_list(h, args.output, labels)
    if args.added:
        with open(args.added, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(format_edge_list(added, labels))
    print(f"added={len(added)} edges={h.edge_count}")


def cmd_sweep(args) -> None:
    cfg = load_config(args.config)
    cfg.master_seed = args.seed
    if args.outputs:
        cfg.outputs = args.outputs
    if args.workers:
        cfg.workers = args.workers
    run_sweep(cfg)
    print(f"wrote results to {cfg.outputs}")


def cmd_predict(args) -> None:
    if args.input:
        g, _ = load_edge_list(args.input)
    else:
        if args.m is None or args.n is None or args.seed is None:
            raise ValueError("give --in, or --m, --n and --seed for a BA graph")
        g = generate_ba(BAParams(args.m, args.n, args.seed))
    ds = sorted({links_for_cost(g.edge_count, c) for c in args.costs})
    with open(args.output, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["alpha", "cost", "d", "kappa_pred", "f_r_pred"])
        for alpha in args.alphas:
            for p in predict_curve(g, alpha, ds):
                w.writerow([_fmt(alpha), _fmt(p.d / g.edge_count), p.d, _fmt(p.kappa_pred), _fmt(p.f_r_pred)])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sfrobust", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true", help="log every enhancement run")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a BA(m, n) graph as an edge list")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("attack", help="attack trace (fraction removed, S, E) as CSV")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--strategy", choices=KINDS, default="degree")
    p.add_argument("--seed", type=int, help="required for --strategy random")
    p.add_argument("--no-recompute", action="store_true", help="rank by initial degree/betweenness")
    p.add_argument("--interval", type=int, default=None, help="removals between samples")
    p.add_argument("--criterion", choices=("kappa", "size"), default="kappa")
    p.add_argument("--full", action="store_true", help="keep removing past collapse")
    p.add_argument("--no-efficiency", action="store_true")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("enhance", help="add links to an edge list")
    p.add_argument("--in", dest="input", required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--alpha", type=float)
    mode.add_argument("--strategy", choices=("ERR", "ELL", "EHH"))
    p.add_argument("--cost", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--added", help="also write the added links here")
    p.set_defaults(func=cmd_enhance)

    p = sub.add_parser("sweep", help="run a configured sweep and write result CSVs")
    p.add_argument("--config", required=True)
    p.add_argument("--seed", type=int, required=True, help="master seed")
    p.add_argument("--outputs", help="override the config's output directory")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("predict", help="mean-field kappa and f_r curves as CSV")
    p.add_argument("--in", dest="input")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--alphas", type=_floats, required=True)
    p.add_argument("--costs", type=_floats, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_predict)
    return ap


def _setup_logging(verbose: bool) -> None:
    for h in [h for h in log.handlers if getattr(h, "_sfrobust", False)]:
        log.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    handler._sfrobust = True
    log.addHandler(handler)
    log.setLevel(logging.INFO if verbose else logging.WARNING)


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _setup_logging(args.verbose)
    try:
        args.func(args)
    except (OSError, ValueError) as exc:
        print(f"sfrobust {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
