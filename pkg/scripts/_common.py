import argparse

from sfrobust.generators import BAParams, generate_ba, load_edge_list


def graph_args(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--edges", help="edge-list file (e.g. an AS topology); default is a BA graph")
    ap.add_argument("--m", type=int, default=3)
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--graph-seed", type=int, default=1)


def load_graph(args):
    if args.edges:
        return load_edge_list(args.edges)[0]
    return generate_ba(BAParams(args.m, args.n, args.graph_seed))
