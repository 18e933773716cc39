"""Nicify random decompositions of random graphs and report worst-case statistics."""

import argparse
import random
import time

from treecut.decomposition import metrics
from treecut.instances import random_decomposition, random_graph
from treecut.nice import RerouteTrace, nicify, to_tree_decomposition, validate_tree_decomposition


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--graphs", type=int, default=500)
    ap.add_argument("--per-graph", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    start = time.perf_counter()
    max_steps_ratio = 0.0
    max_td_ratio = 0.0
    for _ in range(args.graphs):
        n = rng.randint(1, args.max_n)
        g = random_graph(n, rng.uniform(0.1, 0.6), rng)
        for _ in range(args.per_graph):
            dec = random_decomposition(n, rng)
            trace = RerouteTrace(dec)
            out = nicify(g, dec, trace)
            max_steps_ratio = max(max_steps_ratio, trace.steps / dec.size)
            k = metrics(g, out).width
            td = to_tree_decomposition(g, out)
            assert validate_tree_decomposition(g, td) is None
            max_td_ratio = max(max_td_ratio, td.width / (2 * k * k + 3 * k))
    total = args.graphs * args.per_graph
    print(f"{total} decompositions in {time.perf_counter() - start:.1f}s")
    print(f"max reroute steps / |T|: {max_steps_ratio:.2f} (bound 2)")
    print(f"max treewidth / (2k^2+3k): {max_td_ratio:.2f} (bound 1)")


if __name__ == "__main__":
    main()
