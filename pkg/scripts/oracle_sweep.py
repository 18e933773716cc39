"""Compare the three DP solvers with their brute-force oracles on random small instances."""

import argparse
import random
import time

from treecut.cds import solve_cds
from treecut.cvc import solve_cvc
from treecut.imbalance import solve_imb
from treecut.instances import random_capacities, random_decomposition, random_graph
from treecut.oracles import cds_brute, cvc_brute, imb_brute

SOLVERS = {
    "cvc": (lambda cg, d: solve_cvc(cg, d)[1], cvc_brute),
    "cds": (lambda cg, d: solve_cds(cg, d)[1], cds_brute),
    "imb": (lambda cg, d: solve_imb(cg.graph, d)[1], lambda cg: imb_brute(cg.graph)),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--problems", default="cvc,cds,imb")
    args = ap.parse_args()
    for name in args.problems.split(","):
        solve, oracle = SOLVERS[name]
        rng = random.Random(args.seed)
        start, worst, bad = time.perf_counter(), 0.0, 0
        for _ in range(args.instances):
            n = rng.randint(1, args.max_n)
            g = random_graph(n, rng.uniform(0.2, 0.7), rng)
            cg = random_capacities(g, rng)
            dec = random_decomposition(n, rng)
            t = time.perf_counter()
            got = solve(cg, dec)
            worst = max(worst, time.perf_counter() - t)
            if got != oracle(cg):
                bad += 1
        print(f"{name}: {args.instances} instances, {bad} mismatches, "
              f"{time.perf_counter() - start:.1f}s total, slowest solve {worst:.2f}s")


if __name__ == "__main__":
    main()
