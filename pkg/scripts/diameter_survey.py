#!/usr/bin/env python3
"""Diameters of D_k at and above the connectivity threshold.

Exploratory: for random connected graphs, report diam(D_{d0}) and
diam(D_n) next to the 2*(n - gamma) upper bound for D_n.
"""

import argparse
import random

from domrec import (
    Graph,
    build_dk,
    d0_direct,
    dk_diameter,
    enumerate_minimal_dominating,
    is_connected,
)


def random_connected(rng, n):
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < rng.uniform(0.3, 0.7)]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=25)
    parser.add_argument("--n-min", type=int, default=4)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    print("n gamma Gamma d0 diam(D_d0) diam(D_n) bound")
    for _ in range(args.count):
        g = random_connected(rng, rng.randint(args.n_min, args.n_max))
        fam = enumerate_minimal_dominating(g)
        d0 = d0_direct(g)
        diam_d0 = dk_diameter(build_dk(g, d0))
        diam_top = dk_diameter(build_dk(g, g.n))
        bound = 2 * (g.n - fam.gamma)
        print(f"{g.n} {fam.gamma} {fam.Gamma} {d0} {diam_d0} {diam_top} {bound}")
        assert diam_top is not None and diam_top <= bound
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
