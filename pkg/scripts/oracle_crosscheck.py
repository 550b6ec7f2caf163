#!/usr/bin/env python3
"""Cross-check the pipeline against the exhaustive oracle on small inputs.

Random labeled trees plus random high-girth graphs, all within the oracle
cap, compared at tolerance zero.

Usage:
    python3 scripts/oracle_crosscheck.py --trees 500 --graphs 200 --seed 7
"""

from __future__ import annotations

import argparse
import random
import time

from bchrom import Graph, exact_b_chromatic, generate_girth_constrained, run_pipeline


def random_tree(n: int, rng: random.Random) -> Graph:
    if n <= 1:
        return Graph(n, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    last = [u for u in range(n) if degree[u] == 1]
    edges.append((last[0], last[1]))
    return Graph(n, edges)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trees", type=int, default=500)
    parser.add_argument("--graphs", type=int, default=200)
    parser.add_argument("--max-n", type=int, default=13)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    mismatches = 0
    start = time.perf_counter()

    def compare(g, tag, index):
        nonlocal mismatches
        expected = exact_b_chromatic(g)
        got = run_pipeline(g, compute_chi_b=True).record.chi_b
        if got != expected:
            mismatches += 1
            print(f"MISMATCH {tag} #{index}: pipeline={got} oracle={expected} n={g.n}")

    for index in range(args.trees):
        compare(random_tree(rng.randint(1, 10), rng), "tree", index)
    for index in range(args.graphs):
        n = rng.randint(1, args.max_n)
        g = generate_girth_constrained(n, 9, n + 3, seed=rng.randrange(2**32))
        compare(g, "graph", index)

    elapsed = time.perf_counter() - start
    total = args.trees + args.graphs
    print(f"instances  {total}")
    print(f"elapsed    {elapsed:.2f}s")
    if mismatches:
        print(f"FAILED: {mismatches} mismatches")
        return 1
    print("crosscheck OK: pipeline equals the oracle everywhere")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
