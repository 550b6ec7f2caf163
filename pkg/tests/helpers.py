"""Independent reference implementations and instance builders for the tests.

Everything here re-derives expected values straight from the definitions
(quantifier-by-quantifier, brute force where needed) so the package code is
never used to check itself.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

from bchrom import Graph

# ---------------------------------------------------------------- builders


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def star_of_stars() -> Graph:
    """Hub 0 adjacent to 1, 2, 3; one extra leaf on each spoke.  m = 3."""
    return Graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


def encircled_tree() -> Graph:
    """11-vertex tree whose dense set has size m = 4 and encircles vertex 0.

    0 touches 1 and 2; 3 hangs off 1, 4 hangs off 2; one extra leaf each on
    1 and 2, two extra leaves each on 3 and 4.  No good set, chi_b = 3.
    """
    edges = [(0, 1), (0, 2), (1, 3), (2, 4), (1, 5), (2, 6), (3, 7), (3, 8), (4, 9), (4, 10)]
    return Graph(11, edges)


def two_fan_tree() -> Graph:
    """Tree forcing the derangement pass: anchor 0 has two doubly anchored
    neighbors (4 via anchor 1, 5 via anchor 2).  m = 4.
    """
    edges = [
        (0, 4), (4, 1),          # 0-4-1
        (0, 5), (5, 2),          # 0-5-2
        (0, 3),                  # anchors 0 and 3 adjacent
        (1, 6), (1, 7),
        (2, 8), (2, 9),
        (3, 10), (3, 11),
    ]
    return Graph(12, edges)


def steal_chain_tree() -> Graph:
    """Tree forcing the color-steal pass: 3 is doubly anchored via 0 and 1,
    and anchor 0 also starts the chain 0-4-5-2.  m = 3.
    """
    edges = [
        (0, 3), (1, 3),
        (0, 4), (4, 5), (5, 2),
        (0, 6),
        (1, 7), (1, 8),
        (2, 9), (2, 10),
    ]
    return Graph(11, edges)


def fallback_pick_tree() -> Graph:
    """Tree forcing the final link pass: 3 is doubly anchored via 0 and 1
    and no anchor has a chained link neighbor.  m = 3.
    """
    edges = [
        (0, 3), (1, 3),
        (0, 4), (0, 5),
        (1, 6), (1, 7),
        (2, 8), (2, 9), (2, 10),
    ]
    return Graph(11, edges)


def high_degree_leftover_forest() -> Graph:
    """Forest where anchor 0 has a degree-m neighbor (7) that the missing
    colors do not reach; the completion pass must color it anyway.  m = 4.
    """
    edges = [
        (0, 4), (0, 5), (0, 6), (0, 7),
        (7, 8), (7, 9), (7, 10),
        (1, 11), (1, 12), (1, 13),
        (2, 14), (2, 15), (2, 16),
        (3, 17), (3, 18), (3, 19),
    ]
    return Graph(20, edges)


def greedy_trap_forest() -> Graph:
    """Forest where deferring the high-degree neighbor 23 of anchor 3 to the
    greedy pass would strand it: its other neighbors pick up colors 1..3
    first and the anchor holds color 4.  m = 4.
    """
    edges = [
        (0, 4), (0, 5), (0, 6),
        (1, 7), (1, 8), (1, 9),
        (2, 10), (2, 11), (2, 12),
        (3, 13), (3, 14), (3, 15), (3, 23),
        (16, 21),            # w feeding z2
        (17, 22),            # w1 on z3
        (18, 19), (19, 22),  # w2a - w2 - z3
        (20, 23),            # z1
        (21, 23),            # z2
        (22, 23),            # z3
    ]
    return Graph(24, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n <= 1:
        return Graph(n, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_prufer(seq)


def tree_from_prufer(seq: list[int]) -> Graph:
    n = len(seq) + 2
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


def random_simple_graph(n: int, edge_prob: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob]
    return Graph(n, edges)


# ------------------------------------------------------- naive reference

def brute_force_girth(g: Graph) -> int | float:
    """Shortest cycle length by enumerating simple paths from the smallest cycle vertex."""
    best = math.inf

    def extend(start: int, u: int, visited: set[int], length: int) -> None:
        nonlocal best
        if length + 1 >= best:
            return
        for v in g.adj[u]:
            if v == start and length >= 2:
                best = min(best, length + 1)
            elif v > start and v not in visited:
                visited.add(v)
                extend(start, v, visited, length + 1)
                visited.remove(v)

    for start in range(g.n):
        extend(start, start, {start}, 0)
    return best


def naive_m(g: Graph) -> int:
    """Definition check: largest k with at least k vertices of degree >= k - 1."""
    best = 0
    for k in range(1, g.n + 1):
        if sum(1 for u in range(g.n) if g.degree(u) >= k - 1) >= k:
            best = k
    return best


def naive_encircles(g: Graph, members, u: int, m: int) -> bool:
    """Literal quantifier translation of the encirclement definition."""
    members = set(members)
    for v in members:
        if g.has_edge(v, u):
            continue
        if not any(
            w in members and g.has_edge(w, v) and g.has_edge(w, u) and g.degree(w) == m - 1
            for w in range(g.n)
        ):
            return False
    return True


def naive_is_good_set(g: Graph, members, m: int, dense) -> bool:
    members = set(members)
    if len(members) != m or not members <= set(dense):
        return False
    for u in range(g.n):
        if u not in members and naive_encircles(g, members, u, m):
            return False
    for x in range(g.n):
        if x in members or g.degree(x) < m:
            continue
        if not any(g.has_edge(x, w) for w in members):
            return False
    return True


def naive_has_good_set(g: Graph, m: int, dense) -> bool:
    """Exhaustive enumeration of every m-subset of the dense vertices."""
    return any(naive_is_good_set(g, subset, m, dense) for subset in combinations(sorted(dense), m))


def naive_link_vertices(g: Graph, members) -> set[int]:
    """Quartic scan for interiors of length-2/3 anchor-to-anchor paths."""
    w = set(members)
    found = set()
    for w1 in w:
        for x in g.adj[w1]:
            if x in w:
                continue
            for w2 in g.adj[x]:
                if w2 in w and w2 != w1:
                    found.add(x)
            for y in g.adj[x]:
                if y in w or y == w1:
                    continue
                for w2 in g.adj[y]:
                    if w2 in w and w2 != w1:
                        found.add(x)
                        found.add(y)
    return found


def chromatic_number(g: Graph) -> int:
    """Small brute-force chromatic number (for sanity bounds only)."""
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    color: dict[int, int] = {}

    def feasible(k: int, pos: int) -> bool:
        if pos == g.n:
            return True
        v = order[pos]
        used = {color[u] for u in g.adj[v] if u in color}
        for c in range(1, k + 1):
            if c in used:
                continue
            color[v] = c
            if feasible(k, pos + 1):
                del color[v]
                return True
            del color[v]
        return False

    for k in range(1, g.n + 1):
        color.clear()
        if feasible(k, 0):
            return k
    raise AssertionError("unreachable")


def proper_coloring_ok(g: Graph, coloring: dict[int, int]) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edges())
