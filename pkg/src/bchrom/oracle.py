"""Ground truth at desk scale: validity checking and exact b-chromatic search.

The exact search is exponential (the problem is NP-hard in general), so it
refuses graphs above a configurable vertex cap instead of timing out
nondeterministically.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from itertools import combinations

from .density import density_profile
from .errors import InvariantViolation, OracleLimitError
from .goodset import find_encircled_vertex
from .graph import Graph

DEFAULT_ORACLE_LIMIT = 14


@dataclass(frozen=True)
class Violation:
    kind: str  # monochromatic-edge | class-without-b-vertex | color-gap
    witness: tuple[int, int] | int


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of checking a coloring against the b-coloring definition.

    ``basis`` is present exactly when the coloring is proper, uses colors
    1..k exactly, and every class contains a b-vertex.
    """

    proper: bool
    colors_used: int
    basis: dict[int, int] | None
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations


def check_b_coloring(g: Graph, coloring: Mapping[int, int], k: int) -> ValidityReport:
    """Validate a total coloring as a b-coloring with exactly k colors."""
    if k < 1:
        raise ValueError("k must be positive")
    for u in range(g.n):
        if u not in coloring:
            raise ValueError(f"coloring is partial: vertex {u} has no color")
    violations: list[Violation] = []
    proper = True
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            violations.append(Violation("monochromatic-edge", (u, v)))
            proper = False
    expected = set(range(1, k + 1))
    used = {coloring[u] for u in range(g.n)}
    for c in sorted(used - expected):
        violations.append(Violation("color-gap", c))
    for c in sorted(expected - used):
        violations.append(Violation("color-gap", c))
    basis: dict[int, int] = {}
    for c in range(1, k + 1):
        found = None
        for u in range(g.n):
            if coloring[u] != c:
                continue
            seen = {coloring[v] for v in g.adj[u]}
            if expected - {c} <= seen:
                found = u
                break
        if found is not None:
            basis[c] = found
        elif c in used:
            violations.append(Violation("class-without-b-vertex", c))
    report_basis = basis if (proper and not violations and len(basis) == k) else None
    return ValidityReport(
        proper=proper,
        colors_used=len(used),
        basis=report_basis,
        violations=tuple(violations),
    )


def _extend_basis(g: Graph, basis: tuple[int, ...], k: int) -> dict[int, int] | None:
    """Backtracking extension where basis[i] must become a b-vertex of color i+1."""
    color = {v: i + 1 for i, v in enumerate(basis)}
    basis_set = frozenset(basis)
    full = set(range(1, k + 1))
    missing: list[set[int]] = []
    free: list[int] = []
    for i, b in enumerate(basis):
        seen = {color[u] for u in g.adj[b] if u in color}
        missing.append(full - {i + 1} - seen)
        free.append(sum(1 for u in g.adj[b] if u not in color))
        if len(missing[i]) > free[i]:
            return None
    index = {v: i for i, v in enumerate(basis)}
    rest = sorted(
        (v for v in range(g.n) if v not in color),
        key=lambda v: (-len(g.adj_sets[v] & basis_set), -len(g.adj[v]), v),
    )
    basis_nbrs = {v: [index[u] for u in g.adj[v] if u in index] for v in rest}

    def backtrack(pos: int) -> bool:
        if pos == len(rest):
            return all(not need for need in missing)
        v = rest[pos]
        blocked = {color[u] for u in g.adj[v] if u in color}
        for c in range(1, k + 1):
            if c in blocked:
                continue
            color[v] = c
            feasible = True
            dropped = []
            for i in basis_nbrs[v]:
                free[i] -= 1
                if c in missing[i]:
                    missing[i].discard(c)
                    dropped.append(i)
                if len(missing[i]) > free[i]:
                    feasible = False
            if feasible and backtrack(pos + 1):
                return True
            for i in basis_nbrs[v]:
                free[i] += 1
            for i in dropped:
                missing[i].add(c)
            del color[v]
        return False

    if backtrack(0):
        return dict(color)
    return None


def find_b_coloring_exact(
    g: Graph,
    k: int,
    *,
    limit: int | None = None,
    use_encirclement_prune: bool = True,
) -> dict[int, int] | None:
    """Exhaustive search for a b-coloring with exactly k colors.

    Iterates over candidate bases (k vertices of degree >= k - 1; the i-th
    smallest is pinned to color i + 1, which is lossless up to renaming
    colors) and backtracks over the remaining vertices with counting-based
    forward checking.  When k = m(G), any candidate basis that encircles an
    outside vertex can never witness a b-coloring and is skipped; the prune
    can be disabled to test that it never changes answers.
    """
    cap = DEFAULT_ORACLE_LIMIT if limit is None else limit
    if g.n > cap:
        raise OracleLimitError(f"graph has {g.n} vertices; the exact search is capped at {cap}")
    if k < 1:
        raise ValueError("k must be positive")
    if k > g.n:
        return None
    eligible = [v for v in range(g.n) if len(g.adj[v]) >= k - 1]
    if len(eligible) < k:
        return None
    prune = False
    if use_encirclement_prune and g.n > 0:
        profile = density_profile(g)
        prune = k == profile.m
    for basis in combinations(eligible, k):
        if prune and find_encircled_vertex(g, basis, profile) is not None:
            continue
        result = _extend_basis(g, basis, k)
        if result is not None:
            return result
    return None


def exact_b_chromatic(g: Graph, *, limit: int | None = None, use_encirclement_prune: bool = True) -> int:
    """Largest k admitting a b-coloring, found by scanning down from m(G)."""
    if g.n == 0:
        raise ValueError("the b-chromatic number is undefined for the empty graph")
    profile = density_profile(g)
    for k in range(profile.m, 0, -1):
        if find_b_coloring_exact(g, k, limit=limit, use_encirclement_prune=use_encirclement_prune) is not None:
            return k
    raise InvariantViolation("no b-coloring at any k; impossible for a nonempty graph")
