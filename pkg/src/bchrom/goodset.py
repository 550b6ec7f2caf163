"""Good sets: encirclement tests, verification, existence, and search.

A set W of m(G) dense vertices is *good* when (a) it encircles no outside
vertex and (b) every outside vertex of degree >= m(G) has a neighbor in W.
For graphs of girth at least 8 (forests included), a good set fails to exist
exactly when M(G) itself has size m(G) and encircles some vertex; that
characterization both decides existence and certifies the backtracking
search below.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .density import DensityProfile
from .errors import InvariantViolation
from .graph import Graph, ensure_min_girth


@dataclass(frozen=True)
class GoodSet:
    """An ordered good set; members are strictly increasing by vertex id.

    The position of a vertex fixes its anchor color: members[i] is the
    designated b-vertex for color i + 1 in the constructive coloring.
    """

    members: tuple[int, ...]

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.members, self.members[1:])):
            raise ValueError("good-set members must be strictly increasing")


@dataclass(frozen=True)
class GoodSetViolation:
    """Why a candidate set is not good: one of the four checkable reasons."""

    kind: str  # wrong-size | not-dense | encircles | uncovered-high-degree
    witness: int | None = None


def encircles(g: Graph, members: Iterable[int], u: int, profile: DensityProfile) -> bool:
    """True iff every v in W is adjacent to u or shares with u a common
    neighbor w in W of degree exactly m(G) - 1.

    Evaluates the pure definition for any W (the empty set encircles
    everything vacuously); size constraints belong to the good-set check.
    """
    w_set = set(members)
    g.check_vertex(u)
    if u in w_set:
        raise ValueError(f"vertex {u} is a member of the candidate set")
    target = profile.m - 1
    nu = g.adj_sets[u]
    witness_pool = [w for w in w_set if w in nu and len(g.adj[w]) == target]
    for v in w_set:
        if v in nu:
            continue
        nv = g.adj_sets[v]
        if not any(w in nv for w in witness_pool):
            return False
    return True


def find_encircled_vertex(g: Graph, members: Iterable[int], profile: DensityProfile) -> int | None:
    """Smallest vertex outside W that W encircles, or None.

    Only vertices adjacent to the first member, or adjacent to one of its
    degree-(m-1) co-members, can possibly be encircled, which keeps the scan
    local on sparse graphs.
    """
    w_sorted = sorted(set(members))
    if not w_sorted:
        raise ValueError("candidate set must be nonempty")
    v0 = w_sorted[0]
    w_set = set(w_sorted)
    target = profile.m - 1
    candidates = set(g.adj_sets[v0])
    for w in g.adj_sets[v0]:
        if w in w_set and len(g.adj[w]) == target:
            candidates |= g.adj_sets[w]
    candidates -= w_set
    for u in sorted(candidates):
        if encircles(g, w_sorted, u, profile):
            return u
    return None


def check_good_set(g: Graph, members: Iterable[int], profile: DensityProfile) -> GoodSetViolation | None:
    """None if the set is good, otherwise the first violated condition."""
    w = tuple(sorted(set(members)))
    if len(w) != profile.m:
        return GoodSetViolation("wrong-size")
    for v in w:
        if v not in profile.dense:
            return GoodSetViolation("not-dense", v)
    u = find_encircled_vertex(g, w, profile)
    if u is not None:
        return GoodSetViolation("encircles", u)
    w_set = set(w)
    for x in range(g.n):
        if x in w_set or len(g.adj[x]) < profile.m:
            continue
        if not (g.adj_sets[x] & w_set):
            return GoodSetViolation("uncovered-high-degree", x)
    return None


def is_good_set(g: Graph, members: Iterable[int], profile: DensityProfile) -> bool:
    return check_good_set(g, members, profile) is None


def has_good_set(g: Graph, profile: DensityProfile, girth_value: int | float | None = None) -> bool:
    """Decide good-set existence on girth >= 8 inputs without searching.

    False exactly when the dense set has size m(G) and encircles a vertex.
    """
    ensure_min_girth(g, 8, girth_value)
    if len(profile.dense) != profile.m:
        return True
    return find_encircled_vertex(g, profile.dense, profile) is None


def find_good_set(g: Graph, profile: DensityProfile, girth_value: int | float | None = None) -> GoodSet | None:
    """Return a good set, or None when none exists (girth >= 8 required).

    Backtracking over the dense vertices in descending-degree order (ties by
    id): high-degree picks can never serve as encirclement witnesses, so they
    disqualify condition (a) fastest.  Condition (b) is pruned with a
    last-helper index; the full (a)/(b) check runs at the leaves.  Existence
    is certified up front, so exhaustion indicates a bug.
    """
    gv = ensure_min_girth(g, 8, girth_value)
    if not has_good_set(g, profile, girth_value=gv):
        return None
    m = profile.m
    if len(profile.dense) == m:
        members = tuple(sorted(profile.dense))
        if check_good_set(g, members, profile) is not None:
            raise InvariantViolation("the dense set itself must be good when it has size m(G)")
        return GoodSet(members)
    candidates = sorted(profile.dense, key=lambda v: (-len(g.adj[v]), v))
    position = {v: i for i, v in enumerate(candidates)}
    high = [x for x in range(g.n) if len(g.adj[x]) >= m]
    last_helper = {}
    for x in high:
        spots = [position[y] for y in (set(g.adj_sets[x]) | {x}) if y in position]
        last_helper[x] = max(spots) if spots else -1
    chosen: list[int] = []
    chosen_set: set[int] = set()

    def coverable(index: int) -> bool:
        for x in high:
            if x in chosen_set or (g.adj_sets[x] & chosen_set):
                continue
            if last_helper[x] <= index:
                return False
        return True

    def search(start: int) -> GoodSet | None:
        if len(chosen) == m:
            members = tuple(sorted(chosen))
            if check_good_set(g, members, profile) is None:
                return GoodSet(members)
            return None
        needed = m - len(chosen)
        for i in range(start, len(candidates) - needed + 1):
            v = candidates[i]
            chosen.append(v)
            chosen_set.add(v)
            if coverable(i):
                found = search(i + 1)
                if found is not None:
                    return found
            chosen.pop()
            chosen_set.remove(v)
        return None

    result = search(0)
    if result is None:
        raise InvariantViolation("good-set search exhausted although the girth-8 characterization promises one")
    return result
