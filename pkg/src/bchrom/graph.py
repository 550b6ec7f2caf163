"""Immutable simple graphs: parsing, girth, restricted neighborhoods, generation.

Vertices are dense 0-based ids internally; the arbitrary nonnegative integer
labels found in input files are kept on the side so output can be written in
the caller's vocabulary.
"""

from __future__ import annotations

import math
import random
import re
from collections import deque
from collections.abc import Iterable, Sequence

from .errors import ParseError, PreconditionError

#: Girth value reported for forests.  Compares greater than any finite bound,
#: so ``girth(g) >= k`` reads naturally.
ACYCLIC = math.inf

_N_HEADER = re.compile(r"#\s*n\s*=\s*(\d+)\s*$")


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    The constructor canonicalizes and validates: self-loops and duplicate
    edges are rejected, adjacency is stored strictly increasing, and the
    structure is immutable afterwards (safe to share between threads).
    """

    __slots__ = ("n", "adj", "adj_sets", "labels", "_label_to_id")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[int] | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in neighbor_sets[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in neighbor_sets)
        self.adj_sets: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in neighbor_sets)
        if labels is None:
            labels = range(n)
        label_tuple = tuple(labels)
        if len(label_tuple) != n:
            raise ValueError("labels must cover every vertex")
        if len(set(label_tuple)) != n:
            raise ValueError("labels must be distinct")
        self.labels: tuple[int, ...] = label_tuple
        self._label_to_id = {lab: i for i, lab in enumerate(label_tuple)}

    def check_vertex(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise ValueError(f"unknown vertex id {u}")

    def degree(self, u: int) -> int:
        self.check_vertex(u)
        return len(self.adj[u])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adj]

    def neighbors(self, u: int) -> tuple[int, ...]:
        self.check_vertex(u)
        return self.adj[u]

    def neighbor_set(self, u: int) -> frozenset[int]:
        self.check_vertex(u)
        return self.adj_sets[u]

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self.adj_sets[u]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def edges(self) -> Iterable[tuple[int, int]]:
        """Yield each edge once, as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield u, v

    def label_of(self, u: int) -> int:
        self.check_vertex(u)
        return self.labels[u]

    def id_of(self, label: int) -> int:
        try:
            return self._label_to_id[label]
        except KeyError:
            raise ValueError(f"unknown vertex label {label}") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.labels == other.labels

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated "u v" lines into a canonical Graph.

    Lines starting with '#' are comments, except a "# n=<count>" header which
    declares the total vertex count (the only way to express isolated
    vertices).  Self-loops and duplicate edges are rejected outright so that
    corpus bugs surface instead of being silently normalized away.
    """
    declared_n: int | None = None
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header = _N_HEADER.match(line)
            if header:
                if declared_n is not None:
                    raise ParseError("duplicate '# n=' header", lineno)
                declared_n = int(header.group(1))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex label in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError("vertex labels must be nonnegative", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        edges.append(key)
    label_set = {lab for edge in edges for lab in edge}
    if declared_n is not None:
        label_set.update(range(declared_n))
    labels = sorted(label_set)
    index = {lab: i for i, lab in enumerate(labels)}
    return Graph(len(labels), [(index[a], index[b]) for a, b in edges], labels=labels)


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS ".col" instance ("p edge n m" / "e u v", 1-based labels)."""
    n: int | None = None
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4:
                raise ParseError("problem line must read 'p edge <n> <m>'", lineno)
            try:
                n = int(parts[2])
            except ValueError:
                raise ParseError("non-integer vertex count", lineno) from None
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(parts) != 3:
                raise ParseError("edge line must read 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("non-integer endpoint", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint outside 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' problem line")
    return Graph(n, [(u - 1, v - 1) for u, v in edges], labels=range(1, n + 1))


def to_edge_list(g: Graph) -> str:
    """Serialize to the edge-list format; parsing the result reproduces ``g``.

    Isolated vertices require a "# n=" header and therefore dense 0-based
    labels; exotic labelings without isolated vertices round-trip fine.
    """
    lines = []
    if any(len(nbrs) == 0 for nbrs in g.adj):
        if g.labels != tuple(range(g.n)):
            raise ValueError("isolated vertices need contiguous 0-based labels to serialize")
        lines.append(f"# n={g.n}")
    for u, v in g.edges():
        lines.append(f"{g.labels[u]} {g.labels[v]}")
    return "\n".join(lines) + "\n" if lines else ""


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or ACYCLIC for forests.

    BFS from every vertex of degree >= 2; the first non-tree edge met closes
    a candidate cycle of length dist(u) + dist(v) + 1.  The minimum over all
    roots is exact, and in a simple graph every shortest cycle is induced.
    """
    best: int | float = ACYCLIC
    adj = g.adj
    for start in range(g.n):
        if len(adj[start]) < 2:
            continue
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du + 1 >= best:
                break
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = du + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    candidate = du + dist[v] + 1
                    if candidate < best:
                        best = candidate
        if best == 3:
            break
    return best


def ensure_min_girth(g: Graph, bound: int, girth_value: int | float | None = None) -> int | float:
    """Raise PreconditionError unless the graph is acyclic or has girth >= bound."""
    value = girth(g) if girth_value is None else girth_value
    if value < bound:
        raise PreconditionError(f"requires girth >= {bound} (or a forest); this graph has girth {value}")
    return value


def restricted_neighbors(g: Graph, u: int, subset: Iterable[int]) -> set[int]:
    """N(u) intersected with the given vertex set."""
    g.check_vertex(u)
    allowed = subset if isinstance(subset, (set, frozenset)) else set(subset)
    return {v for v in g.adj[u] if v in allowed}


def _within_distance(adj: list[set[int]], source: int, target: int, cap: int) -> bool:
    """BFS out to depth ``cap``; True if target is reached that soon."""
    if cap < 0:
        return False
    if source == target:
        return True
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        d = dist[u] + 1
        if d > cap:
            break
        for v in adj[u]:
            if v not in dist:
                if v == target:
                    return True
                dist[v] = d
                queue.append(v)
    return False


def generate_girth_constrained(n: int, min_girth: int, edge_budget: int, seed: int) -> Graph:
    """Random graph whose girth is at least ``min_girth`` (possibly acyclic).

    Uniform random edge proposals; a proposal is kept only if the endpoints
    are currently at distance >= min_girth - 1, so every cycle it closes has
    length >= min_girth.  Deterministic for a fixed seed.  Stops at
    ``edge_budget`` accepted edges or when the attempt budget runs out, so
    the result may have fewer edges than asked for.
    """
    if min_girth < 3:
        raise ValueError("min_girth must be at least 3")
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    rng = random.Random(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []
    if n >= 2 and edge_budget > 0:
        cap = min_girth - 2  # reject when dist(u, v) <= cap
        attempts_left = 50 * max(edge_budget, n)
        while len(edges) < edge_budget and attempts_left > 0:
            attempts_left -= 1
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v or v in adj[u]:
                continue
            if _within_distance(adj, u, v, cap):
                continue
            adj[u].add(v)
            adj[v].add(u)
            edges.append((u, v))
    return Graph(n, edges)
