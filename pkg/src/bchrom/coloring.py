"""Constructive b-coloring with m(G) colors from a good set (girth >= 9).

Given a good set W = {v_1 < ... < v_m}, anchor v_i on color i, then color the
link vertices (interiors of short W-to-W paths) in four ordered passes, make
every anchor a b-vertex by finishing its neighborhood, and extend greedily.
Each pass re-checks the properties the correctness argument rests on:

* properness after every pass,
* after the link passes, every anchor has at least as many uncolored
  neighbors as colors missing from its neighborhood,
* no vertex is ever recolored twice,
* the uncolored neighbors of W form a stable set before completion,
* every anchor sees all other colors after completion.

A violation raises InvariantViolation: on a girth->=9 input that is a bug.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .density import DensityProfile, density_profile
from .errors import InvariantViolation
from .goodset import GoodSet, check_good_set
from .graph import Graph, ensure_min_girth, girth


@dataclass(frozen=True)
class LinkStructure:
    """Link vertices: interiors of length-2/3 paths between anchors.

    ``chained`` holds link vertices adjacent to another link vertex;
    ``multi_anchored`` those adjacent to at least two anchors.  Every link
    vertex falls in at least one of the two groups.
    """

    vertices: frozenset[int]
    chained: frozenset[int]
    multi_anchored: frozenset[int]


@dataclass(frozen=True)
class TraceEvent:
    step: str
    vertex: int
    color: int
    recolored_from: int | None = None


@dataclass(frozen=True)
class BResult:
    """A witnessed b-coloring: chi_b colors, one designated b-vertex each."""

    chi_b: int
    coloring: dict[int, int]
    basis: dict[int, int]
    trace: tuple[TraceEvent, ...] = ()


class PartialColoring:
    """Mutable vertex -> color map that records provenance and recolorings."""

    def __init__(self):
        self.colors: dict[int, int] = {}
        self.provenance: dict[int, str] = {}
        self.trace: list[TraceEvent] = []
        self._recolored: set[int] = set()

    def assign(self, v: int, color: int, step: str) -> None:
        if v in self.colors:
            raise InvariantViolation("vertex assigned twice", step=step, vertex=v)
        self.colors[v] = color
        self.provenance[v] = step
        self.trace.append(TraceEvent(step, v, color))

    def recolor(self, v: int, color: int, step: str) -> None:
        if v not in self.colors:
            raise InvariantViolation("cannot recolor an uncolored vertex", step=step, vertex=v)
        if v in self._recolored:
            raise InvariantViolation("vertex recolored twice", step=step, vertex=v)
        self._recolored.add(v)
        old = self.colors[v]
        self.colors[v] = color
        self.provenance[v] = step
        self.trace.append(TraceEvent(step, v, color, recolored_from=old))


def classify_links(g: Graph, anchors: GoodSet) -> LinkStructure:
    """Scan all anchor-to-anchor paths of length 2 or 3 with free interiors."""
    w_set = frozenset(anchors.members)
    anchor_nbrs: dict[int, frozenset[int]] = {}
    for x in range(g.n):
        if x in w_set:
            continue
        near = g.adj_sets[x] & w_set
        if near:
            anchor_nbrs[x] = near
    link: set[int] = set()
    for x, near_x in anchor_nbrs.items():
        if len(near_x) >= 2:
            link.add(x)
        for y in g.adj[x]:
            if y in w_set or y not in anchor_nbrs:
                continue
            if len(near_x | anchor_nbrs[y]) >= 2:
                link.add(x)
                link.add(y)
    chained = frozenset(x for x in link if g.adj_sets[x] & link)
    multi = frozenset(x for x in link if len(anchor_nbrs[x]) >= 2)
    return LinkStructure(vertices=frozenset(link), chained=chained, multi_anchored=multi)


def derange_assign(targets: Sequence[tuple[int, int]], palette: Sequence[int]) -> dict[int, int]:
    """Injective palette assignment where no target gets its forbidden color.

    targets is an ordered list of (vertex, forbidden color).  The forbidden
    colors must be distinct members of the palette and there must be at least
    as many palette colors as targets.  Construction: lay out the forbidden
    colors in target order, append the unused palette colors, and shift the
    sequence cyclically by one.
    """
    palette = list(palette)
    if len(palette) < 2:
        raise ValueError("palette must have at least two colors")
    if len(set(palette)) != len(palette):
        raise ValueError("palette colors must be distinct")
    if len(targets) > len(palette):
        raise ValueError("more targets than palette colors")
    forbidden = [f for _, f in targets]
    if len(set(forbidden)) != len(forbidden):
        raise ValueError("forbidden colors must be distinct")
    if any(f not in palette for f in forbidden):
        raise ValueError("every forbidden color must belong to the palette")
    taken = set(forbidden)
    sequence = forbidden + [c for c in palette if c not in taken]
    size = len(sequence)
    return {v: sequence[(j + 1) % size] for j, (v, _) in enumerate(targets)}


def _assert_proper(g: Graph, pc: PartialColoring, step: str) -> None:
    colors = pc.colors
    for u in sorted(colors):
        cu = colors[u]
        for v in g.adj[u]:
            if v > u and colors.get(v) == cu:
                raise InvariantViolation(f"edge {u}-{v} is monochromatic", step=step, vertex=u)


def _assert_anchor_slack(g: Graph, pc: PartialColoring, anchors: GoodSet) -> None:
    m = len(anchors.members)
    for i, v in enumerate(anchors.members):
        own = i + 1
        seen = {pc.colors[u] for u in g.adj[v] if u in pc.colors}
        missing = set(range(1, m + 1)) - {own} - seen
        free = sum(1 for u in g.adj[v] if u not in pc.colors)
        if len(missing) > free:
            raise InvariantViolation(
                f"anchor is missing {len(missing)} colors but has only {free} uncolored neighbors",
                step="slack",
                vertex=v,
            )


def color_links(
    g: Graph,
    anchors: GoodSet,
    links: LinkStructure,
    *,
    girth_value: int | float | None = None,
) -> PartialColoring:
    """Anchor W and run the four link-coloring passes, each to exhaustion.

    1. A link vertex x with a link neighbor x' takes the color of one of
       x' own anchors.
    2. Per anchor v_i, the doubly anchored neighbors x_1..x_q (q > 1) take
       the colors of their second anchors, deranged so x_j avoids the color
       of its own second anchor; vertices already colored keep their color
       and their palette entry is dropped.
    3. A still-uncolored doubly anchored x next to an anchor v_i that has a
       chained link neighbor y steals y's color; y moves to the color of
       another anchor of x.  This is the only recoloring, and it happens at
       most once per vertex.
    4. Any remaining doubly anchored x takes the color of an anchor that
       neither touches x nor shares with x a witness neighbor; condition (a)
       of the good set guarantees such an anchor exists.
    """
    ensure_min_girth(g, 9, girth_value)
    members = anchors.members
    m = len(members)
    anchor_color = {v: i + 1 for i, v in enumerate(members)}
    w_set = frozenset(members)
    link_set = links.vertices
    pc = PartialColoring()
    for v in members:
        pc.assign(v, anchor_color[v], "anchor")

    # pass 1: chained link vertices copy an anchor color from across the chain
    for x in sorted(links.chained):
        x2 = min(g.adj_sets[x] & link_set)
        anchors_of_x2 = g.adj_sets[x2] & w_set
        if not anchors_of_x2:
            raise InvariantViolation("link vertex without an anchor neighbor", step="step1", vertex=x2)
        pc.assign(x, anchor_color[min(anchors_of_x2)], "step1")
    _assert_proper(g, pc, "step1")

    # pass 2: deranged second-anchor colors around each anchor
    for v_i in members:
        star = sorted(g.adj_sets[v_i] & links.multi_anchored)
        if len(star) <= 1:
            continue
        forbidden: list[int] = []
        for x in star:
            others = (g.adj_sets[x] & w_set) - {v_i}
            if not others:
                raise InvariantViolation("doubly anchored vertex lost its second anchor", step="step2", vertex=x)
            forbidden.append(anchor_color[min(others)])
        if len(set(forbidden)) != len(forbidden):
            raise InvariantViolation("second-anchor colors collide around an anchor", step="step2", vertex=v_i)
        pinned = {pc.colors[x] for x in star if x in pc.colors}
        palette = [c for c in forbidden if c not in pinned]
        targets = [(x, f) for x, f in zip(star, forbidden) if x not in pc.colors]
        if not targets:
            continue
        try:
            assignment = derange_assign(targets, palette)
        except ValueError as exc:
            raise InvariantViolation(f"derangement infeasible: {exc}", step="step2", vertex=v_i) from exc
        for x, _ in targets:
            pc.assign(x, assignment[x], "step2")
    _assert_proper(g, pc, "step2")

    # pass 3: steal a chained neighbor's color, then move that neighbor
    for x in sorted(links.multi_anchored):
        if x in pc.colors:
            continue
        eligible = [v for v in sorted(g.adj_sets[x] & w_set) if g.adj_sets[v] & links.chained]
        if not eligible:
            continue
        v_i = eligible[0]
        y = min(g.adj_sets[v_i] & links.chained)
        pc.assign(x, pc.colors[y], "step3-new")
        others = sorted((g.adj_sets[x] & w_set) - {v_i})
        if not others:
            raise InvariantViolation("doubly anchored vertex lost its second anchor", step="step3", vertex=x)
        pc.recolor(y, anchor_color[others[0]], "step3-recolor")
    _assert_proper(g, pc, "step3")

    # pass 4: an unencircled vertex always has a safe anchor color left
    target_degree = m - 1
    for x in sorted(links.multi_anchored):
        if x in pc.colors:
            continue
        nx = g.adj_sets[x]
        options = [
            v
            for v in members
            if v not in nx
            and not any(w in nx and len(g.adj[w]) == target_degree for w in g.adj_sets[v] & w_set)
        ]
        if not options:
            raise InvariantViolation("uncolored doubly anchored vertex is encircled", step="step4", vertex=x)
        pc.assign(x, anchor_color[options[0]], "step4")
    _assert_proper(g, pc, "step4")

    leftovers = sorted(x for x in link_set if x not in pc.colors)
    if leftovers:
        raise InvariantViolation("link vertex survived all four passes", step="step4", vertex=leftovers[0])
    _assert_anchor_slack(g, pc, anchors)
    return pc


def complete_b_vertices(g: Graph, anchors: GoodSet, pc: PartialColoring) -> PartialColoring:
    """Hand each anchor its missing colors via distinct uncolored neighbors.

    The uncolored neighbors of W form a stable set and each has exactly one
    colored neighbor (its anchor), so the assignments never clash.  Leftover
    neighbors of degree >= m(G) are colored here as well: deferring them to
    the greedy pass could strand a high-degree vertex with no free color.
    """
    members = anchors.members
    m = len(members)
    fringe = sorted({u for v in members for u in g.adj[v] if u not in pc.colors})
    fringe_set = set(fringe)
    for u in fringe:
        clash = g.adj_sets[u] & fringe_set
        if clash:
            raise InvariantViolation(
                f"uncolored anchor neighbors {u} and {min(clash)} are adjacent",
                step="completion",
                vertex=u,
            )
    full_palette = set(range(1, m + 1))
    for i, v in enumerate(members):
        own = i + 1
        neighborhood = g.adj[v]
        seen = {pc.colors[u] for u in neighborhood if u in pc.colors}
        missing = sorted(full_palette - {own} - seen)
        free = [u for u in neighborhood if u not in pc.colors]
        if len(free) < len(missing):
            raise InvariantViolation("not enough uncolored neighbors for the missing colors", step="completion", vertex=v)
        for color, u in zip(missing, free):
            pc.assign(u, color, "completion")
        for u in free[len(missing):]:
            if len(g.adj[u]) >= m:
                used = {pc.colors[z] for z in g.adj[u] if z in pc.colors}
                color = next((c for c in range(1, m + 1) if c not in used), None)
                if color is None:
                    raise InvariantViolation("no color left for a high-degree neighbor", step="completion", vertex=u)
                pc.assign(u, color, "completion")
    _assert_proper(g, pc, "completion")
    for i, v in enumerate(members):
        own = i + 1
        seen = {pc.colors[u] for u in g.adj[v] if u in pc.colors}
        if not (full_palette - {own} <= seen):
            raise InvariantViolation("anchor does not see every other color", step="completion", vertex=v)
    return pc


def greedy_extend(g: Graph, pc: PartialColoring, num_colors: int) -> dict[int, int]:
    """Color the remaining vertices with the smallest free color, by id.

    Sound because every vertex of degree >= num_colors was colored earlier;
    the remaining ones see at most num_colors - 1 colors.
    """
    for u in range(g.n):
        if u not in pc.colors and len(g.adj[u]) >= num_colors:
            raise InvariantViolation("uncolored vertex too connected for greedy completion", step="greedy", vertex=u)
    for u in range(g.n):
        if u in pc.colors:
            continue
        used = {pc.colors[z] for z in g.adj[u] if z in pc.colors}
        color = next((c for c in range(1, num_colors + 1) if c not in used), None)
        if color is None:
            raise InvariantViolation("no color available", step="greedy", vertex=u)
        pc.assign(u, color, "greedy")
    return dict(pc.colors)


def b_coloring_with_good_set(
    g: Graph,
    anchors: GoodSet,
    *,
    profile: DensityProfile | None = None,
    girth_value: int | float | None = None,
) -> BResult:
    """Build a b-coloring with m(G) colors whose basis is the good set.

    The finished coloring is re-validated with the independent checker
    before being returned.
    """
    from .oracle import check_b_coloring

    if profile is None:
        profile = density_profile(g)
    gv = girth_value if girth_value is not None else girth(g)
    ensure_min_girth(g, 9, gv)
    violation = check_good_set(g, anchors.members, profile)
    if violation is not None:
        raise ValueError(f"anchors are not a good set: {violation.kind}")
    links = classify_links(g, anchors)
    pc = color_links(g, anchors, links, girth_value=gv)
    complete_b_vertices(g, anchors, pc)
    total = greedy_extend(g, pc, profile.m)
    report = check_b_coloring(g, total, profile.m)
    if report.basis is None:
        raise InvariantViolation("constructed coloring failed the validity check")
    basis = {i + 1: v for i, v in enumerate(anchors.members)}
    return BResult(chi_b=profile.m, coloring=total, basis=basis, trace=tuple(pc.trace))
