"""H-colored digraphs: arc colorings constrained by a pattern digraph H."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

from .digraph import Arc, Digraph, Vertex
from .util import ordered

Color = Hashable


class PatternDigraph:
    """The pattern H: colors are its vertices, allowed color changes its arcs."""

    __slots__ = ("underlying",)

    def __init__(self, colors: Iterable[Color], arcs: Iterable[tuple] = ()) -> None:
        self.underlying = Digraph(colors, arcs, loops_allowed=True)

    @property
    def colors(self) -> tuple:
        return self.underlying.vertices

    @property
    def arcs(self) -> frozenset:
        return self.underlying.arcs

    def allows(self, first: Color, second: Color) -> bool:
        return (first, second) in self.underlying.arcs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PatternDigraph):
            return NotImplemented
        return self.underlying == other.underlying

    def __hash__(self) -> int:
        return hash(self.underlying)

    def __repr__(self) -> str:
        return f"PatternDigraph(colors={list(self.colors)!r}, arcs={sorted(self.arcs, key=str)!r})"


def loops_only_pattern(colors: Iterable[Color]) -> PatternDigraph:
    """H-walks in this pattern are exactly the monochromatic walks."""
    colors = list(colors)
    if not colors:
        raise ValueError("pattern needs at least one color")
    return PatternDigraph(colors, [(c, c) for c in colors])


def alternation_pattern(colors: Iterable[Color]) -> PatternDigraph:
    """H-walks in this pattern are exactly the properly colored walks."""
    colors = list(colors)
    if not colors:
        raise ValueError("pattern needs at least one color")
    return PatternDigraph(colors, [(c, d) for c in colors for d in colors if c != d])


class ColoredDigraph:
    """A loopless digraph whose arcs carry colors taken from a pattern."""

    __slots__ = ("underlying", "coloring", "pattern")

    def __init__(self, underlying: Digraph, coloring: Mapping[Arc, Color], pattern: PatternDigraph) -> None:
        if underlying.loops_allowed:
            underlying = Digraph(underlying.vertices, underlying.arcs, loops_allowed=False)
        coloring = {tuple(a): c for a, c in coloring.items()}
        if set(coloring) != set(underlying.arcs):
            missing = set(underlying.arcs) - set(coloring)
            extra = set(coloring) - set(underlying.arcs)
            raise ValueError(f"coloring must cover exactly the arcs (missing={missing}, extra={extra})")
        palette = set(pattern.colors)
        for arc, c in coloring.items():
            if c not in palette:
                raise ValueError(f"arc {arc!r} has color {c!r} outside the pattern")
        self.underlying = underlying
        self.coloring = coloring
        self.pattern = pattern

    @classmethod
    def build(
        cls,
        pattern: PatternDigraph,
        colored_arcs: Iterable[tuple],
        vertices: Iterable[Vertex] = (),
    ) -> "ColoredDigraph":
        """Convenience constructor from ``(u, v, color)`` triples."""
        triples = [tuple(t) for t in colored_arcs]
        verts = set(vertices) | {x for u, v, _ in triples for x in (u, v)}
        g = Digraph(verts, [(u, v) for u, v, _ in triples])
        return cls(g, {(u, v): c for u, v, c in triples}, pattern)

    @property
    def vertices(self) -> tuple:
        return self.underlying.vertices

    @property
    def arcs(self) -> frozenset:
        return self.underlying.arcs

    def color(self, arc: Arc) -> Color:
        return self.coloring[arc]

    def compatible(self, first: Arc, second: Arc) -> bool:
        """Whether the turn first -> second is allowed by H (no obstruction)."""
        return self.pattern.allows(self.coloring[first], self.coloring[second])

    def consecutive_pairs(self):
        """Every pair ((u,v),(v,w)) of arcs of D, in canonical order."""
        g = self.underlying
        for u, v in g.sorted_arcs():
            for w in g.out_neighbors(v):
                yield (u, v), (v, w)

    def without(self, drop: Iterable[Vertex]) -> "ColoredDigraph":
        sub = self.underlying.without(drop)
        return ColoredDigraph(sub, {a: self.coloring[a] for a in sub.arcs}, self.pattern)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredDigraph):
            return NotImplemented
        return (
            self.underlying == other.underlying
            and self.coloring == other.coloring
            and self.pattern == other.pattern
        )

    def __hash__(self) -> int:
        return hash((self.underlying, frozenset(self.coloring.items())))

    def __repr__(self) -> str:
        return f"ColoredDigraph(|V|={len(self.vertices)}, |A|={len(self.arcs)}, colors={len(self.pattern.colors)})"


@dataclass(frozen=True)
class Walk:
    """A walk x_0..x_n with n >= 1; vertices and arcs may repeat."""

    vertices: tuple
    closed: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 2:
            raise ValueError("a walk needs at least one arc")
        object.__setattr__(self, "closed", self.vertices[0] == self.vertices[-1])

    def __len__(self) -> int:
        return len(self.vertices) - 1

    def arcs(self) -> list[Arc]:
        xs = self.vertices
        return [(xs[i], xs[i + 1]) for i in range(len(xs) - 1)]

    def concat(self, other: "Walk") -> "Walk":
        if self.vertices[-1] != other.vertices[0]:
            raise ValueError("walks do not share the junction vertex")
        return Walk(self.vertices + other.vertices[1:])


def _check_walk(d: ColoredDigraph, w: Walk) -> list[Arc]:
    arcs = w.arcs()
    for a in arcs:
        if a not in d.coloring:
            raise ValueError(f"{a!r} is not an arc of D, so this is not a walk in D")
    return arcs


def obstructions(d: ColoredDigraph, w: Walk) -> frozenset:
    """Indices i where the turn at x_i is not an arc of H.

    Open walks use i in 1..n-1; closed walks also inspect x_0 through x_{n-1}.
    """
    arcs = _check_walk(d, w)
    n = len(arcs)
    out = {i for i in range(1, n) if not d.compatible(arcs[i - 1], arcs[i])}
    if w.closed and not d.compatible(arcs[n - 1], arcs[0]):
        out.add(0)
    return frozenset(out)


def h_length(d: ColoredDigraph, w: Walk) -> int:
    count = len(obstructions(d, w))
    return count if w.closed else count + 1


def is_h_walk(d: ColoredDigraph, w: Walk) -> bool:
    return not obstructions(d, w)


def obstruction_free_vertices(d: ColoredDigraph) -> frozenset:
    g = d.underlying
    free = []
    for x in g.vertices:
        if all(
            d.compatible((u, x), (x, v))
            for u in g.in_neighbors(x)
            for v in g.out_neighbors(x)
        ):
            free.append(x)
    return frozenset(free)


def is_h_digraph(d: ColoredDigraph, arc_subset: Iterable[Arc] | None = None) -> bool:
    """Every turn inside the arc-induced subdigraph is allowed by H."""
    arcs = set(d.arcs if arc_subset is None else (tuple(a) for a in arc_subset))
    for a in arcs:
        if a not in d.coloring:
            raise ValueError(f"{a!r} is not an arc of D")
    by_tail: dict = {}
    for a in arcs:
        by_tail.setdefault(a[0], []).append(a)
    for a in arcs:
        for b in by_tail.get(a[1], ()):
            if not d.compatible(a, b):
                return False
    return True


def used_colors(d: ColoredDigraph) -> list:
    return ordered(set(d.coloring.values()))
