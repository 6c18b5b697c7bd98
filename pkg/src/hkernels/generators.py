"""Seeded random instances.

Structured families give every class its own palette of colors, with H
complete inside a palette and empty across palettes. Grouping arcs by
palette is then always an H-class partition, so each generator returns it
alongside the digraph.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .coloring import ColoredDigraph, PatternDigraph
from .digraph import Digraph
from .hclass import HClassPartition

FAMILIES = ("blobs", "symmetric-classes", "random")
DENSITIES = (0.2, 0.5, 0.8)


@dataclass(frozen=True)
class Generated:
    colored: ColoredDigraph
    partition: HClassPartition | None
    params: dict = field(default_factory=dict)


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_pattern(rng: random.Random, colors: int, density: float) -> PatternDigraph:
    palette = list(range(1, colors + 1))
    return PatternDigraph(palette, [(a, b) for a in palette for b in palette if rng.random() < density])


def random_instance(seed, max_vertices: int = 8, max_arcs: int = 14, max_colors: int = 4, density: float | None = None) -> Generated:
    """Uniform-ish random H-colored digraph with a random pattern H."""
    rng = _rng(seed)
    n = rng.randint(2, max_vertices)
    colors = rng.randint(1, max_colors)
    density = rng.choice(DENSITIES) if density is None else density
    pattern = random_pattern(rng, colors, density)
    pairs = [(f"v{i}", f"v{j}") for i in range(n) for j in range(n) if i != j]
    m = rng.randint(1, min(max_arcs, len(pairs)))
    arcs = rng.sample(pairs, m)
    d = ColoredDigraph(
        Digraph([f"v{i}" for i in range(n)], arcs),
        {a: rng.randint(1, colors) for a in arcs},
        pattern,
    )
    return Generated(d, None, {"family": "random", "density": density})


class _Builder:
    """Accumulates arcs class by class; each class draws from its own palette."""

    def __init__(self, rng: random.Random, max_palette: int = 2) -> None:
        self.rng = rng
        self.max_palette = max_palette
        self.vertices: list = []
        self.classes: list[list] = []
        self.palettes: list[list] = []
        self.coloring: dict = {}
        self.reserved: set = set()
        self._next = 0

    def fresh(self, count: int = 1) -> list:
        out = [f"v{self._next + i}" for i in range(count)]
        self._next += count
        self.vertices.extend(out)
        return out

    def new_class(self) -> int:
        base = sum(len(p) for p in self.palettes)
        size = self.rng.randint(1, self.max_palette)
        self.palettes.append([base + i + 1 for i in range(size)])
        self.classes.append([])
        return len(self.classes) - 1

    def free(self, u, v) -> bool:
        return u != v and (u, v) not in self.coloring

    def add(self, cls: int, u, v) -> None:
        assert self.free(u, v), (u, v)
        self.coloring[(u, v)] = self.rng.choice(self.palettes[cls])
        self.classes[cls].append((u, v))

    def add_path(self, cls: int, walk: list) -> None:
        for u, v in zip(walk, walk[1:]):
            self.add(cls, u, v)

    def finish(self, params: dict, isolated: int = 0) -> Generated:
        self.fresh(isolated)
        colors = [c for p in self.palettes for c in p]
        pattern = PatternDigraph(colors, [(a, b) for p in self.palettes for a in p for b in p])
        d = ColoredDigraph(Digraph(self.vertices, self.coloring), dict(self.coloring), pattern)
        groups = [grp for grp in self.classes if grp]
        return Generated(d, HClassPartition(groups), params)


def symmetric_classes(seed, classes: int = 3, max_cycle: int = 4, chords: float = 0.3, isolated: int = 0) -> Generated:
    """Strongly connected classes glued at shared vertices.

    Each class is a directed cycle (plus random chords) through at least one
    vertex of an earlier class and at least one private vertex, so every
    class is strongly connected, owns an obstruction-free vertex, and
    C_F(D) is symmetric, connected and sinkless when ``classes >= 2``.
    """
    rng = _rng(seed)
    b = _Builder(rng)
    for i in range(classes):
        cls = b.new_class()
        for _ in range(50):
            length = rng.randint(2, max_cycle)
            private = b.fresh(1)
            shared = []
            if i:
                pool = [v for v in b.vertices if v not in b.reserved and v not in private]
                shared = rng.sample(pool, min(len(pool), rng.randint(1, max(1, length - 1))))
            extra = b.fresh(max(0, length - 1 - len(shared)))
            cycle = private + shared + extra
            rng.shuffle(cycle)
            ring = list(zip(cycle, cycle[1:] + cycle[:1]))
            if all(b.free(u, v) for u, v in ring):
                break
            # retry with a different cycle; discard the unused fresh vertices
            for v in private + extra:
                b.vertices.remove(v)
        else:
            raise RuntimeError("could not place a cycle")
        b.reserved.update(private)
        for u, v in ring:
            b.add(cls, u, v)
        for u in cycle:
            for v in cycle:
                if b.free(u, v) and rng.random() < chords:
                    b.add(cls, u, v)
    return b.finish({"family": "symmetric-classes", "classes": classes}, isolated)


def blobs(seed, count: int = 2, max_cycle: int = 4) -> Generated:
    """A chain of monochromatic-palette cycles, each bridging into the next."""
    rng = _rng(seed)
    b = _Builder(rng)
    cycles = []
    for _ in range(count):
        cls = b.new_class()
        cyc = b.fresh(rng.randint(2, max_cycle))
        b.add_path(cls, cyc + cyc[:1])
        cycles.append((cls, cyc))
    for (cls, cyc), (_, nxt) in zip(cycles, cycles[1:]):
        b.add(cls, rng.choice(cyc), rng.choice(nxt))
    return b.finish({"family": "blobs", "count": count})


def ring(seed, segments: int = 3, max_segment: int = 3, isolated: int = 0) -> Generated:
    """Path classes joined end to start in a ring; C_F(D) is the ring of classes."""
    rng = _rng(seed)
    b = _Builder(rng)
    hubs = b.fresh(segments)
    for i in range(segments):
        cls = b.new_class()
        inner = b.fresh(rng.randint(0, max_segment - 1))
        b.add_path(cls, [hubs[i]] + inner + [hubs[(i + 1) % segments]])
    return b.finish({"family": "ring", "segments": segments}, isolated)


def segment_forest(seed, roots: int = 2, feeders: int = 3, max_segment: int = 3, isolated: int = 0) -> Generated:
    """Terminal cycle classes fed by path classes that end inside an earlier class.

    A feeder ends on a vertex with an out-arc in its target class, so the
    class digraph is acyclic apart from loops and its sinks are the roots.
    """
    rng = _rng(seed)
    b = _Builder(rng)
    heads = []
    for _ in range(roots):
        cls = b.new_class()
        cyc = b.fresh(rng.randint(2, max_segment + 1))
        b.add_path(cls, cyc + cyc[:1])
        heads.append((cls, [u for u, _ in b.classes[cls]]))
    for _ in range(feeders):
        target_cls, tails = rng.choice(heads)
        cls = b.new_class()
        path = b.fresh(rng.randint(1, max_segment)) + [rng.choice(tails)]
        b.add_path(cls, path)
        heads.append((cls, [u for u, _ in b.classes[cls]]))
    return b.finish({"family": "segment-forest", "roots": roots, "feeders": feeders}, isolated)


def generate(family: str, seed: int, size: int = 3) -> Generated:
    """Entry point behind the ``gen`` command; (family, seed, size) fixes the output."""
    if family == "random":
        return random_instance(seed, max_vertices=max(2, size), max_arcs=2 * max(2, size))
    if family == "symmetric-classes":
        return symmetric_classes(seed, classes=max(1, size))
    if family == "blobs":
        return blobs(seed, count=max(1, size))
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def targeted(method: str, seed) -> tuple[Generated, int, int | None]:
    """An instance aimed at ``method``'s hypotheses, plus (k, l) to request.

    The instances are built so the hypotheses usually hold; callers still
    rely on the constructor's own checks to reject the rest.
    """
    rng = _rng(seed)
    iso = rng.choice((0, 0, 1, 2))
    if method == "thm35":
        return random_instance(rng, density=rng.choice(DENSITIES)), 2, 1
    if method in ("prop41", "thm52"):
        k = rng.randint(2, 4)
        gen = ring(rng, segments=rng.randint(k, k + 3), isolated=0 if method == "thm52" else iso)
        return gen, k, rng.randint(max(1, k - 1), gen.params["segments"])
    if method in ("prop42", "thm51"):
        gen = segment_forest(
            rng, roots=rng.randint(1, 3), feeders=rng.randint(0, 4),
            isolated=iso if method == "thm51" else 0,
        )
        return gen, rng.randint(2, 6), 1 + gen.params["feeders"]
    if method in ("prop43", "thm53"):
        gen = symmetric_classes(rng, classes=rng.randint(2, 5), isolated=0 if method == "prop43" else iso)
        return gen, 3, 2
    if method == "prop44":
        gen = rng.choice((symmetric_classes, blobs))(rng, rng.randint(2, 4))
        return gen, 3, 2
    if method == "thm54":
        k = rng.randint(2, 3)
        return symmetric_classes(rng, classes=rng.randint(1, 5), isolated=iso), k, k + rng.randint(1, 2)
    if method == "thm55":
        return symmetric_classes(rng, classes=rng.randint(1, 5), isolated=iso), rng.randint(2, 4), None
    raise ValueError(f"no targeted generator for {method!r}")
