"""H-class partitions of the arc set and the H-class digraph they induce."""
from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from scipy.cluster.hierarchy import DisjointSet

from .coloring import ColoredDigraph, obstruction_free_vertices
from .digraph import (
    Arc,
    Digraph,
    Vertex,
    is_strongly_connected,
    is_unilateral,
    reaching_set,
)
from .util import Verdict, arc_key, natural_key, ordered_arcs


class HClassPartition:
    """Disjoint nonempty arc classes named F1, F2, ... in the given order."""

    __slots__ = ("classes", "class_of")

    def __init__(self, groups: Iterable[Iterable[Arc]] | Mapping[str, Iterable[Arc]]) -> None:
        if isinstance(groups, Mapping):
            named = [(str(k), frozenset(tuple(a) for a in v)) for k, v in groups.items()]
        else:
            named = [(f"F{i}", frozenset(tuple(a) for a in grp)) for i, grp in enumerate(groups, 1)]
        class_of: dict = {}
        for cid, arcs in named:
            if not arcs:
                raise ValueError(f"class {cid} is empty")
            for a in arcs:
                if a in class_of:
                    raise ValueError(f"arc {a!r} lies in both {class_of[a]} and {cid}")
                class_of[a] = cid
        self.classes: dict[str, frozenset] = dict(named)
        self.class_of: dict[Arc, str] = class_of

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __repr__(self) -> str:
        return f"HClassPartition({len(self.classes)} classes over {len(self.class_of)} arcs)"

    def groups(self) -> list[list[Arc]]:
        return [ordered_arcs(arcs) for arcs in self.classes.values()]

    def vertices_of(self, cid: str) -> frozenset:
        return frozenset(x for a in self.classes[cid] for x in a)

    def digest(self) -> str:
        canon = sorted(
            [[list(map(str, a)) for a in ordered_arcs(arcs)] for arcs in self.classes.values()]
        )
        return hashlib.sha256(json.dumps(canon).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class NoPartition:
    """No H-class partition exists: the compatible-turn closure merges an incompatible pair."""

    pair: tuple[Arc, Arc]
    chain: tuple[Arc, ...]

    def explain(self) -> str:
        (a, b) = self.pair
        steps = " ~ ".join(f"{u}->{v}" for u, v in self.chain)
        return (
            f"turn {a[0]}->{a[1]}->{b[1]} is not allowed by H, yet compatible turns force "
            f"arcs {a[0]}->{a[1]} and {b[0]}->{b[1]} into one class via: {steps}"
        )


def _compatibility_links(d: ColoredDigraph):
    for a, b in d.consecutive_pairs():
        if d.compatible(a, b):
            yield a, b


def _merge_chain(d: ColoredDigraph, start: Arc, goal: Arc) -> tuple[Arc, ...]:
    """Shortest sequence of arcs joined by compatible turns (either direction)."""
    links: dict = {}
    for a, b in _compatibility_links(d):
        links.setdefault(a, []).append(b)
        links.setdefault(b, []).append(a)
    parent = {start: None}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        if a == goal:
            break
        for b in sorted(links.get(a, ()), key=arc_key):
            if b not in parent:
                parent[b] = a
                queue.append(b)
    path = [goal]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def finest_partition(d: ColoredDigraph) -> HClassPartition | NoPartition:
    """The unique finest H-class partition, or a NoPartition explanation."""
    arcs = d.underlying.sorted_arcs()
    ds = DisjointSet(arcs)
    for a, b in _compatibility_links(d):
        ds.merge(a, b)
    for a, b in d.consecutive_pairs():
        if ds.connected(a, b) and not d.compatible(a, b):
            return NoPartition((a, b), _merge_chain(d, a, b))
    groups = [ordered_arcs(s) for s in ds.subsets()]
    groups.sort(key=lambda grp: arc_key(grp[0]))
    return HClassPartition(groups)


def validate_partition(d: ColoredDigraph, f: HClassPartition | Iterable[Iterable[Arc]]) -> Verdict:
    """Check the defining biconditional on every consecutive pair of arcs."""
    if not isinstance(f, HClassPartition):
        f = HClassPartition(f)
    if set(f.class_of) != set(d.arcs):
        raise ValueError("candidate is not a partition of A(D)")
    for a, b in d.consecutive_pairs():
        same = f.class_of[a] == f.class_of[b]
        ok = d.compatible(a, b)
        if same and not ok:
            return Verdict.no("merged-but-incompatible", (a, b))
        if ok and not same:
            return Verdict.no("split-but-compatible", (a, b))
    return Verdict.yes()


@dataclass(frozen=True)
class ClassDigraph:
    """C_F(D): classes as vertices, (F,G) when some (u,v) in F is followed by (v,w) in G."""

    underlying: Digraph
    witness: dict

    @property
    def vertices(self) -> tuple:
        return self.underlying.vertices

    @property
    def arcs(self) -> frozenset:
        return self.underlying.arcs


def class_digraph(d: ColoredDigraph, f: HClassPartition) -> ClassDigraph:
    witness: dict = {}
    for a, b in d.consecutive_pairs():
        key = (f.class_of[a], f.class_of[b])
        witness.setdefault(key, (a, b))
    g = Digraph(f.classes.keys(), witness.keys(), loops_allowed=True)
    return ClassDigraph(g, witness)


def class_subdigraph(d: ColoredDigraph, f: HClassPartition, class_id: str) -> Digraph:
    if class_id not in f.classes:
        raise KeyError(f"unknown class {class_id!r}")
    return d.underlying.arc_induced(f.classes[class_id])


def union_subdigraph(d: ColoredDigraph, f: HClassPartition, class_ids: Iterable[str]) -> Digraph:
    """D<union of the given classes>."""
    arcs: set = set()
    for cid in class_ids:
        if cid not in f.classes:
            raise KeyError(f"unknown class {cid!r}")
        arcs |= f.classes[cid]
    return d.underlying.arc_induced(arcs)


def neighborhoods(d: ColoredDigraph, f: HClassPartition, x: Vertex) -> tuple[frozenset, frozenset, frozenset]:
    g = d.underlying
    if x not in g:
        raise KeyError(f"unknown vertex {x!r}")
    n_in = frozenset(f.class_of[(u, x)] for u in g.in_neighbors(x))
    n_out = frozenset(f.class_of[(x, v)] for v in g.out_neighbors(x))
    return n_in, n_out, n_in | n_out


def is_walk_preservative(d: ColoredDigraph, f: HClassPartition, c: ClassDigraph | None = None) -> Verdict:
    """Every vertex of D<F> reaches V(D<G>) inside D<F>, for each arc (F,G).

    Loops (F,F) hold trivially through the length-0 path. The witness of a
    failure is the triple (F, G, z) with z the smallest stranded vertex.
    """
    if c is None:
        c = class_digraph(d, f)
    subs = {cid: class_subdigraph(d, f, cid) for cid in f.classes}
    for fid, gid in sorted(c.arcs, key=lambda a: (natural_key(a[0]), natural_key(a[1]))):
        if fid == gid:
            continue
        sub = subs[fid]
        targets = set(sub.vertices) & set(subs[gid].vertices)
        ok = reaching_set(sub, targets)
        for z in sub.vertices:
            if z not in ok:
                return Verdict.no("vertex cannot reach the next class inside its own class", (fid, gid, z))
    return Verdict.yes()


@dataclass(frozen=True)
class ClassReport:
    strongly_connected: bool
    unilateral: bool
    has_sink: bool
    obstruction_free: frozenset

    def as_dict(self) -> dict:
        return {
            "strongly_connected": self.strongly_connected,
            "unilateral": self.unilateral,
            "has_sink": self.has_sink,
            "obstruction_free_vertices_in_D": sorted(map(str, self.obstruction_free), key=natural_key),
        }


def class_predicates(d: ColoredDigraph, f: HClassPartition) -> dict[str, ClassReport]:
    free = obstruction_free_vertices(d)
    report = {}
    for cid in f.classes:
        sub = class_subdigraph(d, f, cid)
        report[cid] = ClassReport(
            strongly_connected=is_strongly_connected(sub),
            unilateral=is_unilateral(sub),
            has_sink=any(sub.out_degree(v) == 0 for v in sub.vertices),
            obstruction_free=frozenset(v for v in sub.vertices if v in free),
        )
    return report
