"""Plain digraphs and the classical algorithms the rest of the package builds on."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable

from .util import INF, Verdict, natural_key, ordered, ordered_arcs

Vertex = Hashable
Arc = tuple


class Digraph:
    """Immutable digraph without parallel arcs.

    Loops are only accepted when ``loops_allowed`` is set. Vertex ids are
    opaque; iteration order is the natural order of their string form.
    """

    __slots__ = ("vertices", "arcs", "loops_allowed", "_out", "_in", "_hash")

    def __init__(
        self,
        vertices: Iterable[Vertex] = (),
        arcs: Iterable[Arc] = (),
        loops_allowed: bool = False,
    ) -> None:
        vertex_list = list(vertices)
        arc_list = [tuple(a) for a in arcs]
        vset = set(vertex_list)
        if len(vset) != len(vertex_list):
            raise ValueError("duplicate vertex ids")
        seen: set[Arc] = set()
        for arc in arc_list:
            if len(arc) != 2:
                raise ValueError(f"arc {arc!r} is not an ordered pair")
            u, v = arc
            if u not in vset or v not in vset:
                raise ValueError(f"arc {arc!r} has an endpoint outside the vertex set")
            if u == v and not loops_allowed:
                raise ValueError(f"loop {arc!r} in a loopless digraph")
            if arc in seen:
                raise ValueError(f"parallel arc {arc!r}")
            seen.add(arc)
        self.vertices: tuple = tuple(ordered(vset))
        self.arcs: frozenset = frozenset(seen)
        self.loops_allowed = loops_allowed
        out: dict = {v: [] for v in self.vertices}
        inn: dict = {v: [] for v in self.vertices}
        for u, v in ordered_arcs(seen):
            out[u].append(v)
            inn[v].append(u)
        self._out = {v: tuple(ws) for v, ws in out.items()}
        self._in = {v: tuple(ws) for v, ws in inn.items()}
        self._hash = None

    def __repr__(self) -> str:
        return f"Digraph(|V|={len(self.vertices)}, |A|={len(self.arcs)}, loops_allowed={self.loops_allowed})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return (
            self.loops_allowed == other.loops_allowed
            and set(self.vertices) == set(other.vertices)
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self.vertices), self.arcs, self.loops_allowed))
        return self._hash

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._out

    def out_neighbors(self, v: Vertex) -> tuple:
        return self._out[v]

    def in_neighbors(self, v: Vertex) -> tuple:
        return self._in[v]

    def out_degree(self, v: Vertex) -> int:
        return len(self._out[v])

    def in_degree(self, v: Vertex) -> int:
        return len(self._in[v])

    def degree(self, v: Vertex) -> int:
        return len(self._out[v]) + len(self._in[v])

    def has_arc(self, u: Vertex, v: Vertex) -> bool:
        return (u, v) in self.arcs

    def sorted_arcs(self) -> list[Arc]:
        return ordered_arcs(self.arcs)

    def isolated_vertices(self) -> frozenset:
        return frozenset(v for v in self.vertices if not self._out[v] and not self._in[v])

    def induced(self, keep: Iterable[Vertex]) -> "Digraph":
        keep = set(keep)
        return Digraph(
            keep,
            (a for a in self.arcs if a[0] in keep and a[1] in keep),
            self.loops_allowed,
        )

    def without(self, drop: Iterable[Vertex]) -> "Digraph":
        drop = set(drop)
        return self.induced(v for v in self.vertices if v not in drop)

    def arc_induced(self, arcs: Iterable[Arc]) -> "Digraph":
        """Subdigraph with exactly these arcs and their endpoints."""
        arcs = set(arcs)
        for a in arcs:
            if a not in self.arcs:
                raise ValueError(f"{a!r} is not an arc of the digraph")
        verts = {x for a in arcs for x in a}
        return Digraph(verts, arcs, self.loops_allowed)


@dataclass(frozen=True)
class Condensation:
    """Strong components in topological order (sources first) and their quotient DAG."""

    components: tuple[frozenset, ...]
    component_of: dict
    dag: Digraph

    def terminal_components(self) -> list[frozenset]:
        return [self.components[i] for i in self.dag.vertices if not self.dag.out_neighbors(i)]


def _tarjan(g: Digraph) -> list[list]:
    """Iterative Tarjan; components come out sinks-first."""
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    result: list[list] = []
    counter = 0
    for root in g.vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(g.out_neighbors(root)))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.out_neighbors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                result.append(comp)
    return result


def strong_components(g: Digraph) -> Condensation:
    comps = [frozenset(c) for c in reversed(_tarjan(g))]
    component_of = {v: i for i, c in enumerate(comps) for v in c}
    dag_arcs = {
        (component_of[u], component_of[v])
        for u, v in g.arcs
        if component_of[u] != component_of[v]
    }
    dag = Digraph(range(len(comps)), dag_arcs, loops_allowed=False)
    return Condensation(tuple(comps), component_of, dag)


def is_strongly_connected(g: Digraph) -> bool:
    if not g.vertices:
        raise ValueError("strong connectivity is undefined for the empty digraph")
    return len(strong_components(g).components) == 1


def is_unilateral(g: Digraph) -> bool:
    # Tarjan order is a topological order of the condensation; a DAG has a
    # Hamiltonian path iff every topologically consecutive pair is joined.
    cond = strong_components(g)
    dag = cond.dag
    return all(dag.has_arc(i, i + 1) for i in range(len(cond.components) - 1))


def sinks(g: Digraph) -> frozenset:
    return frozenset(v for v in g.vertices if all(w == v for w in g.out_neighbors(v)))


def reachable_set(g: Digraph, sources: Iterable[Vertex]) -> frozenset:
    sources = list(sources)
    for s in sources:
        if s not in g:
            raise KeyError(f"unknown vertex {s!r}")
    seen = set(sources)
    queue = deque(sources)
    while queue:
        v = queue.popleft()
        for w in g.out_neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def reaching_set(g: Digraph, targets: Iterable[Vertex]) -> frozenset:
    """Vertices with a path (possibly of length 0) into ``targets``."""
    targets = list(targets)
    seen = set(targets)
    queue = deque(targets)
    while queue:
        v = queue.popleft()
        for w in g.in_neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def distances_from(g: Digraph, source: Vertex) -> dict:
    """BFS distances from ``source``; unreachable vertices are absent."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.out_neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def shortest_walk_length(g: Digraph, u: Vertex, v: Vertex) -> float | int:
    if u not in g or v not in g:
        raise KeyError(f"unknown vertex in pair {(u, v)!r}")
    return distances_from(g, u).get(v, INF)


def min_nonloop_cycle_length(g: Digraph) -> float | int:
    best: float | int = INF
    cache: dict = {}
    for u, v in g.arcs:
        if u == v:
            continue
        if v not in cache:
            cache[v] = distances_from(g, v)
        d = cache[v].get(u)
        if d is not None:
            best = min(best, d + 1)
    return best


def is_symmetric(g: Digraph) -> bool:
    return all((v, u) in g.arcs for u, v in g.arcs)


def is_transitive(g: Digraph) -> Verdict:
    """Transitivity on distinct endpoints: (u,v),(v,w) with u != w forces (u,w)."""
    for u, v in g.sorted_arcs():
        if u == v:
            continue
        for w in g.out_neighbors(v):
            if w != u and w != v and (u, w) not in g.arcs:
                return Verdict.no("missing transitive arc", (u, v, w))
    return Verdict.yes()


def all_distances(g: Digraph) -> dict:
    return {v: distances_from(g, v) for v in g.vertices}


def smallest(vertices: Iterable[Vertex]) -> Vertex:
    return min(vertices, key=natural_key)
