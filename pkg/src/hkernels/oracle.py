"""Independent verification of (k,l,H)-kernels by walks.

Minimum H-lengths come from a 0/1 breadth-first search over the arc-state
graph: states are arcs of D and moving from (u,v) to (v,w) costs one
obstruction when the color pair is not an arc of H. An open walk with c
obstructions has H-length c + 1.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .coloring import ColoredDigraph, Walk, h_length
from .digraph import Arc, Vertex
from .kernels import SizeBoundExceeded, brute_limit
from .util import INF, Verdict, ordered


@dataclass(frozen=True)
class ArcStateGraph:
    """Arcs of D as states; transitions[(u,v)] lists ((v,w), weight)."""

    states: tuple[Arc, ...]
    transitions: dict

    @classmethod
    def of(cls, d: ColoredDigraph) -> "ArcStateGraph":
        g = d.underlying
        states = tuple(g.sorted_arcs())
        transitions = {
            (u, v): tuple(((v, w), 0 if d.compatible((u, v), (v, w)) else 1) for w in g.out_neighbors(v))
            for (u, v) in states
        }
        return cls(states, transitions)


def _obstruction_counts(d: ColoredDigraph, u: Vertex, graph: ArcStateGraph | None = None) -> dict:
    """Fewest obstructions on a walk from u ending with each arc (0/1 BFS)."""
    graph = ArcStateGraph.of(d) if graph is None else graph
    best: dict = {}
    queue: deque = deque()
    for w in d.underlying.out_neighbors(u):
        best[(u, w)] = 0
        queue.append((u, w))
    while queue:
        state = queue.popleft()
        here = best[state]
        for nxt, weight in graph.transitions[state]:
            cost = here + weight
            if cost < best.get(nxt, INF):
                best[nxt] = cost
                if weight:
                    queue.append(nxt)
                else:
                    queue.appendleft(nxt)
    return best


def h_distances_from(d: ColoredDigraph, u: Vertex, graph: ArcStateGraph | None = None) -> dict:
    """min_h_length(u, v) for every v != u reachable from u."""
    if u not in d.underlying:
        raise KeyError(f"unknown vertex {u!r}")
    out: dict = {}
    for (x, v), cost in _obstruction_counts(d, u, graph).items():
        if v != u and cost + 1 < out.get(v, INF):
            out[v] = cost + 1
    return out


def min_h_length(d: ColoredDigraph, u: Vertex, v: Vertex) -> float | int:
    if u == v:
        raise ValueError("closed walks are not searched; need u != v")
    if v not in d.underlying:
        raise KeyError(f"unknown vertex {v!r}")
    return h_distances_from(d, u).get(v, INF)


def h_distance_table(d: ColoredDigraph) -> dict:
    graph = ArcStateGraph.of(d)
    return {u: h_distances_from(d, u, graph) for u in d.vertices}


def h_walk_reachable(d: ColoredDigraph, u: Vertex) -> frozenset:
    return frozenset(v for v, length in h_distances_from(d, u).items() if length == 1)


def _check_subset(d: ColoredDigraph, s: Iterable[Vertex]) -> set:
    s = set(s)
    for v in s:
        if v not in d.underlying:
            raise KeyError(f"unknown vertex {v!r}")
    return s


def verify_k_independent_by_walks(d: ColoredDigraph, s: Iterable[Vertex], k: int, table: dict | None = None) -> Verdict:
    s = _check_subset(d, s)
    if k < 2:
        raise ValueError("need k >= 2")
    for u in ordered(s):
        dist = table[u] if table is not None else h_distances_from(d, u)
        for v in ordered(s):
            if v != u and dist.get(v, INF) < k:
                return Verdict.no("independence", {"from": u, "to": v, "h_length": dist[v]})
    return Verdict.yes()


def verify_l_absorbent_by_walks(d: ColoredDigraph, s: Iterable[Vertex], l: int, table: dict | None = None) -> Verdict:
    s = _check_subset(d, s)
    if l < 1:
        raise ValueError("need l >= 1")
    for x in d.vertices:
        if x in s:
            continue
        dist = table[x] if table is not None else h_distances_from(d, x)
        best = min((dist.get(t, INF) for t in s), default=INF)
        if best > l:
            return Verdict.no("absorbency", {"vertex": x, "h_length": best})
    return Verdict.yes()


def verify_klh_kernel(d: ColoredDigraph, s: Iterable[Vertex], k: int, l: int, table: dict | None = None) -> Verdict:
    s = set(s)
    table = h_distance_table(d) if table is None else table
    ind = verify_k_independent_by_walks(d, s, k, table)
    if not ind:
        return ind
    return verify_l_absorbent_by_walks(d, s, l, table)


def exhaustive_klh_kernels(d: ColoredDigraph, k: int, l: int, limit: int | None = None) -> list[frozenset]:
    """Every (k,l,H)-kernel by walks, by size and then lexicographically."""
    if k < 2 or l < 1:
        raise ValueError("need k >= 2 and l >= 1")
    limit = brute_limit() if limit is None else limit
    verts = list(d.vertices)
    n = len(verts)
    if n > limit:
        raise SizeBoundExceeded(f"{n} vertices exceeds the exhaustive bound {limit}")
    table = h_distance_table(d)
    close = [0] * n
    absorb = [0] * n
    for i, u in enumerate(verts):
        for j, v in enumerate(verts):
            length = table[u].get(v, INF)
            if i != j and length < k:
                close[i] |= 1 << j
                close[j] |= 1 << i
            if i != j and length <= l:
                absorb[i] |= 1 << j
    found = []
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if any(close[i] & mask for i in combo):
                continue
            if all(mask >> i & 1 or absorb[i] & mask for i in range(n)):
                found.append(frozenset(verts[i] for i in combo))
    return found


def bounded_min_h_length(d: ColoredDigraph, u: Vertex, v: Vertex, max_arcs: int) -> float | int:
    """Minimum H-length over all uv-walks with at most ``max_arcs`` arcs.

    Computed length by length: layer t holds, for each arc, the fewest
    obstructions of a walk from u with exactly t arcs ending on that arc.
    Shares nothing with the 0/1 search above.
    """
    if u == v:
        raise ValueError("need u != v")
    g = d.underlying
    allowed = d.pattern.arcs
    color = d.coloring
    layer = {(u, w): 0 for w in g.out_neighbors(u)}
    best: float | int = INF
    for _ in range(max_arcs):
        if not layer:
            break
        for (x, y), obs in layer.items():
            if y == v:
                best = min(best, obs + 1)
        nxt: dict = {}
        for (x, y), obs in layer.items():
            for z in g.out_neighbors(y):
                cost = obs + (0 if (color[(x, y)], color[(y, z)]) in allowed else 1)
                if cost < nxt.get((y, z), INF):
                    nxt[(y, z)] = cost
        layer = nxt
    return best


def enumerate_walks(d: ColoredDigraph, u: Vertex, max_arcs: int):
    """Every walk from u with 1..max_arcs arcs (exponential; tiny inputs only)."""
    g = d.underlying
    stack = [(u,)]
    while stack:
        path = stack.pop()
        if len(path) > 1:
            yield Walk(path)
        if len(path) - 1 < max_arcs:
            for w in g.out_neighbors(path[-1]):
                stack.append(path + (w,))


def enumerated_min_h_length(d: ColoredDigraph, u: Vertex, v: Vertex, max_arcs: int) -> float | int:
    best: float | int = INF
    for walk in enumerate_walks(d, u, max_arcs):
        if walk.vertices[-1] == v and not walk.closed:
            best = min(best, h_length(d, walk))
    return best
