"""Kernels on plain digraphs: by paths, (k,l)-kernels, symmetric and transitive cases."""
from __future__ import annotations

import os
from itertools import combinations
from typing import Iterable, Sequence

from .coloring import ColoredDigraph
from .digraph import (
    Digraph,
    Vertex,
    all_distances,
    distances_from,
    is_symmetric,
    is_transitive,
    reachable_set,
    reaching_set,
    sinks,
    smallest,
    strong_components,
)
from .hclass import ClassDigraph, HClassPartition, class_subdigraph, is_walk_preservative, union_subdigraph
from .util import INF, Verdict, natural_key, ordered

DEFAULT_BRUTE_LIMIT = 15
BRUTE_LIMIT_ENV = "HKERNELS_BRUTE_LIMIT"


def brute_limit() -> int:
    """Size bound for subset enumeration; the environment override is not CI-safe."""
    raw = os.environ.get(BRUTE_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_BRUTE_LIMIT


class SizeBoundExceeded(ValueError):
    pass


def kernel_by_paths(g: Digraph) -> frozenset:
    """Smallest vertex of every terminal strong component."""
    if not g.vertices:
        raise ValueError("kernel by paths of the empty digraph")
    return frozenset(smallest(c) for c in strong_components(g).terminal_components())


def verify_kernel_by_paths(g: Digraph, s: Iterable[Vertex]) -> Verdict:
    s = set(s)
    for v in s:
        if v not in g:
            raise KeyError(f"unknown vertex {v!r}")
    for u in ordered(s):
        hit = (reachable_set(g, [u]) & s) - {u}
        if hit:
            return Verdict.no("not independent by paths", (u, smallest(hit)))
    absorbed = reaching_set(g, s)
    for x in g.vertices:
        if x not in absorbed:
            return Verdict.no("not absorbent by paths", x)
    return Verdict.yes()


def _proper_out(c: Digraph, s: set) -> set:
    return {w for v in s for w in c.out_neighbors(v) if w not in s}


def proper_out_neighborhood(c: ClassDigraph | Digraph, s: Iterable) -> frozenset:
    g = c.underlying if isinstance(c, ClassDigraph) else c
    return frozenset(_proper_out(g, set(s)))


def is_independent(g: Digraph, s: Iterable) -> bool:
    """No arc between two distinct members (loops do not count)."""
    s = set(s)
    return not any(u != v and u in s and v in s for u, v in g.arcs)


def constrained_kernel_by_paths(
    d: ColoredDigraph,
    f: HClassPartition,
    c: ClassDigraph,
    s: Iterable[str],
    initial: Iterable[Vertex] | None = None,
    trace: list | None = None,
) -> frozenset:
    """A kernel by paths of D<union S> lying inside V(D<union N+(S)>).

    Starts from ``initial`` (default: kernel_by_paths of D<union S>) and
    swaps a stray member x0 for the first vertex z of the next class it can
    reach inside its own class, until no stray member remains. Each swap is
    appended to ``trace`` as ``(x0, z)`` when a list is supplied.
    """
    s = set(s)
    if not s:
        raise ValueError("class set S must be nonempty")
    unknown = s - set(f.classes)
    if unknown:
        raise KeyError(f"unknown classes {sorted(unknown)}")
    g = c.underlying
    if not is_independent(g, s):
        raise ValueError("precondition violated: S is not independent in C_F(D)")
    if sinks(g):
        raise ValueError(f"precondition violated: C_F(D) has sinks {ordered(sinks(g))}")
    wp = is_walk_preservative(d, f, c)
    if not wp:
        raise ValueError(f"precondition violated: partition not walk-preservative {wp.witness}")

    d1 = union_subdigraph(d, f, s)
    targets = set(union_subdigraph(d, f, _proper_out(g, s)).vertices)
    n = set(kernel_by_paths(d1) if initial is None else initial)
    subs = {cid: class_subdigraph(d, f, cid) for cid in s}
    for _ in range(len(d1.vertices) + 1):
        stray = sorted(n - targets, key=natural_key)
        if not stray:
            return frozenset(n)
        x0 = stray[0]
        fid = min((cid for cid in s if x0 in subs[cid]), key=natural_key)
        sub = subs[fid]
        exits = {
            z
            for gid in g.out_neighbors(fid)
            if gid != fid
            for z in f.vertices_of(gid)
            if z in sub
        }
        dist = distances_from(sub, x0)
        reachable = [z for z in exits if z in dist]
        z = min(reachable, key=lambda v: (dist[v], natural_key(v)))
        n.discard(x0)
        n.add(z)
        if trace is not None:
            trace.append((x0, z))
    raise RuntimeError("swap loop did not terminate within |V(D1)| iterations")


def is_kl_kernel(g: Digraph, s: Iterable[Vertex], k: int, l: int, dist: dict | None = None) -> Verdict:
    """Definitional check of k-independence and l-absorbency by walks."""
    s = set(s)
    if dist is None:
        dist = all_distances(g)
    for u in ordered(s):
        for v in ordered(s):
            if u != v and dist[u].get(v, INF) < k:
                return Verdict.no("not k-independent", (u, v))
    for x in g.vertices:
        if x not in s and min((dist[x].get(t, INF) for t in s), default=INF) > l:
            return Verdict.no("not l-absorbent", x)
    return Verdict.yes()


def brute_force_kl_kernel(
    g: Digraph,
    k: int,
    l: int,
    mode: str = "first",
    limit: int | None = None,
):
    """(k,l)-kernels by subset enumeration, smallest first then lexicographic.

    ``mode='first'`` returns one set or None; ``mode='all'`` returns a list.
    """
    if k < 2 or l < 1:
        raise ValueError("need k >= 2 and l >= 1")
    if mode not in ("first", "all"):
        raise ValueError("mode must be 'first' or 'all'")
    limit = brute_limit() if limit is None else limit
    n = len(g.vertices)
    if n > limit:
        raise SizeBoundExceeded(
            f"{n} vertices exceeds the brute-force bound {limit}; use oracle-only verification"
        )
    dist = all_distances(g)
    verts = list(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    # close[i] = bitmask of vertices within distance < k of i (either direction)
    close = [0] * n
    absorb = [0] * n
    for u in verts:
        for v, d in dist[u].items():
            if u != v:
                if d < k:
                    close[index[u]] |= 1 << index[v]
                    close[index[v]] |= 1 << index[u]
                if d <= l:
                    absorb[index[u]] |= 1 << index[v]
    found = []
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if any(close[i] & mask for i in combo):
                continue
            if all(mask >> i & 1 or absorb[i] & mask for i in range(n)):
                kernel = frozenset(verts[i] for i in combo)
                if mode == "first":
                    return kernel
                found.append(kernel)
    return None if mode == "first" else found


def greedy_k_independent(g: Digraph, k: int, order: Sequence[Vertex] | None = None) -> frozenset:
    """Maximal k-independent set grown greedily along ``order`` (default: id order)."""
    order = list(g.vertices) if order is None else list(order)
    dist = all_distances(g)
    chosen: list = []
    for v in order:
        if all(dist[v].get(u, INF) >= k and dist[u].get(v, INF) >= k for u in chosen):
            chosen.append(v)
    return frozenset(chosen)


def symmetric_k_kernel(g: Digraph, k: int, order: Sequence[Vertex] | None = None) -> frozenset:
    if k < 2:
        raise ValueError("need k >= 2")
    if not is_symmetric(g):
        raise ValueError("digraph is not symmetric")
    return greedy_k_independent(g, k, order)


def transitive_kernel(g: Digraph) -> frozenset:
    check = is_transitive(g)
    if not check:
        raise ValueError(f"digraph is not transitive: {check.witness}")
    return frozenset(smallest(c) for c in strong_components(g).terminal_components())
