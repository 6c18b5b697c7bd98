"""Shared builders and hypothesis strategies."""
from __future__ import annotations

from hypothesis import strategies as st

from hkernels.coloring import ColoredDigraph, PatternDigraph
from hkernels.digraph import Digraph


def colored(pattern_arcs, triples, colors=None, vertices=()):
    """ColoredDigraph from (u, v, color) triples and a list of H arcs."""
    palette = colors if colors is not None else sorted({c for *_, c in triples} | {x for a in pattern_arcs for x in a})
    return ColoredDigraph.build(PatternDigraph(palette, pattern_arcs), triples, vertices)


@st.composite
def digraphs(draw, max_vertices=6, loops=False, symmetric=False):
    n = draw(st.integers(1, max_vertices))
    verts = [f"v{i}" for i in range(n)]
    pairs = [(u, v) for u in verts for v in verts if loops or u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    if symmetric:
        chosen = set(chosen) | {(v, u) for u, v in chosen}
    return Digraph(verts, chosen, loops_allowed=loops)


@st.composite
def colored_digraphs(draw, max_vertices=6, max_arcs=10, max_colors=3):
    n = draw(st.integers(2, max_vertices))
    verts = [f"v{i}" for i in range(n)]
    pairs = [(u, v) for u in verts for v in verts if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(max_arcs, len(pairs))))
    k = draw(st.integers(1, max_colors))
    palette = list(range(1, k + 1))
    h = draw(st.sets(st.tuples(st.sampled_from(palette), st.sampled_from(palette))))
    coloring = {a: draw(st.sampled_from(palette)) for a in arcs}
    return ColoredDigraph(Digraph(verts, arcs), coloring, PatternDigraph(palette, h))
