"""The 0/1 search, the bounded DP, literal enumeration and the verifiers."""
import pytest
from hypothesis import given, settings

from hkernels.coloring import ColoredDigraph, PatternDigraph, loops_only_pattern
from hkernels.digraph import reachable_set, shortest_walk_length
from hkernels.fixtures import fig1_style, two_blob
from hkernels.hclass import NoPartition, finest_partition
from hkernels.kernels import SizeBoundExceeded, brute_force_kl_kernel, kernel_by_paths
from hkernels.oracle import (
    ArcStateGraph,
    bounded_min_h_length,
    enumerated_min_h_length,
    exhaustive_klh_kernels,
    h_distances_from,
    h_walk_reachable,
    min_h_length,
    verify_k_independent_by_walks,
    verify_klh_kernel,
    verify_l_absorbent_by_walks,
)
from hkernels.coloring import is_h_digraph
from hkernels.util import INF

from conftest import colored, colored_digraphs


def test_min_h_length_examples():
    ok = colored([(1, 2)], [("a", "b", 1), ("b", "c", 2)])
    assert min_h_length(ok, "a", "c") == 1
    bad = colored([(2, 1)], [("a", "b", 1), ("b", "c", 2)])
    assert min_h_length(bad, "a", "c") == 2
    assert min_h_length(bad, "c", "a") == INF
    with pytest.raises(ValueError):
        min_h_length(ok, "a", "a")


def test_two_blob_far_vertex_against_enumeration():
    d = two_blob().colored
    cutoff = 2 * len(d.arcs)
    for v in ("w", "y", "z"):
        expected = enumerated_min_h_length(d, "a", v, 9)
        assert expected == bounded_min_h_length(d, "a", v, cutoff) == min_h_length(d, "a", v)
    # one obstruction where the bridge color changes
    assert min_h_length(d, "a", "z") == 2


def test_h_walk_reachable_examples():
    bare = colored([], [("a", "b", 1), ("b", "c", 1), ("a", "d", 1)], colors=[1])
    assert h_walk_reachable(bare, "a") == {"b", "d"}
    mono = ColoredDigraph.build(loops_only_pattern([1, 2]), [("a", "b", 1), ("b", "c", 1), ("c", "d", 2)])
    assert h_walk_reachable(mono, "a") == {"b", "c"}
    full = colored([(1, 1)], [("a", "b", 1), ("b", "c", 1), ("c", "a", 1)])
    assert h_walk_reachable(full, "a") == reachable_set(full.underlying, ["a"]) - {"a"}


def test_state_graph_weights():
    d = colored([(1, 2)], [("a", "b", 1), ("b", "c", 2), ("c", "a", 1)])
    g = ArcStateGraph.of(d)
    assert dict(g.transitions[("a", "b")]) == {("b", "c"): 0}
    assert dict(g.transitions[("b", "c")]) == {("c", "a"): 1}


def test_verifier_examples():
    d = colored([(1, 1)], [("a", "b", 1), ("b", "c", 1)], vertices=["z"])
    assert verify_k_independent_by_walks(d, {"a"}, 5)
    joined = verify_k_independent_by_walks(d, {"a", "c"}, 2)
    assert not joined and joined.witness == {"from": "a", "to": "c", "h_length": 1}
    assert verify_k_independent_by_walks(d, {"a", "z"}, 9)
    assert verify_l_absorbent_by_walks(d, d.vertices, 1)
    empty = verify_klh_kernel(d, set(), 2, 1)
    assert not empty and empty.reason == "absorbency"
    assert not verify_klh_kernel(d, d.vertices, 2, 1)


def test_fig1_absorbency_threshold():
    d = fig1_style().colored
    results = [bool(verify_l_absorbent_by_walks(d, {"x4"}, r)) for r in (1, 2, 3, 4)]
    assert results == [False, False, False, True]


def test_exhaustive_examples():
    bare = colored([], [], colors=[1], vertices=["a", "b", "c"])
    assert exhaustive_klh_kernels(bare, 3, 1) == [frozenset("abc")]
    tri = colored([], [("a", "b", 1), ("b", "c", 1), ("c", "a", 1)], colors=[1])
    assert exhaustive_klh_kernels(tri, 2, 1) == brute_force_kl_kernel(tri.underlying, 2, 1, mode="all") == []
    mono = ColoredDigraph.build(loops_only_pattern([1]), [("a", "b", 1), ("b", "c", 1), ("c", "a", 1), ("c", "d", 1)])
    assert kernel_by_paths(mono.underlying) in exhaustive_klh_kernels(mono, 2, 1)
    big = colored([], [], colors=[1], vertices=[f"v{i}" for i in range(16)])
    with pytest.raises(SizeBoundExceeded):
        exhaustive_klh_kernels(big, 2, 1)


@settings(max_examples=150, deadline=None)
@given(colored_digraphs(max_vertices=5, max_arcs=7))
def test_search_matches_literal_enumeration(d):
    cutoff = len(d.arcs) + 2
    for u in d.vertices:
        dist = h_distances_from(d, u)
        for v in d.vertices:
            if v != u:
                assert dist.get(v, INF) == enumerated_min_h_length(d, u, v, cutoff)


@settings(max_examples=200, deadline=None)
@given(colored_digraphs(max_vertices=7, max_arcs=12))
def test_search_matches_bounded_dp_and_cutoff_is_stable(d):
    m = len(d.arcs)
    for u in d.vertices:
        dist = h_distances_from(d, u)
        for v in d.vertices:
            if v != u:
                short = bounded_min_h_length(d, u, v, 2 * m)
                assert short == bounded_min_h_length(d, u, v, 4 * m) == dist.get(v, INF)


@settings(max_examples=200, deadline=None)
@given(colored_digraphs())
def test_triangle_bound_through_h_walks(d):
    for v in d.vertices:
        for w in h_walk_reachable(d, v):
            for u in d.vertices:
                if len({u, v, w}) == 3:
                    assert min_h_length(d, u, w) <= min_h_length(d, u, v) + 1


@settings(max_examples=200, deadline=None)
@given(colored_digraphs())
def test_arcless_pattern_is_ordinary_distance(d):
    bare = ColoredDigraph(d.underlying, d.coloring, PatternDigraph(d.pattern.colors))
    for u in bare.vertices:
        for v, length in h_distances_from(bare, u).items():
            assert length == shortest_walk_length(bare.underlying, u, v)


@settings(max_examples=200, deadline=None)
@given(colored_digraphs())
def test_zero_weight_moves_stay_in_one_class(d):
    f = finest_partition(d)
    if isinstance(f, NoPartition):
        return
    for (a, nxt) in ((a, t) for a, ts in ArcStateGraph.of(d).transitions.items() for t in ts):
        b, weight = nxt
        assert (weight == 0) == (f.class_of[a] == f.class_of[b])


@settings(max_examples=100, deadline=None)
@given(colored_digraphs(max_vertices=6))
def test_path_kernels_of_h_digraphs_are_walk_kernels(d):
    if not d.arcs or not is_h_digraph(d):
        return
    k = kernel_by_paths(d.underlying)
    for kk in range(2, 6):
        for ll in range(1, 5):
            assert verify_klh_kernel(d, k, kk, ll)
