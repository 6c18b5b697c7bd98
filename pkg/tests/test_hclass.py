"""H-class partitions, the class digraph and its predicates."""
from itertools import combinations

import pytest
from hypothesis import given, settings

from hkernels.coloring import ColoredDigraph, is_h_digraph, is_h_walk, loops_only_pattern, obstruction_free_vertices
from hkernels.digraph import is_strongly_connected, reaching_set
from hkernels.fixtures import fig2_style, two_blob
from hkernels.hclass import (
    HClassPartition,
    NoPartition,
    class_digraph,
    class_predicates,
    class_subdigraph,
    finest_partition,
    is_walk_preservative,
    neighborhoods,
    validate_partition,
)
from hkernels.kernels import is_independent
from hkernels.oracle import enumerate_walks

from conftest import colored, colored_digraphs

PATH = colored([(1, 2)], [("a", "b", 1), ("b", "c", 2), ("c", "d", 1)])


def test_finest_partition_examples():
    f = finest_partition(PATH)
    assert [set(g) for g in f.groups()] == [{("a", "b"), ("b", "c")}, {("c", "d")}]
    assert validate_partition(PATH, f)
    tri = colored([(1, 2), (2, 1)], [("a", "b", 1), ("b", "c", 2), ("c", "a", 1)])
    bad = finest_partition(tri)
    assert isinstance(bad, NoPartition)
    assert bad.pair == (("c", "a"), ("a", "b"))
    assert bad.chain[0] == ("c", "a") and bad.chain[-1] == ("a", "b")
    assert "c->a" in bad.explain()
    one = finest_partition(colored([], [("a", "b", 1)], colors=[1]))
    assert len(one) == 1


def _set_partitions(items):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1:]
        yield [[head]] + part


def test_conflict_triangle_has_no_valid_partition_at_all():
    tri = colored([(1, 2), (2, 1)], [("a", "b", 1), ("b", "c", 2), ("c", "a", 1)])
    assert not any(validate_partition(tri, p) for p in _set_partitions(sorted(tri.arcs)))


def test_validate_partition_directions():
    singles = validate_partition(PATH, [[a] for a in PATH.arcs])
    assert not singles and singles.reason == "split-but-compatible"
    whole = validate_partition(PATH, [list(PATH.arcs)])
    assert not whole and whole.reason == "merged-but-incompatible"
    with pytest.raises(ValueError):
        validate_partition(PATH, [[("a", "b")]])


def test_partition_container_checks():
    with pytest.raises(ValueError):
        HClassPartition([[("a", "b")], [("a", "b")]])
    with pytest.raises(ValueError):
        HClassPartition([[]])


def test_class_digraph_examples():
    f = finest_partition(PATH)
    c = class_digraph(PATH, f)
    # F1 holds the consecutive pair ab, bc, so the definition also gives a loop
    assert c.arcs == {("F1", "F1"), ("F1", "F2")}
    (a, b) = c.witness[("F1", "F2")]
    assert a[1] == b[0] and f.class_of[a] == "F1" and f.class_of[b] == "F2"
    mono = ColoredDigraph.build(loops_only_pattern([1]), [("a", "b", 1), ("b", "c", 1), ("c", "a", 1)])
    assert class_digraph(mono, finest_partition(mono)).arcs == {("F1", "F1")}
    matching = colored([], [("a", "b", 1), ("c", "d", 1)], colors=[1])
    assert not class_digraph(matching, finest_partition(matching)).arcs


def test_class_subdigraph_and_neighborhoods():
    f = finest_partition(PATH)
    sub = class_subdigraph(PATH, f, "F2")
    assert set(sub.vertices) == {"c", "d"} and sub.arcs == {("c", "d")}
    with pytest.raises(KeyError):
        class_subdigraph(PATH, f, "F9")
    iso = colored([(1, 2)], [("a", "b", 1)], vertices=["z"])
    assert neighborhoods(iso, finest_partition(iso), "z") == (frozenset(),) * 3
    assert neighborhoods(PATH, f, "b")[:2] == ({"F1"}, {"F1"})
    assert neighborhoods(PATH, f, "c")[:2] == ({"F1"}, {"F2"})
    with pytest.raises(KeyError):
        neighborhoods(PATH, f, "q")


def test_walk_preservative_examples():
    fx = fig2_style()
    wp = is_walk_preservative(fx.colored, fx.partition)
    assert not wp
    fid, gid, z = wp.witness
    assert fid == "F2" and z in fx.partition.vertices_of("F2")
    # x3 is stranded: no path inside D<F2> to V(D<F3>)
    sub = class_subdigraph(fx.colored, fx.partition, "F2")
    assert "x3" not in reaching_set(sub, set(sub.vertices) & fx.partition.vertices_of("F3"))
    matching = colored([], [("a", "b", 1), ("c", "d", 1)], colors=[1])
    assert is_walk_preservative(matching, finest_partition(matching))


def test_class_predicates_examples():
    fx = two_blob()
    f = finest_partition(fx.colored)
    rep = class_predicates(fx.colored, f)
    tri = rep["F2"]
    assert tri.strongly_connected and not tri.has_sink
    assert tri.obstruction_free == {"y", "z"}
    single = class_predicates(PATH, finest_partition(PATH))["F2"]
    assert not single.strongly_connected and single.unilateral and single.has_sink
    mono = ColoredDigraph.build(loops_only_pattern([1]), [("a", "b", 1), ("b", "c", 1), ("c", "a", 1)])
    only = class_predicates(mono, finest_partition(mono))["F1"]
    assert only.strongly_connected and only.obstruction_free == {"a", "b", "c"}


def test_sink_vertex_may_touch_two_classes():
    d = colored([], [("a", "x", 1), ("b", "x", 1)], colors=[1])
    f = finest_partition(d)
    assert "x" in obstruction_free_vertices(d)
    assert len(neighborhoods(d, f, "x")[2]) == 2


def _valid(d):
    f = finest_partition(d)
    return None if isinstance(f, NoPartition) else f


@settings(max_examples=200, deadline=None)
@given(colored_digraphs(max_vertices=5, max_arcs=5))
def test_every_valid_partition_coarsens_the_finest(d):
    f = finest_partition(d)
    arcs = sorted(d.arcs)
    valid = [p for p in _set_partitions(arcs) if validate_partition(d, p)]
    if isinstance(f, NoPartition):
        assert not valid
        return
    assert validate_partition(d, f)
    for p in valid:
        for grp in p:
            owners = {f.class_of[a] for a in grp}
            assert set(grp) == set().union(*(f.classes[o] for o in owners))


@settings(max_examples=200, deadline=None)
@given(colored_digraphs())
def test_obs1_structure(d):
    f = _valid(d)
    if f is None:
        return
    c = class_digraph(d, f)
    free = obstruction_free_vertices(d)
    for x in d.vertices:
        n_in, n_out, n_all = neighborhoods(d, f, x)
        # (a) every in-class is joined to every out-class
        assert all((a, b) in c.arcs for a in n_in for b in n_out)
        # (b) needs both an in-arc and an out-arc: a pure sink or source is
        # vacuously obstruction-free yet may touch several classes
        if x in free and d.underlying.in_degree(x) and d.underlying.out_degree(x):
            assert len(n_all) == 1
    # (c) an H-walk stays in one class
    for u in d.vertices:
        for w in enumerate_walks(d, u, 4):
            if is_h_walk(d, w):
                assert len({f.class_of[a] for a in w.arcs()}) == 1


@settings(max_examples=200, deadline=None)
@given(colored_digraphs())
def test_independent_classes_form_h_subdigraph(d):
    f = _valid(d)
    if f is None:
        return
    c = class_digraph(d, f)
    ids = list(f.classes)
    for r in (1, 2):
        for s in combinations(ids, r):
            if is_independent(c.underlying, s):
                assert is_h_digraph(d, set().union(*(f.classes[x] for x in s)))


@settings(max_examples=200, deadline=None)
@given(colored_digraphs())
def test_strong_d_gives_strong_class_digraph(d):
    f = _valid(d)
    if f is None or not d.arcs or not is_strongly_connected(d.underlying):
        return
    assert is_strongly_connected(class_digraph(d, f).underlying)
