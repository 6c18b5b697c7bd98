"""Constructors: examples, refusals and the soundness properties."""
from itertools import combinations

import pytest
from hypothesis import given, settings

from hkernels.coloring import ColoredDigraph, is_h_digraph, loops_only_pattern
from hkernels.digraph import Digraph
from hkernels.constructors import (
    ClassKernelNotFound,
    HypothesisFailure,
    PartitionUnavailable,
    construct,
    construct_prop41,
    construct_prop42,
    construct_prop43,
    construct_prop44,
    construct_thm51,
    construct_thm52,
    construct_thm54,
    construct_thm55,
    kernel_by_h_walks,
)
from hkernels.fixtures import conflict_triangle, strong_classes, two_blob
from hkernels.generators import segment_forest, targeted
from hkernels.hclass import NoPartition, class_digraph, finest_partition, is_walk_preservative, union_subdigraph
from hkernels.kernels import is_kl_kernel, kernel_by_paths
from hkernels.oracle import exhaustive_klh_kernels, verify_klh_kernel, verify_l_absorbent_by_walks

from conftest import colored, colored_digraphs

# three unilateral sink-free classes whose class digraph is a directed
# 3-cycle with loops, so it has a (3,2)-kernel but no (3,1)-kernel
ROTOR = ColoredDigraph.build(
    loops_only_pattern([1, 2, 3]),
    [
        ("a1", "b1", 1), ("b1", "a2", 1), ("a2", "b1", 1),
        ("a2", "b2", 2), ("b2", "a3", 2), ("a3", "b2", 2),
        ("a3", "b3", 3), ("b3", "a1", 3), ("a1", "b3", 3),
    ],
)

# two opposite monochromatic triangles on the same vertices: both classes are
# strongly connected, yet every vertex sees both colors and is obstructed
TWISTED = ColoredDigraph.build(
    loops_only_pattern([1, 2]),
    [("a", "b", 1), ("b", "c", 1), ("c", "a", 1), ("a", "c", 2), ("c", "b", 2), ("b", "a", 2)],
)


def class_with_color(d, f, color):
    (arc,) = [a for a in d.arcs if d.coloring[a] == color][:1]
    return f.class_of[arc]


def padded_with(d, extra):
    return ColoredDigraph(Digraph(list(d.vertices) + extra, d.arcs), d.coloring, d.pattern)


def test_kernel_by_h_walks_examples():
    mono = ColoredDigraph.build(loops_only_pattern([1]), [("a", "b", 1), ("b", "c", 1), ("c", "a", 1), ("c", "d", 1)])
    assert kernel_by_h_walks(mono) == kernel_by_paths(mono.underlying) == {"d"}
    # kernel by monochromatic paths through the loops-only pattern
    mixed = ColoredDigraph.build(loops_only_pattern([1, 2]), [("a", "b", 1), ("b", "c", 1), ("c", "d", 2), ("d", "c", 2)])
    k = kernel_by_h_walks(mixed)
    assert verify_klh_kernel(mixed, k, 2, 1)
    fx = two_blob()
    cert = construct("thm35", fx.colored)
    # one representative per terminal blob of obstruction-free vertices
    assert cert.kernel == {"a", "y"} and (cert.k, cert.l) == (2, 1) and cert.verified
    assert construct("classlema", fx.colored).kernel == cert.kernel


def test_kernel_by_h_walks_refusal():
    bare = colored([], [("a", "b", 1), ("b", "c", 1), ("c", "a", 1)], colors=[1])
    with pytest.raises(HypothesisFailure) as info:
        kernel_by_h_walks(bare)
    assert info.value.witness == "a"


def test_prop41_certificate_and_refusals():
    gen, k, l = targeted("prop41", 0)
    cert = construct("prop41", gen.colored, gen.partition, k=k, l=l)
    assert (cert.k, cert.l) == (k, l + 1) and cert.verified
    gen, k, l = targeted("prop41", 2)
    with pytest.raises(HypothesisFailure) as info:
        construct("prop41", gen.colored, gen.partition, k=k, l=l)
    assert info.value.hypothesis.startswith("(b)") and info.value.witness in gen.colored.vertices
    mono = ColoredDigraph.build(loops_only_pattern([1]), [("a", "b", 1), ("b", "c", 1), ("c", "a", 1)])
    f = finest_partition(mono)
    with pytest.raises(HypothesisFailure, match="sinks"):
        construct_prop41(mono, f, None, {"F1"}, 2, 1)


def test_prop42_any_k():
    gen = segment_forest(5, roots=2, feeders=2)
    l = 3
    first = construct("prop42", gen.colored, gen.partition, k=2, l=l)
    far = construct("prop42", gen.colored, gen.partition, k=7, l=l, class_kernel=first.class_kernel)
    assert far.kernel == first.kernel and (far.k, far.l) == (7, l + 1)
    c = class_digraph(gen.colored, gen.partition)
    feeder = next(x for x in c.underlying.vertices if x not in first.class_kernel)
    with pytest.raises(HypothesisFailure):
        construct_prop42(gen.colored, gen.partition, c, {feeder}, 2, l)


def test_prop43_examples():
    f = finest_partition(ROTOR)
    s = {class_with_color(ROTOR, f, 1)}
    cert = construct_prop43(ROTOR, f, None, s, 3, 2)
    assert (cert.k, cert.l) == (2, 3) and cert.kernel == {"a2"}
    with pytest.raises(ValueError):
        construct_prop43(ROTOR, f, None, s, 2, 2)
    sinky = ColoredDigraph.build(loops_only_pattern([1, 2]), [("a", "b", 1), ("b", "a", 2), ("a", "c", 2), ("c", "a", 2)])
    fs = finest_partition(sinky)
    sink_class = fs.class_of[("a", "b")]
    with pytest.raises(HypothesisFailure):
        construct_prop43(sinky, fs, None, {sink_class}, 3, 2)


def test_prop44_examples():
    fx = two_blob()
    f = finest_partition(fx.colored)
    cert = construct_prop44(fx.colored, f, None, {"F2"}, 3, 2)
    assert cert.kernel == {"y"} and (cert.k, cert.l) == (4, 3)
    ft = finest_partition(TWISTED)
    with pytest.raises(HypothesisFailure, match="obstruction-free"):
        construct_prop44(TWISTED, ft, None, {class_with_color(TWISTED, ft, 1)}, 3, 1)


def test_thm51_isolated_vertices():
    gen = segment_forest(3, roots=2, feeders=2)
    inner = construct("prop42", gen.colored, gen.partition, k=2, l=3)
    same = construct_thm51(gen.colored, gen.partition, None, inner.class_kernel, 2, 3)
    assert same.kernel == inner.kernel
    padded = padded_with(gen.colored, ["iso1", "iso2"])
    cert = construct_thm51(padded, gen.partition, None, inner.class_kernel, 2, 3)
    assert cert.kernel == inner.kernel | {"iso1", "iso2"} and cert.isolated == {"iso1", "iso2"}
    bare = colored([], [], colors=[1], vertices=["p", "q"])
    assert construct("thm51", bare).kernel == {"p", "q"}


def test_thm52_examples():
    mono = ColoredDigraph.build(loops_only_pattern([1]), [("a", "b", 1), ("b", "c", 1), ("c", "a", 1)])
    cert = construct("thm52", mono, k=5, l=3)
    assert (cert.k, cert.l) == (5, 3) and cert.kernel == kernel_by_paths(mono.underlying)
    gen, k, l = targeted("thm52", 0)
    assert construct("thm52", gen.colored, gen.partition, k=k, l=l).verified
    path = ColoredDigraph.build(loops_only_pattern([1]), [("a", "b", 1)])
    with pytest.raises(ValueError, match="strongly"):
        construct_thm52(path, finest_partition(path), None, {"F1"}, 2, 1)


def test_thm53_examples():
    with pytest.raises(ClassKernelNotFound):
        construct("thm53", ROTOR, k=3, l=1)
    cert = construct("thm53", ROTOR, k=3, l=2)
    assert (cert.k, cert.l) == (2, 3)
    sinky = ColoredDigraph.build(loops_only_pattern([1, 2]), [("a", "b", 1), ("b", "a", 2), ("a", "c", 2), ("c", "a", 2)])
    with pytest.raises(HypothesisFailure, match="sinks"):
        construct("thm53", sinky, k=3, l=2)


def test_thm54_examples():
    fx = strong_classes()
    cert = construct("thm54", fx.colored, fx.partition, k=2, l=3)
    assert (cert.k, cert.l) == (2, 3) and cert.verified
    with pytest.raises(ValueError):
        construct_thm54(fx.colored, finest_partition(fx.colored), 2, 2)
    single = ColoredDigraph.build(loops_only_pattern([1]), [("a", "b", 1)])
    with pytest.raises(HypothesisFailure, match="strongly"):
        construct("thm54", single, k=2, l=3)


def test_thm55_examples():
    fx = strong_classes()
    two = construct("thm55", fx.colored, fx.partition, k=2)
    assert (two.k, two.l) == (2, 1)
    four = construct_thm55(fx.colored, finest_partition(fx.colored), 4)
    assert (four.k, four.l) == (4, 3) and four.verified
    with pytest.raises(HypothesisFailure, match="obstruction-free"):
        construct("thm55", TWISTED, k=3)


def test_dispatch_errors():
    with pytest.raises(ValueError):
        construct("nope", ROTOR)
    with pytest.raises(PartitionUnavailable):
        construct("prop41", conflict_triangle().colored)
    tri = colored([], [("a", "b", 1), ("b", "c", 1), ("c", "a", 1)], colors=[1])
    with pytest.raises(ClassKernelNotFound):
        construct("brute", tri)
    assert construct("brute", ROTOR, k=2, l=2).verified


def test_weakened_certificates_still_verify():
    for method in ("prop44", "thm54", "thm55"):
        gen, k, l = targeted(method, 1)
        cert = construct(method, gen.colored, gen.partition, k=k, l=l)
        for kk in range(2, cert.k + 1):
            for ll in range(cert.l, cert.l + 3):
                assert verify_klh_kernel(gen.colored, cert.kernel, kk, ll)


@settings(max_examples=60, deadline=None)
@given(colored_digraphs(max_vertices=6))
def test_h_digraphs_path_kernels_over_grid(d):
    if not d.arcs or not is_h_digraph(d):
        return
    k = kernel_by_paths(d.underlying)
    assert all(verify_klh_kernel(d, k, kk, ll) for kk in range(2, 6) for ll in range(1, 5))


def _min_absorbency(c, s):
    for l in range(1, len(c.underlying.vertices) + 1):
        if is_kl_kernel(c.underlying, s, 2, l):
            return l
    return None


@settings(max_examples=150, deadline=None)
@given(colored_digraphs(max_vertices=6, max_arcs=10))
def test_absorbency_lifts_through_class_digraph(d):
    d = d.without(d.underlying.isolated_vertices())
    if not d.arcs:
        return
    f = finest_partition(d)
    if isinstance(f, NoPartition) or not is_walk_preservative(d, f):
        return
    c = class_digraph(d, f)
    ids = sorted(f.classes)
    for r in (1, 2):
        for s in combinations(ids, r):
            l = _min_absorbency(c, s)
            if l is None:
                continue
            k = kernel_by_paths(union_subdigraph(d, f, s))
            assert verify_l_absorbent_by_walks(d, k, l + 1)


@settings(max_examples=40, deadline=None)
@given(colored_digraphs(max_vertices=5, max_arcs=7))
def test_every_emitted_certificate_is_a_true_kernel(d):
    for method in ("thm35", "prop41", "prop42", "prop44", "thm51", "thm55"):
        for k, l in ((2, 1), (3, 1), (3, 2)):
            try:
                cert = construct(method, d, k=k, l=l)
            except (HypothesisFailure, ClassKernelNotFound, PartitionUnavailable, ValueError):
                continue
            assert cert.kernel in exhaustive_klh_kernels(d, cert.k, cert.l)
