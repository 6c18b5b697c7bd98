"""Seeded generators: reproducibility and partition validity."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hkernels.digraph import is_symmetric
from hkernels.formats import InstanceDocument, emit_instance
from hkernels.generators import FAMILIES, blobs, generate, random_instance, ring, segment_forest, symmetric_classes, targeted
from hkernels.hclass import class_digraph, class_predicates, validate_partition


@pytest.mark.parametrize("family", FAMILIES)
def test_generate_is_reproducible(family):
    a = generate(family, 11, 4)
    b = generate(family, 11, 4)
    assert emit_instance(InstanceDocument(a.colored, a.partition)) == emit_instance(InstanceDocument(b.colored, b.partition))


def test_unknown_family():
    with pytest.raises(ValueError):
        generate("lattice", 1)
    with pytest.raises(ValueError):
        targeted("nope", 1)


def test_random_instance_bounds():
    for seed in range(50):
        d = random_instance(seed).colored
        assert 2 <= len(d.vertices) <= 8 and 1 <= len(d.arcs) <= 14 and len(d.pattern.colors) <= 4


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([symmetric_classes, blobs, ring, segment_forest]))
def test_palette_partitions_are_valid(seed, make):
    gen = make(seed)
    assert validate_partition(gen.colored, gen.partition)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 5))
def test_symmetric_classes_shape(seed, classes):
    gen = symmetric_classes(seed, classes=classes)
    reports = class_predicates(gen.colored, gen.partition)
    assert all(r.strongly_connected and r.obstruction_free for r in reports.values())
    assert is_symmetric(class_digraph(gen.colored, gen.partition).underlying)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_isolated_vertices_are_appended(seed):
    gen = symmetric_classes(seed, classes=2, isolated=2)
    assert len(gen.colored.underlying.isolated_vertices()) == 2
