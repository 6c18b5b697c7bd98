"""Named demonstration instances.

The two tightness examples are rebuilt to their stated properties (which
the tests assert through the oracle); they make no claim about any
original drawing.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import ColoredDigraph, PatternDigraph, loops_only_pattern
from .hclass import HClassPartition

PROVENANCE = "reconstructed to stated properties"
DEMO = "hand-built demonstration"


@dataclass(frozen=True)
class Fixture:
    name: str
    colored: ColoredDigraph
    partition: HClassPartition | None = None
    metadata: dict = field(default_factory=dict)


def _by_color(d: ColoredDigraph, colors) -> HClassPartition:
    """One class per color, named in the order of ``colors``."""
    return HClassPartition([[a for a, c in d.coloring.items() if c == col] for col in colors])


def fig1_style() -> Fixture:
    colors = [f"c{i}" for i in range(1, 7)]
    d = ColoredDigraph.build(
        loops_only_pattern(colors),
        [
            ("x0", "x1", "c1"),
            ("x1", "x2", "c2"),
            ("x2", "x3", "c3"),
            ("x3", "x4", "c6"),
            ("x5", "x1", "c4"),
            ("x6", "x2", "c5"),
        ],
    )
    meta = {
        "name": "fig1-style",
        "provenance": PROVENANCE,
        "note": "S={F6} is 3-absorbent in C_F(D); K={x4} is (4,H)- but not (3,H)-absorbent",
    }
    return Fixture("fig1-style", d, _by_color(d, colors), meta)


def fig2_style() -> Fixture:
    colors = [1, 2, 3, 4, 5]
    d = ColoredDigraph.build(
        loops_only_pattern(colors),
        [
            ("x3", "x5", 2),
            ("x5", "x1", 1),
            ("x1", "x2", 2),
            ("x2", "x4", 3),
            ("x4", "x6", 4),
            ("x6", "x7", 5),
        ],
    )
    meta = {
        "name": "fig2-style",
        "provenance": PROVENANCE,
        "note": "valid but not walk-preservative; S={F5} is 4-absorbent, {x7} is not (5,H)-absorbent",
    }
    return Fixture("fig2-style", d, _by_color(d, colors), meta)


def two_blob() -> Fixture:
    d = ColoredDigraph.build(
        loops_only_pattern([1, 2]),
        [
            ("a", "b", 1),
            ("b", "c", 1),
            ("c", "a", 1),
            ("c", "w", 1),
            ("w", "y", 2),
            ("y", "z", 2),
            ("z", "w", 2),
        ],
    )
    return Fixture("two-blob", d, None, {"name": "two-blob", "provenance": DEMO})


def conflict_triangle() -> Fixture:
    d = ColoredDigraph.build(
        PatternDigraph([1, 2], [(1, 2), (2, 1)]),
        [("a", "b", 1), ("b", "c", 2), ("c", "a", 1)],
    )
    return Fixture("conflict-triangle", d, None, {"name": "conflict-triangle", "provenance": DEMO})


def strong_classes() -> Fixture:
    """Three monochromatic cycles glued at shared vertices."""
    d = ColoredDigraph.build(
        loops_only_pattern(["r", "g", "b"]),
        [
            ("a", "b", "r"),
            ("b", "c", "r"),
            ("c", "a", "r"),
            ("c", "d", "g"),
            ("d", "e", "g"),
            ("e", "c", "g"),
            ("e", "f", "b"),
            ("f", "g", "b"),
            ("g", "e", "b"),
        ],
    )
    return Fixture("strong-classes", d, None, {"name": "strong-classes", "provenance": DEMO})


_BUILDERS = {
    "fig1-style": fig1_style,
    "fig2-style": fig2_style,
    "two-blob": two_blob,
    "conflict-triangle": conflict_triangle,
    "strong-classes": strong_classes,
}


def fixture_names() -> list[str]:
    return list(_BUILDERS)


def fixtures() -> dict[str, Fixture]:
    return {name: build() for name, build in _BUILDERS.items()}


def get_fixture(name: str) -> Fixture:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(_BUILDERS)}") from None
