"""Constructions of (k,l,H)-kernels by walks from H-class structure.

Every constructor checks its hypotheses, builds the kernel the matching
proof describes, and runs the oracle before returning a certificate.
Isolated vertices are stripped before construction and added back after.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Iterator

from .coloring import ColoredDigraph, is_h_digraph, obstruction_free_vertices
from .digraph import Digraph, is_strongly_connected, is_symmetric, min_nonloop_cycle_length, sinks, smallest
from .hclass import (
    ClassDigraph,
    HClassPartition,
    NoPartition,
    class_digraph,
    class_predicates,
    finest_partition,
    is_walk_preservative,
    neighborhoods,
    union_subdigraph,
    validate_partition,
)
from .kernels import (
    SizeBoundExceeded,
    brute_force_kl_kernel,
    constrained_kernel_by_paths,
    is_independent,
    is_kl_kernel,
    kernel_by_paths,
    proper_out_neighborhood,
    symmetric_k_kernel,
    transitive_kernel,
)
from .oracle import h_distance_table, h_walk_reachable, verify_k_independent_by_walks, verify_l_absorbent_by_walks
from .util import natural_key, ordered

THEOREMS = (
    "thm35",
    "prop41",
    "prop42",
    "prop43",
    "prop44",
    "thm51",
    "thm52",
    "thm53",
    "thm54",
    "thm55",
    "brute",
)
THEOREM_ALIASES = {"classlema": "thm35"}


class HypothesisFailure(Exception):
    """A constructor's hypothesis does not hold; ``witness`` pinpoints where."""

    def __init__(self, hypothesis: str, witness=None, detail: str = "") -> None:
        self.hypothesis = hypothesis
        self.witness = witness
        self.detail = detail
        super().__init__(f"hypothesis {hypothesis!r} fails" + (f" at {witness!r}" if witness is not None else "") + (f": {detail}" if detail else ""))


class ClassKernelNotFound(Exception):
    pass


class PartitionUnavailable(Exception):
    def __init__(self, reason: NoPartition) -> None:
        self.reason = reason
        super().__init__(reason.explain())


class VerificationFailed(AssertionError):
    def __init__(self, certificate: "KernelCertificate") -> None:
        self.certificate = certificate
        super().__init__(f"oracle rejected {certificate.theorem} output: {certificate.verification}")


@dataclass(frozen=True)
class KernelCertificate:
    kernel: frozenset
    k: int
    l: int
    theorem: str
    class_kernel: tuple | None = None
    partition_id: str | None = None
    isolated: frozenset = frozenset()
    verified: bool = False
    verification: dict = field(default_factory=dict)

    def sorted_kernel(self) -> list:
        return ordered(self.kernel)


def certify(
    d: ColoredDigraph,
    kernel: Iterable,
    k: int,
    l: int,
    theorem: str,
    class_kernel: Iterable[str] | None = None,
    f: HClassPartition | None = None,
    isolated: Iterable = (),
) -> KernelCertificate:
    """Run the oracle on ``kernel`` and wrap the outcome; raises if it fails."""
    kernel = frozenset(kernel)
    table = h_distance_table(d)
    ind = verify_k_independent_by_walks(d, kernel, k, table)
    absb = verify_l_absorbent_by_walks(d, kernel, l, table)
    counter = None
    if not ind:
        counter = {"property": "independence", **ind.witness}
    elif not absb:
        counter = {"property": "absorbency", **absb.witness}
    cert = KernelCertificate(
        kernel=kernel,
        k=k,
        l=l,
        theorem=theorem,
        class_kernel=None if class_kernel is None else tuple(sorted(class_kernel, key=natural_key)),
        partition_id=None if f is None else f.digest(),
        isolated=frozenset(isolated),
        verified=bool(ind) and bool(absb),
        verification={"independent": bool(ind), "absorbent": bool(absb), "counterexample": counter},
    )
    if not cert.verified:
        raise VerificationFailed(cert)
    return cert


# -- shared hypothesis checks ------------------------------------------------

def _params(k: int, l: int, k_min: int = 2) -> None:
    if k < k_min:
        raise ValueError(f"need k >= {k_min}, got {k}")
    if l < 1:
        raise ValueError(f"need l >= 1, got {l}")


def _class_digraph(d: ColoredDigraph, f: HClassPartition, c: ClassDigraph | None) -> ClassDigraph:
    check = validate_partition(d, f)
    if not check:
        raise HypothesisFailure("H-class partition", check.witness, check.reason)
    return class_digraph(d, f) if c is None else c


def _class_set(f: HClassPartition, s: Iterable[str]) -> frozenset:
    s = frozenset(s)
    unknown = s - set(f.classes)
    if unknown:
        raise ValueError(f"unknown classes {ordered(unknown)}")
    if not s:
        raise HypothesisFailure("class kernel", None, "S is empty")
    return s


def _require_walk_preservative(d, f, c) -> None:
    wp = is_walk_preservative(d, f, c)
    if not wp:
        raise HypothesisFailure("walk-preservative", wp.witness, wp.reason)


def _require_class_kernel(c: ClassDigraph, s: frozenset, k: int, l: int) -> None:
    check = is_kl_kernel(c.underlying, s, k, l)
    if not check:
        raise HypothesisFailure("class kernel", check.witness, f"S is not a ({k},{l})-kernel of C_F(D): {check.reason}")


def _require_no_isolated(d: ColoredDigraph) -> None:
    iso = d.underlying.isolated_vertices()
    if iso:
        raise HypothesisFailure("no isolated vertices", smallest(iso))


def _stripped(d: ColoredDigraph) -> tuple[ColoredDigraph, frozenset]:
    iso = d.underlying.isolated_vertices()
    return (d.without(iso) if iso else d), iso


# -- kernel by H-walks -------------------------------------------------------

def kernel_by_h_walks(d: ColoredDigraph) -> frozenset:
    """Kernel by H-walks through the transitive digraph on obstruction-free vertices."""
    free = obstruction_free_vertices(d)
    reach = {x: h_walk_reachable(d, x) for x in d.vertices}
    for x in d.vertices:
        # an obstruction-free x is its own target through the trivial walk
        if x not in free and not (reach[x] & free):
            raise HypothesisFailure("H-walk to an obstruction-free vertex", x)
    aux = Digraph(free, [(x, z) for x in free for z in reach[x] if z in free and z != x])
    return transitive_kernel(aux)


def construct_thm35(d: ColoredDigraph, check: bool = True) -> KernelCertificate:
    return certify(d, kernel_by_h_walks(d), 2, 1, "thm35")


# -- constructions relative to a class kernel S ------------------------------

def construct_prop41(d, f, c, s, k, l, check: bool = True) -> KernelCertificate:
    _params(k, l)
    c = _class_digraph(d, f, c)
    s = _class_set(f, s)
    if check:
        _require_walk_preservative(d, f, c)
        _require_class_kernel(c, s, k, l)
        _check_girth_and_neighborhoods(d, f, c, s, k, need_sinkless=True)
    kernel = constrained_kernel_by_paths(d, f, c, s)
    iso = d.underlying.isolated_vertices()
    return certify(d, kernel | iso, k, l + 1, "prop41", s, f, iso)


def _check_girth_and_neighborhoods(d, f, c, s, k, need_sinkless: bool) -> None:
    g = c.underlying
    if need_sinkless:
        dead = sinks(g)
        if dead:
            raise HypothesisFailure("(a) C_F(D) has no sinks", smallest(dead))
    girth = min_nonloop_cycle_length(g)
    if girth < k:
        raise HypothesisFailure("(a) every non-loop cycle of C_F(D) has length >= k", girth)
    out = proper_out_neighborhood(g, s)
    for x in d.vertices:
        n_in, _, n_all = neighborhoods(d, f, x)
        if n_all & s and n_all & out and not n_in <= s:
            raise HypothesisFailure("(b) N-(x) within S", x)


def construct_prop42(d, f, c, s, k, l, check: bool = True) -> KernelCertificate:
    _params(k, l)
    c = _class_digraph(d, f, c)
    s = _class_set(f, s)
    if check:
        _require_no_isolated(d)
        _require_walk_preservative(d, f, c)
        if not is_independent(c.underlying, s):
            raise HypothesisFailure("class kernel", None, "S is not independent in C_F(D)")
        _require_class_kernel(c, s, 2, l)
        out = proper_out_neighborhood(c, s)
        if out:
            raise HypothesisFailure("N+(S) empty", smallest(out))
    kernel = kernel_by_paths(union_subdigraph(d, f, s))
    return certify(d, kernel, k, l + 1, "prop42", s, f)


def construct_prop43(d, f, c, s, k, l, check: bool = True) -> KernelCertificate:
    _params(k, l, k_min=3)
    c = _class_digraph(d, f, c)
    s = _class_set(f, s)
    if check:
        _require_no_isolated(d)
        _require_walk_preservative(d, f, c)
        _require_class_kernel(c, s, k, l)
        report = class_predicates(d, f)
        for cid in ordered(s):
            if not report[cid].unilateral:
                raise HypothesisFailure("D<F> unilateral", cid)
            if report[cid].has_sink:
                raise HypothesisFailure("D<F> has no sinks", cid)
    kernel = kernel_by_paths(union_subdigraph(d, f, s))
    return certify(d, kernel, k - 1, l + 1, "prop43", s, f)


def _prop44_kernel(d, f, s) -> frozenset:
    report = class_predicates(d, f)
    picks = {}
    for cid in ordered(s):
        if not report[cid].strongly_connected:
            raise HypothesisFailure("D<F> strongly connected", cid)
        if not report[cid].obstruction_free:
            raise HypothesisFailure("obstruction-free vertex in D<F>", cid)
        picks[cid] = smallest(report[cid].obstruction_free)
    members = ordered(s)
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if f.vertices_of(a) & f.vertices_of(b):
                raise AssertionError(f"independent strongly connected classes {a}, {b} share a vertex")
    return frozenset(picks.values())


def construct_prop44(d, f, c, s, k, l, check: bool = True, k_min: int = 3) -> KernelCertificate:
    _params(k, l, k_min=k_min)
    c = _class_digraph(d, f, c)
    s = _class_set(f, s)
    if check:
        _require_class_kernel(c, s, k, l)
        # absorbency lifts through C_F(D) only for a walk-preservative partition;
        # strong classes in S alone do not give that
        _require_walk_preservative(d, f, c)
    kernel = _prop44_kernel(d, f, s)
    iso = d.underlying.isolated_vertices()
    return certify(d, kernel | iso, k + 1, l + 1, "prop44", s, f, iso)


def construct_thm51(d, f, c, s, k, l, check: bool = True) -> KernelCertificate:
    _params(k, l)
    inner, iso = _stripped(d)
    if not inner.vertices:
        return certify(d, iso, k, l + 1, "thm51", None, f, iso)
    c = _class_digraph(d, f, c)
    s = _class_set(f, s)
    if check:
        _require_class_kernel(c, s, k, l)
    cert = construct_prop42(inner, f, c, s, k, l, check)
    return certify(d, cert.kernel | iso, k, l + 1, "thm51", s, f, iso)


def construct_thm52(d, f, c, s, k, l, check: bool = True) -> KernelCertificate:
    _params(k, l)
    if not d.vertices or not is_strongly_connected(d.underlying):
        raise ValueError("precondition violated: D is not strongly connected")
    c = _class_digraph(d, f, c)
    if is_h_digraph(d):
        return certify(d, kernel_by_paths(d.underlying), k, l, "thm52", None, f)
    if sinks(c.underlying):
        raise AssertionError("class digraph of a strongly connected non-H-digraph has a sink")
    cert = construct_prop41(d, f, c, s, k, l, check)
    return replace(cert, theorem="thm52")


def construct_thm53(d, f, c, k, l, s=None, check: bool = True) -> KernelCertificate:
    _params(k, l, k_min=3)
    inner, iso = _stripped(d)
    if not inner.vertices:
        return certify(d, iso, k - 1, l + 1, "thm53", None, f, iso)
    c = _class_digraph(d, f, c)
    if check:
        report = class_predicates(d, f)
        for cid in f.classes:
            if not report[cid].unilateral:
                raise HypothesisFailure("every D<F> unilateral", cid)
            if report[cid].has_sink:
                raise HypothesisFailure("every D<F> has no sinks", cid)
    if s is None:
        s = find_class_kernel(c, k, l)
    cert = construct_prop43(inner, f, c, s, k, l, check)
    return certify(d, cert.kernel | iso, k - 1, l + 1, "thm53", cert.class_kernel, f, iso)


def _require_strong_classes(d, f) -> dict:
    report = class_predicates(d, f)
    for cid in f.classes:
        if not report[cid].strongly_connected:
            raise HypothesisFailure("every D<F> strongly connected", cid)
    return report


def construct_thm54(d, f, k, l, check: bool = True) -> KernelCertificate:
    _params(k, l)
    if l < k + 1:
        raise ValueError(f"need l >= k + 1, got k={k}, l={l}")
    inner, iso = _stripped(d)
    if not inner.vertices:
        return certify(d, iso, k, l, "thm54", None, f, iso)
    c = _class_digraph(d, f, None)
    _require_strong_classes(d, f)
    if not is_symmetric(c.underlying):
        raise AssertionError("classes are strongly connected but C_F(D) is not symmetric")
    s = symmetric_k_kernel(c.underlying, k + 1)
    cert = construct_prop43(inner, f, c, s, k + 1, l - 1, check)
    return certify(d, cert.kernel | iso, k, l, "thm54", s, f, iso)


def construct_thm55(d, f, k, check: bool = True) -> KernelCertificate:
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    c = _class_digraph(d, f, None)
    report = _require_strong_classes(d, f)
    for cid in f.classes:
        if not report[cid].obstruction_free:
            raise HypothesisFailure("every D<F> has an obstruction-free vertex", cid)
    if k == 2:
        try:
            cert = construct_thm35(d)
        except HypothesisFailure as exc:
            raise AssertionError(f"strongly connected classes should imply the H-walk hypothesis: {exc}") from exc
        return replace(cert, theorem="thm55", partition_id=f.digest())
    if not d.arcs:
        return certify(d, d.vertices, k, k - 1, "thm55", None, f, d.vertices)
    if not is_symmetric(c.underlying):
        raise AssertionError("classes are strongly connected but C_F(D) is not symmetric")
    # a (k-1)-kernel S of C_F(D) lifts to a (k, k-1, H)-kernel; for k = 3 the
    # lifting argument runs with a 2-kernel, which it supports unchanged
    s = symmetric_k_kernel(c.underlying, k - 1)
    cert = construct_prop44(d, f, c, s, k - 1, k - 2, check, k_min=2)
    return replace(cert, theorem="thm55")


def construct_brute(d: ColoredDigraph, k: int, l: int) -> KernelCertificate:
    from .oracle import exhaustive_klh_kernels

    _params(k, l)
    found = exhaustive_klh_kernels(d, k, l)
    if not found:
        raise ClassKernelNotFound(f"no ({k},{l},H)-kernel by walks exists")
    return certify(d, found[0], k, l, "brute")


# -- class-kernel acquisition and dispatch -----------------------------------

def class_kernel_candidates(c: ClassDigraph, k: int, l: int, limit: int | None = None) -> Iterator[frozenset]:
    """(k,l)-kernels of C_F(D): greedy symmetric shortcut first, then brute force."""
    g = c.underlying
    seen = set()
    if g.vertices and is_symmetric(g) and l >= k - 1:
        first = symmetric_k_kernel(g, k)
        seen.add(first)
        yield first
    try:
        everything = brute_force_kl_kernel(g, k, l, mode="all", limit=limit)
    except SizeBoundExceeded:
        if not seen:
            raise
        return
    for s in everything:
        if s not in seen:
            yield s


def find_class_kernel(c: ClassDigraph, k: int, l: int, accept: Callable[[frozenset], bool] | None = None) -> frozenset:
    try:
        for s in class_kernel_candidates(c, k, l):
            if accept is None or accept(s):
                return s
    except SizeBoundExceeded as exc:
        raise ClassKernelNotFound(str(exc)) from exc
    raise ClassKernelNotFound(f"C_F(D) has no suitable ({k},{l})-kernel")


def parse_class_kernel(spec: str | Iterable[str] | None) -> frozenset | None:
    if spec is None:
        return None
    if isinstance(spec, str):
        spec = [p.strip() for p in spec.split(",") if p.strip()]
    return frozenset(spec)


NEEDS_S = {"prop41", "prop42", "prop43", "prop44", "thm51", "thm52"}


def construct(
    method: str,
    d: ColoredDigraph,
    f: HClassPartition | None = None,
    k: int = 2,
    l: int | None = None,
    class_kernel: Iterable[str] | None = None,
    check: bool = True,
) -> KernelCertificate:
    """Dispatch by theorem tag, computing the partition and S when not given.

    Without an explicit S, candidate class kernels are tried in canonical
    order and the first one satisfying the theorem's hypotheses is used.
    """
    method = THEOREM_ALIASES.get(method, method)
    if method not in THEOREMS:
        raise ValueError(f"unknown method {method!r}")
    if method == "thm35":
        return construct_thm35(d, check)
    if method == "brute":
        return construct_brute(d, k, 1 if l is None else l)
    if f is None:
        part = finest_partition(d)
        if isinstance(part, NoPartition):
            raise PartitionUnavailable(part)
        f = part
    if method == "thm55":
        return construct_thm55(d, f, k, check)
    if method == "thm54":
        return construct_thm54(d, f, k, k + 1 if l is None else l, check)
    l = 1 if l is None else l
    c = _class_digraph(d, f, None)
    if method == "thm53":
        s = parse_class_kernel(class_kernel)
        if s is None:
            return _first_success(lambda s: construct_thm53(d, f, c, k, l, s, check), c, k, l)
        return construct_thm53(d, f, c, k, l, s, check)
    fn = {
        "prop41": construct_prop41,
        "prop42": construct_prop42,
        "prop43": construct_prop43,
        "prop44": construct_prop44,
        "thm51": construct_thm51,
        "thm52": construct_thm52,
    }[method]
    s = parse_class_kernel(class_kernel)
    if s is not None:
        return fn(d, f, c, s, k, l, check)
    if method == "thm51" and not d.arcs:
        return fn(d, f, c, (), k, l, check)
    if method == "thm52" and d.vertices and is_strongly_connected(d.underlying) and is_h_digraph(d):
        return fn(d, f, c, (), k, l, check)
    return _first_success(lambda s: fn(d, f, c, s, k, l, check), c, k, l)


def _first_success(build: Callable[[frozenset], KernelCertificate], c: ClassDigraph, k: int, l: int) -> KernelCertificate:
    first_failure: HypothesisFailure | None = None
    try:
        for s in class_kernel_candidates(c, k, l):
            try:
                return build(s)
            except HypothesisFailure as exc:
                first_failure = first_failure or exc
    except SizeBoundExceeded as exc:
        raise ClassKernelNotFound(str(exc)) from exc
    if first_failure is not None:
        raise first_failure
    raise ClassKernelNotFound(f"C_F(D) has no ({k},{l})-kernel")
