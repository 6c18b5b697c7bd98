"""Seeded experiment drivers behind the acceptance suite and scripts/.

Each driver returns an ``Outcome``; nothing here raises on a failed check,
so a caller can report every criterion in one run.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .coloring import (
    ColoredDigraph,
    PatternDigraph,
    Walk,
    alternation_pattern,
    h_length,
    is_h_digraph,
    is_h_walk,
    loops_only_pattern,
    obstruction_free_vertices,
    obstructions,
)
from .constructors import (
    ClassKernelNotFound,
    HypothesisFailure,
    PartitionUnavailable,
    construct,
)
from .digraph import Digraph, is_strongly_connected, is_symmetric, is_unilateral, strong_components
from .fixtures import fig1_style, fig2_style
from .generators import blobs, random_instance, ring, segment_forest, symmetric_classes, targeted
from .hclass import (
    NoPartition,
    class_digraph,
    class_predicates,
    class_subdigraph,
    finest_partition,
    is_walk_preservative,
    neighborhoods,
    union_subdigraph,
)
from .kernels import (
    brute_force_kl_kernel,
    constrained_kernel_by_paths,
    greedy_k_independent,
    is_independent,
    is_kl_kernel,
    proper_out_neighborhood,
    symmetric_k_kernel,
    verify_kernel_by_paths,
)
from .oracle import (
    bounded_min_h_length,
    enumerate_walks,
    exhaustive_klh_kernels,
    h_distance_table,
    verify_klh_kernel,
    verify_l_absorbent_by_walks,
)
from .util import INF

CONSTRUCTORS = ("thm35", "prop41", "prop42", "prop43", "prop44", "thm51", "thm52", "thm53", "thm54", "thm55")
REFUSALS = (HypothesisFailure, ClassKernelNotFound, PartitionUnavailable, ValueError)


@dataclass
class Outcome:
    name: str
    passed: bool
    seconds: float
    summary: str
    data: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.summary} ({self.seconds:.1f}s)"


def _timed(name: str, fn: Callable[[], tuple[bool, str, dict]]) -> Outcome:
    start = time.perf_counter()
    ok, summary, data = fn()
    return Outcome(name, ok, time.perf_counter() - start, summary, data)


# -- 1. oracle cross-validation ------------------------------------------------

def oracle_crosscheck(instances: int = 500, seed: int = 0) -> Outcome:
    """0/1 search against the bounded walk DP at cutoffs 2|A| and 4|A|."""

    def run():
        pairs = 0
        bad = []
        for i in range(instances):
            d = random_instance(seed + i).colored
            m = len(d.arcs)
            table = h_distance_table(d)
            for u in d.vertices:
                for v in d.vertices:
                    if u == v:
                        continue
                    pairs += 1
                    fast = table[u].get(v, INF)
                    short = bounded_min_h_length(d, u, v, 2 * m)
                    long = bounded_min_h_length(d, u, v, 4 * m)
                    if not fast == short == long:
                        bad.append({"seed": seed + i, "pair": (u, v), "bfs": fast, "2A": short, "4A": long})
        return not bad, f"{instances} instances, {pairs} ordered pairs, {len(bad)} mismatches", {"mismatches": bad[:5]}

    return _timed("oracle cross-validation", run)


# -- 2. constructor soundness --------------------------------------------------

def constructor_soundness(target: int = 100, max_seeds: int = 2000, methods=CONSTRUCTORS) -> Outcome:
    """Targeted instances per constructor until ``target`` certificates are emitted."""

    def run():
        counts, failures = {}, []
        for method in methods:
            accepted = 0
            seed = 0
            while accepted < target and seed < max_seeds:
                gen, k, l = targeted(method, seed)
                seed += 1
                try:
                    cert = construct(method, gen.colored, None if method == "thm35" else gen.partition, k=k, l=l)
                except REFUSALS:
                    continue
                except AssertionError as exc:
                    failures.append({"method": method, "seed": seed - 1, "error": str(exc)})
                    continue
                accepted += 1
                if not verify_klh_kernel(gen.colored, cert.kernel, cert.k, cert.l):
                    failures.append({"method": method, "seed": seed - 1, "kernel": sorted(map(str, cert.kernel))})
            counts[method] = {"accepted": accepted, "tried": seed}
        short = [m for m, c in counts.items() if c["accepted"] < target]
        ok = not failures and not short
        accepted = ", ".join(f"{m}={c['accepted']}/{c['tried']}" for m, c in counts.items())
        return ok, f"accepted {accepted}; {len(failures)} unsound", {"counts": counts, "failures": failures[:5]}

    return _timed("constructor soundness", run)


# -- 3. maximal k-independent sets of symmetric digraphs -----------------------

def random_symmetric_digraph(rng: random.Random, max_vertices: int = 10) -> Digraph:
    n = rng.randint(1, max_vertices)
    verts = [f"v{i}" for i in range(n)]
    p = rng.choice((0.15, 0.3, 0.5))
    edges = [(u, v) for u, v in itertools.combinations(verts, 2) if rng.random() < p]
    return Digraph(verts, edges + [(v, u) for u, v in edges])


def symmetric_kernels(graphs: int = 200, orders: int = 5, ks=(2, 3, 4), seed: int = 0) -> Outcome:
    def run():
        rng = random.Random(seed)
        checked, bad = 0, []
        for i in range(graphs):
            g = random_symmetric_digraph(rng)
            for k in ks:
                truth = set(brute_force_kl_kernel(g, k, k - 1, mode="all"))
                for _ in range(orders):
                    order = list(g.vertices)
                    rng.shuffle(order)
                    s = greedy_k_independent(g, k, order)
                    checked += 1
                    if s not in truth:
                        bad.append({"graph": i, "k": k, "set": sorted(s)})
        return not bad, f"{graphs} digraphs x {orders} orders x k in {list(ks)}: {checked} greedy sets, {len(bad)} not k-kernels", {"bad": bad[:5]}

    return _timed("maximal k-independent sets are k-kernels", run)


# -- 4. lemma suite --------------------------------------------------------------

def random_path_kernel(g: Digraph, rng: random.Random) -> frozenset:
    """One vertex from every terminal strong component, chosen at random."""
    return frozenset(rng.choice(sorted(c)) for c in strong_components(g).terminal_components())


def _random_strong(rng: random.Random) -> ColoredDigraph:
    n = rng.randint(2, 7)
    verts = [f"v{i}" for i in range(n)]
    cyc = verts[:]
    rng.shuffle(cyc)
    arcs = set(zip(cyc, cyc[1:] + cyc[:1]))
    for u, v in itertools.permutations(verts, 2):
        if rng.random() < 0.2:
            arcs.add((u, v))
    colors = list(range(1, rng.randint(1, 3) + 1))
    pattern = PatternDigraph(colors, [(a, b) for a in colors for b in colors if rng.random() < 0.5])
    return ColoredDigraph(Digraph(verts, arcs), {a: rng.choice(colors) for a in sorted(arcs)}, pattern)


def _instance(rng: random.Random):
    """A colored digraph with a valid H-class partition, or None."""
    kind = rng.random()
    if kind < 0.5:
        d = random_instance(rng, max_vertices=7, max_arcs=12).colored
        f = finest_partition(d)
        return None if isinstance(f, NoPartition) else (d, f)
    if kind < 0.65:
        d = _random_strong(rng)
        f = finest_partition(d)
        return None if isinstance(f, NoPartition) else (d, f)
    make = rng.choice((symmetric_classes, blobs, ring, segment_forest))
    gen = make(rng)
    return gen.colored, gen.partition


def _random_subset(rng: random.Random, items, nonempty: bool = True) -> list:
    items = sorted(items)
    while True:
        pick = [x for x in items if rng.random() < 0.5]
        if pick or not nonempty or not items:
            return pick


def _random_independent(rng: random.Random, c) -> list:
    g = c.underlying
    order = list(g.vertices)
    rng.shuffle(order)
    chosen: list = []
    for v in order:
        if not g.has_arc(v, v) and rng.random() < 0.7 and is_independent(g, chosen + [v]):
            chosen.append(v)
    return chosen


def _h_digraph_instance(rng: random.Random) -> ColoredDigraph:
    d = random_instance(rng, max_vertices=7, max_arcs=12).colored
    turns = {(d.coloring[a], d.coloring[b]) for a, b in d.consecutive_pairs()}
    extra = {(x, y) for x in d.pattern.colors for y in d.pattern.colors if rng.random() < 0.3}
    return ColoredDigraph(d.underlying, d.coloring, PatternDigraph(d.pattern.colors, turns | extra))


def _random_walk(d: ColoredDigraph, rng: random.Random, start, steps: int, h_only: bool = False):
    path = [start]
    prev = None
    for _ in range(steps):
        nxt = list(d.underlying.out_neighbors(path[-1]))
        if h_only and prev is not None:
            nxt = [w for w in nxt if d.compatible(prev, (path[-1], w))]
        if not nxt:
            break
        w = rng.choice(nxt)
        prev = (path[-1], w)
        path.append(w)
    return Walk(path) if len(path) > 1 else None


# each check returns None when the hypotheses do not hold, else a list of counterexamples

def _lemma_c0_l1(rng):
    g = random_instance(rng, max_vertices=8, max_arcs=14).colored.underlying
    g = g.without(g.isolated_vertices())
    if not g.arcs:
        return None
    k = random_path_kernel(g, rng)
    return [x for x in k if g.in_degree(x) == 0]


def _lemma_obs1_a(rng):
    inst = _instance(rng)
    if inst is None:
        return None
    d, f = inst
    c = class_digraph(d, f)
    bad = []
    for x in d.vertices:
        n_in, n_out, _ = neighborhoods(d, f, x)
        bad += [(x, a, b) for a in n_in for b in n_out if (a, b) not in c.arcs]
    return bad


def _obs1_b(rng, both_sides: bool):
    inst = _instance(rng)
    if inst is None:
        return None
    d, f = inst
    g = d.underlying
    bad = []
    for x in obstruction_free_vertices(d):
        degree_ok = g.in_degree(x) and g.out_degree(x) if both_sides else g.in_degree(x) + g.out_degree(x)
        if degree_ok and len(neighborhoods(d, f, x)[2]) != 1:
            bad.append({"vertex": x, "classes": sorted(neighborhoods(d, f, x)[2]),
                        "arcs": sorted((a, d.coloring[a]) for a in g.arcs if x in a)})
    return bad


def _lemma_obs1_c(rng):
    inst = _instance(rng)
    if inst is None:
        return None
    d, f = inst
    start = rng.choice(d.vertices)
    walks = [w for w in itertools.islice(enumerate_walks(d, start, 5), 400) if is_h_walk(d, w)]
    return [w.vertices for w in walks if len({f.class_of[a] for a in w.arcs()}) != 1]


def _lemma_obs1_d(rng):
    d = random_instance(rng, max_vertices=7, max_arcs=14).colored
    u = rng.choice(d.vertices)
    t = _random_walk(d, rng, u, rng.randint(1, 6))
    if t is None:
        return None
    v = t.vertices[-1]
    t2 = _random_walk(d, rng, v, rng.randint(1, 5), h_only=True)
    if t2 is None or len({u, v, t2.vertices[-1]}) != 3:
        return None
    joined = t.concat(t2)
    before, after = obstructions(d, t), obstructions(d, joined)
    ok = before <= after <= before | {len(t)} and h_length(d, joined) - h_length(d, t) in (0, 1)
    return [] if ok else [{"T": t.vertices, "T'": t2.vertices}]


def _lemma_c1_l1(rng):
    inst = _instance(rng)
    if inst is None:
        return None
    d, f = inst
    s = _random_independent(rng, class_digraph(d, f))
    if not s:
        return None
    arcs = set().union(*(f.classes[x] for x in s))
    return [] if is_h_digraph(d, arcs) else [s]


def _lemma_c1_l2(rng):
    d = _random_strong(rng)
    f = finest_partition(d)
    if isinstance(f, NoPartition):
        return None
    return [] if is_strongly_connected(class_digraph(d, f).underlying) else [sorted(d.arcs)]


def _lemma_unilateral(rng):
    inst = _instance(rng)
    if inst is None:
        return None
    d, f = inst
    uni = [cid for cid in f.classes if is_unilateral(class_subdigraph(d, f, cid))]
    if not uni:
        return None
    s = _random_subset(rng, uni)
    k = random_path_kernel(union_subdigraph(d, f, s), rng)
    return [(cid, sorted(k & f.vertices_of(cid))) for cid in s if len(k & f.vertices_of(cid)) > 1]


def _strong_instance(rng):
    if rng.random() < 0.6:
        gen = symmetric_classes(rng, classes=rng.randint(1, 5))
        return gen.colored, gen.partition
    d = _random_strong(rng)
    f = finest_partition(d)
    if isinstance(f, NoPartition):
        return None
    if not all(r.strongly_connected for r in class_predicates(d, f).values()):
        return None
    return d, f


def _lemma_strong_a(rng):
    inst = _strong_instance(rng)
    if inst is None:
        return None
    wp = is_walk_preservative(*inst)
    return [] if wp else [wp.witness]


def _lemma_strong_b(rng):
    inst = _strong_instance(rng)
    if inst is None:
        return None
    return [] if is_symmetric(class_digraph(*inst).underlying) else ["asymmetric"]


def _lemma_strong_c(rng):
    inst = _strong_instance(rng)
    if inst is None:
        return None
    d, f = inst
    s = _random_independent(rng, class_digraph(d, f))
    return [(a, b) for a, b in itertools.combinations(s, 2) if f.vertices_of(a) & f.vertices_of(b)]


def _lemma_c1_l0(rng):
    inst = _instance(rng)
    if inst is None:
        return None
    d, f = inst
    s = set(_random_subset(rng, f.classes))
    k = random_path_kernel(union_subdigraph(d, f, s), rng)
    return [x for x in k if not neighborhoods(d, f, x)[0] & s]


def _lemma_hdigraph(rng):
    d = _h_digraph_instance(rng)
    if not is_h_digraph(d):
        return None
    k = random_path_kernel(d.underlying, rng)
    return [(kk, ll) for kk in range(2, 6) for ll in range(1, 5) if not verify_klh_kernel(d, k, kk, ll)]


def _lemma_noisolated(rng):
    d = random_instance(rng, max_vertices=6, max_arcs=10).colored
    d = d.without(d.underlying.isolated_vertices())
    if not d.arcs:
        return None
    w = [f"w{i}" for i in range(rng.randint(1, 2))]
    full = ColoredDigraph(Digraph(list(d.vertices) + w, d.arcs), d.coloring, d.pattern)
    k, l = rng.randint(2, 4), rng.randint(1, 3)
    found = exhaustive_klh_kernels(d, k, l)
    if not found:
        return None
    kernel = rng.choice(found)
    return [] if verify_klh_kernel(full, kernel | set(w), k, l) else [sorted(kernel)]


LEMMAS: dict[str, Callable] = {
    "c0.l1": _lemma_c0_l1,
    "obs1(a)": _lemma_obs1_a,
    "obs1(b)": lambda rng: _obs1_b(rng, both_sides=False),
    "obs1(c)": _lemma_obs1_c,
    "obs1(d)": _lemma_obs1_d,
    "c1.l1": _lemma_c1_l1,
    "c1.l2": _lemma_c1_l2,
    "unilateral.lema": _lemma_unilateral,
    "lemmastronglyconnected(a)": _lemma_strong_a,
    "lemmastronglyconnected(b)": _lemma_strong_b,
    "lemmastronglyconnected(c)": _lemma_strong_c,
    "c1.l0": _lemma_c1_l0,
    "hdigraph": _lemma_hdigraph,
    "noisolatedvertices": _lemma_noisolated,
}
# informational: obs1(b) with the degree condition its proof actually uses
EXTRA_LEMMAS: dict[str, Callable] = {"obs1(b) with d-(x), d+(x) > 0": lambda rng: _obs1_b(rng, both_sides=True)}


def run_lemma(name: str, check: Callable, trials: int, seed: int, max_attempts: int) -> dict:
    rng = random.Random(f"{seed}:{name}")
    done = attempts = 0
    counter = []
    while done < trials and attempts < max_attempts:
        attempts += 1
        result = check(rng)
        if result is None:
            continue
        done += 1
        counter += result
    return {"trials": done, "attempts": attempts, "counterexamples": len(counter), "first": counter[:1]}


def lemma_suite(trials: int = 200, seed: int = 0, max_attempts: int = 20000) -> Outcome:
    def run():
        table = {name: run_lemma(name, fn, trials, seed, max_attempts) for name, fn in LEMMAS.items()}
        extra = {name: run_lemma(name, fn, trials, seed, max_attempts) for name, fn in EXTRA_LEMMAS.items()}
        failed = [n for n, r in table.items() if r["counterexamples"] or r["trials"] < trials]
        summary = f"{len(table)} lemmas x >= {trials} trials; " + (
            "no counterexamples" if not failed else "failing: " + ", ".join(
                f"{n} ({table[n]['counterexamples']} counterexamples in {table[n]['trials']} trials, e.g. {table[n]['first']})" for n in failed
            )
        )
        return not failed, summary, {"lemmas": table, "informational": extra}

    return _timed("lemma suite", run)


# -- 5. tightness fixtures -------------------------------------------------------

def tightness_fixtures() -> Outcome:
    def run():
        checks = {}
        fx = fig1_style()
        d, f = fx.colored, fx.partition
        c = class_digraph(d, f)
        checks["fig1: S={F6} 3-absorbent in C_F(D)"] = bool(is_kl_kernel(c.underlying, {"F6"}, 2, 3))
        checks["fig1: walk-preservative"] = bool(is_walk_preservative(d, f))
        checks["fig1: {x4} kernel by paths of D<F6>"] = bool(verify_kernel_by_paths(union_subdigraph(d, f, {"F6"}), {"x4"}))
        for r in (1, 2, 3):
            checks[f"fig1: {{x4}} not ({r},H)-absorbent"] = not verify_l_absorbent_by_walks(d, {"x4"}, r)
        checks["fig1: {x4} (4,H)-absorbent"] = bool(verify_l_absorbent_by_walks(d, {"x4"}, 4))
        fx = fig2_style()
        d, f = fx.colored, fx.partition
        c = class_digraph(d, f)
        checks["fig2: not walk-preservative"] = not is_walk_preservative(d, f)
        checks["fig2: S={F5} 4-absorbent in C_F(D)"] = bool(is_kl_kernel(c.underlying, {"F5"}, 2, 4))
        d5 = union_subdigraph(d, f, {"F5"})
        n = len(d5.vertices)
        kernels = brute_force_kl_kernel(d5, max(n, 2), max(n - 1, 1), mode="all")
        checks["fig2: no kernel by paths of D<F5> is (5,H)-absorbent"] = bool(kernels) and not any(
            verify_l_absorbent_by_walks(d, k, 5) for k in kernels
        )
        failed = [k for k, v in checks.items() if not v]
        return not failed, f"{len(checks)} stated properties, {len(failed)} failed" + (f": {failed}" if failed else ""), {"checks": checks}

    return _timed("tightness fixtures", run)


# -- 6. swap loop ------------------------------------------------------------------

def swap_loop(instances: int = 200, seed: int = 0) -> Outcome:
    def run():
        rng = random.Random(seed)
        bad, swaps, done = [], 0, 0
        while done < instances:
            gen = symmetric_classes(rng, classes=rng.randint(2, 5))
            d, f = gen.colored, gen.partition
            c = class_digraph(d, f)
            order = list(c.underlying.vertices)
            rng.shuffle(order)
            s = symmetric_k_kernel(c.underlying, rng.randint(2, 3), order)
            d1 = union_subdigraph(d, f, s)
            start = random_path_kernel(d1, rng) if rng.random() < 0.7 else None
            trace: list = []
            try:
                n = constrained_kernel_by_paths(d, f, c, s, initial=start, trace=trace)
            except (RuntimeError, ValueError) as exc:
                bad.append({"instance": done, "error": str(exc)})
                done += 1
                continue
            done += 1
            swaps += len(trace)
            d2 = set(union_subdigraph(d, f, proper_out_neighborhood(c, s)).vertices)
            if len(trace) > len(d1.vertices) or not verify_kernel_by_paths(d1, n) or not n <= d2:
                bad.append({"instance": done - 1, "swaps": len(trace), "kernel": sorted(n)})
        return not bad, f"{instances} instances, {swaps} swaps in total, {len(bad)} failures", {"failures": bad[:5]}

    return _timed("swap loop", run)


# -- 7. exhaustive sweep -------------------------------------------------------------

SWEEP_PATTERNS = {
    "monochromatic": loops_only_pattern([1, 2]),
    "alternating": alternation_pattern([1, 2]),
    "one-way": PatternDigraph([1, 2], [(1, 1), (1, 2)]),
}
SWEEP_GRID = {
    "thm35": [(2, 1)],
    "prop41": [(2, 1), (2, 2), (3, 1), (3, 2)],
    "prop42": [(2, 1), (2, 2), (3, 1), (3, 2)],
    "thm51": [(2, 1), (2, 2), (3, 1), (3, 2)],
    "thm52": [(2, 1), (2, 2), (3, 1), (3, 2)],
    "prop43": [(3, 1), (3, 2), (4, 1), (4, 2)],
    "prop44": [(3, 1), (3, 2), (4, 1), (4, 2)],
    "thm53": [(3, 1), (3, 2), (4, 1), (4, 2)],
    "thm54": [(2, 3), (3, 4)],
    "thm55": [(2, None), (3, None), (4, None)],
}


def orbit_representatives(n: int, swap_colors: bool) -> np.ndarray:
    """Arc-state codes (0 absent, 1 or 2 = color) with one code per isomorphism class.

    Slot order is the ordered pairs (i, j), i != j, in lexicographic order;
    a code is kept when it is the minimum of its orbit under vertex
    permutations, and under the color swap when ``swap_colors`` is set.
    """
    slots = [(i, j) for i in range(n) for j in range(n) if i != j]
    m = len(slots)
    if m == 0:
        return np.zeros((1, 0), dtype=np.int8)
    index = {s: t for t, s in enumerate(slots)}
    codes = np.arange(3 ** m, dtype=np.int64)
    digits = np.stack([(codes // 3 ** t) % 3 for t in range(m)], axis=1).astype(np.int8)
    weights = 3 ** np.arange(m, dtype=np.int64)
    best = codes.copy()
    variants = [digits]
    if swap_colors:
        swapped = digits.copy()
        swapped[digits == 1] = 2
        swapped[digits == 2] = 1
        variants.append(swapped)
    for perm in itertools.permutations(range(n)):
        # the image of slot (i,j) is slot (perm[i], perm[j])
        target = [index[(perm[i], perm[j])] for i, j in slots]
        for var in variants:
            moved = np.empty_like(var)
            moved[:, target] = var
            best = np.minimum(best, moved.astype(np.int64) @ weights)
    return digits[best == codes]


def sweep_instances(max_n: int = 4, patterns=None):
    patterns = SWEEP_PATTERNS if patterns is None else patterns
    for pname, pattern in patterns.items():
        swap = _swap_invariant(pattern)
        for n in range(1, max_n + 1):
            verts = "abcd"[:n] if n <= 4 else [f"v{i}" for i in range(n)]
            slots = [(verts[i], verts[j]) for i in range(n) for j in range(n) if i != j]
            for row in orbit_representatives(n, swap):
                coloring = {slots[t]: int(c) for t, c in enumerate(row) if c}
                yield pname, ColoredDigraph(Digraph(verts, coloring), coloring, pattern)


def _swap_invariant(pattern: PatternDigraph) -> bool:
    flip = {1: 2, 2: 1}
    return set(pattern.colors) == {1, 2} and {(flip[a], flip[b]) for a, b in pattern.arcs} == set(pattern.arcs)


def exhaustive_sweep(max_n: int = 4, patterns=None, grid=None) -> Outcome:
    grid = SWEEP_GRID if grid is None else grid

    def run():
        instances = certificates = 0
        per_method = {m: 0 for m in grid}
        bad = []
        for pname, d in sweep_instances(max_n, patterns):
            instances += 1
            f = finest_partition(d)
            part = None if isinstance(f, NoPartition) else f
            truth: dict = {}
            for method, params in grid.items():
                if part is None and method != "thm35":
                    continue
                for k, l in params:
                    try:
                        cert = construct(method, d, part, k=k, l=l)
                    except REFUSALS:
                        continue
                    except AssertionError as exc:
                        bad.append({"pattern": pname, "arcs": sorted(d.coloring.items()), "method": method, "error": str(exc)})
                        continue
                    certificates += 1
                    per_method[method] += 1
                    key = (cert.k, cert.l)
                    if key not in truth:
                        truth[key] = set(exhaustive_klh_kernels(d, *key))
                    if cert.kernel not in truth[key]:
                        bad.append({"pattern": pname, "arcs": sorted(d.coloring.items()), "method": method,
                                    "k": cert.k, "l": cert.l, "kernel": sorted(cert.kernel)})
        counts = ", ".join(f"{m}={c}" for m, c in per_method.items())
        return not bad, f"{instances} non-isomorphic instances, {certificates} certificates ({counts}), {len(bad)} disagreements", {
            "instances": instances, "certificates": per_method, "bad": bad[:5]}

    return _timed("exhaustive agreement", run)
