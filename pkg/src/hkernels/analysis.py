"""Aggregate every hypothesis checker into one applicability report."""
from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import ColoredDigraph, obstruction_free_vertices
from .constructors import (
    ClassKernelNotFound,
    HypothesisFailure,
    construct,
    kernel_by_h_walks,
)
from .digraph import is_symmetric, min_nonloop_cycle_length, sinks
from .hclass import (
    HClassPartition,
    NoPartition,
    class_digraph,
    class_predicates,
    finest_partition,
    is_walk_preservative,
    validate_partition,
)
from .util import fmt_length, natural_key, ordered

K_RANGE = (2, 3, 4)
L_RANGE = (1, 2, 3)
SEARCHED = ("prop41", "prop42", "prop43", "prop44", "thm51", "thm52", "thm53")


def _arc(a) -> list:
    return [str(a[0]), str(a[1])]


def _jsonable(witness):
    if isinstance(witness, (list, tuple, set, frozenset)):
        items = ordered(witness) if isinstance(witness, (set, frozenset)) else witness
        return [_jsonable(w) for w in items]
    if isinstance(witness, dict):
        return {str(k): _jsonable(v) for k, v in witness.items()}
    if witness is None or isinstance(witness, (bool, int, str)):
        return witness
    if isinstance(witness, float):
        return fmt_length(witness)
    return str(witness)


@dataclass
class AnalysisReport:
    partition: HClassPartition | None
    no_partition: NoPartition | None = None
    facts: dict = field(default_factory=dict)
    theorems: dict = field(default_factory=dict)

    @property
    def walk_preservative(self) -> bool | None:
        return self.facts.get("walk_preservative")

    def as_dict(self) -> dict:
        out: dict = {}
        if self.partition is None:
            out["partition"] = {
                "status": "none",
                "violating_pair": [_arc(a) for a in self.no_partition.pair],
                "merge_chain": [_arc(a) for a in self.no_partition.chain],
                "explanation": self.no_partition.explain(),
            }
        else:
            out["partition"] = {
                "status": "ok",
                "classes": {cid: [_arc(a) for a in grp] for cid, grp in zip(self.partition.classes, self.partition.groups())},
            }
        out.update(_jsonable(self.facts))
        out["theorems"] = _jsonable(self.theorems)
        return out


def _status_thm35(d: ColoredDigraph) -> dict:
    try:
        kernel_by_h_walks(d)
    except HypothesisFailure as exc:
        return {"status": "not-applicable", "hypothesis": exc.hypothesis, "witness": exc.witness}
    return {"status": "applicable", "k": 2, "l": 1}


def _search(method: str, d: ColoredDigraph, f: HClassPartition) -> dict:
    failure: HypothesisFailure | None = None
    other: str | None = None
    too_big = False
    for k in K_RANGE:
        if method in ("prop43", "prop44", "thm53") and k < 3:
            continue
        for l in L_RANGE:
            try:
                cert = construct(method, d, f, k=k, l=l)
            except HypothesisFailure as exc:
                failure = failure or exc
                continue
            except ClassKernelNotFound as exc:
                too_big = too_big or "bound" in str(exc)
                continue
            except ValueError as exc:
                other = other or str(exc)
                continue
            return {
                "status": "applicable",
                "class_kernel_params": [k, l],
                "class_kernel": list(cert.class_kernel or ()),
                "certificate": [cert.k, cert.l],
                "kernel": ordered(cert.kernel),
            }
    if too_big:
        return {"status": "needs-class-kernel", "k_range": list(K_RANGE), "l_range": list(L_RANGE)}
    if failure is not None:
        return {"status": "not-applicable", "hypothesis": failure.hypothesis, "witness": failure.witness}
    return {"status": "not-applicable", "reason": other or f"no class kernel for k in {list(K_RANGE)}, l in {list(L_RANGE)}"}


def analyze(d: ColoredDigraph, f: HClassPartition | None = None) -> AnalysisReport:
    free = obstruction_free_vertices(d)
    theorems = {"thm35": _status_thm35(d)}
    if f is None:
        part = finest_partition(d)
        if isinstance(part, NoPartition):
            report = AnalysisReport(None, part, {"obstruction_free_vertices": ordered(free)}, theorems)
            for name in SEARCHED + ("thm54", "thm55"):
                theorems[name] = {"status": "not-applicable", "reason": "no H-class partition"}
            return report
        f = part
    else:
        check = validate_partition(d, f)
        if not check:
            raise ValueError(f"supplied partition is not an H-class partition: {check.reason} at {check.witness}")
    c = class_digraph(d, f)
    g = c.underlying
    wp = is_walk_preservative(d, f, c)
    per_class = class_predicates(d, f)
    facts = {
        "classes": len(f),
        "class_digraph_arcs": sorted((list(a) for a in g.arcs), key=lambda a: (natural_key(a[0]), natural_key(a[1]))),
        "walk_preservative": bool(wp),
        "walk_preservative_witness": None if wp else list(wp.witness),
        "class_reports": {cid: r.as_dict() for cid, r in per_class.items()},
        "class_digraph_symmetric": is_symmetric(g),
        "class_digraph_sinks": ordered(sinks(g)),
        "min_nonloop_cycle_length": min_nonloop_cycle_length(g),
        "obstruction_free_vertices": ordered(free),
    }
    for name in SEARCHED:
        theorems[name] = _search(name, d, f)
    strong = all(r.strongly_connected for r in per_class.values())
    if strong:
        theorems["thm54"] = {"status": "applicable", "k_range": "k >= 2", "l_range": "l >= k + 1"}
    else:
        bad = next(cid for cid, r in per_class.items() if not r.strongly_connected)
        theorems["thm54"] = {"status": "not-applicable", "hypothesis": "every D<F> strongly connected", "witness": bad}
    lacking = [cid for cid, r in per_class.items() if not r.obstruction_free]
    if not strong:
        theorems["thm55"] = dict(theorems["thm54"])
    elif lacking:
        theorems["thm55"] = {"status": "not-applicable", "hypothesis": "every D<F> has an obstruction-free vertex", "witness": lacking[0]}
    else:
        theorems["thm55"] = {"status": "applicable", "k_range": "k >= 2", "certificate": "(k, k-1)"}
    return AnalysisReport(f, None, facts, theorems)


def render_text(report: AnalysisReport) -> str:
    data = report.as_dict()
    lines = []
    part = data["partition"]
    if part["status"] == "none":
        lines.append("partition: none")
        lines.append(f"  {part['explanation']}")
    else:
        lines.append(f"partition: {len(part['classes'])} classes")
        for cid, arcs in part["classes"].items():
            lines.append(f"  {cid}: " + ", ".join(f"{u}->{v}" for u, v in arcs))
        lines.append(f"walk-preservative: {data['walk_preservative']}"
                     + ("" if data["walk_preservative"] else f" (witness {data['walk_preservative_witness']})"))
        lines.append(f"class digraph symmetric: {data['class_digraph_symmetric']}; sinks: {data['class_digraph_sinks']}; "
                     f"shortest non-loop cycle: {data['min_nonloop_cycle_length']}")
    lines.append(f"obstruction-free vertices: {data['obstruction_free_vertices']}")
    lines.append("theorems:")
    for name, info in data["theorems"].items():
        extra = {k: v for k, v in info.items() if k != "status"}
        lines.append(f"  {name:7s} {info['status']:20s} {extra if extra else ''}".rstrip())
    return "\n".join(lines)
