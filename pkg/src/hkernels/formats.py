"""JSON instance and certificate documents.

Instance layout::

    {"pattern":  {"colors": [...], "arcs": [[c1, c2], ...]},
     "digraph":  {"vertices": [...], "arcs": [{"from": u, "to": v, "color": c}, ...]},
     "partition": [[arc index, ...], ...],      # optional
     "metadata":  {...}}                        # optional

The canonical form sorts colors, vertices and arcs; partition groups keep
their order (it fixes the class names F1, F2, ...) with indices remapped to
the sorted arc list and sorted within each group.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .coloring import ColoredDigraph, PatternDigraph
from .constructors import KernelCertificate
from .digraph import Digraph
from .hclass import HClassPartition
from .util import arc_key, ordered

ERROR_CODES = ("malformed", "loop", "unknown-color", "parallel-arc", "unknown-vertex", "bad-partition")


class InstanceError(ValueError):
    def __init__(self, code: str, message: str, path: str = "") -> None:
        assert code in ERROR_CODES, code
        self.code = code
        self.path = path
        super().__init__(f"[{code}] {path + ': ' if path else ''}{message}")


@dataclass(frozen=True)
class InstanceDocument:
    colored: ColoredDigraph
    partition: HClassPartition | None = None
    metadata: dict = field(default_factory=dict)


def _ident(value, path: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InstanceError("malformed", f"identifier must be a string or integer, got {value!r}", path)
    return value


def _field(obj, key: str, kind, path: str):
    if not isinstance(obj, dict) or key not in obj:
        raise InstanceError("malformed", f"missing field {key!r}", path)
    value = obj[key]
    if not isinstance(value, kind):
        raise InstanceError("malformed", f"field {key!r} has the wrong type", f"{path}.{key}" if path else key)
    return value


def _load_json(data: bytes | str):
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError("malformed", exc.msg, f"line {exc.lineno} column {exc.colno}") from None


def parse_instance(data: bytes | str) -> InstanceDocument:
    doc = _load_json(data)
    if not isinstance(doc, dict):
        raise InstanceError("malformed", "top level must be an object")
    pat = _field(doc, "pattern", dict, "")
    colors = [_ident(c, f"pattern.colors[{i}]") for i, c in enumerate(_field(pat, "colors", list, "pattern"))]
    if len(set(colors)) != len(colors):
        raise InstanceError("malformed", "duplicate color", "pattern.colors")
    palette = set(colors)
    h_arcs = []
    for i, pair in enumerate(_field(pat, "arcs", list, "pattern")):
        path = f"pattern.arcs[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise InstanceError("malformed", "pattern arc must be a pair", path)
        for c in pair:
            if _ident(c, path) not in palette:
                raise InstanceError("unknown-color", f"color {c!r} is not in the pattern", path)
        h_arcs.append(tuple(pair))
    if len(set(h_arcs)) != len(h_arcs):
        raise InstanceError("parallel-arc", "repeated pattern arc", "pattern.arcs")

    dg = _field(doc, "digraph", dict, "")
    verts = [_ident(v, f"digraph.vertices[{i}]") for i, v in enumerate(_field(dg, "vertices", list, "digraph"))]
    if len(set(verts)) != len(verts):
        raise InstanceError("malformed", "duplicate vertex", "digraph.vertices")
    known = set(verts)
    arcs, coloring = [], {}
    for i, rec in enumerate(_field(dg, "arcs", list, "digraph")):
        path = f"digraph.arcs[{i}]"
        if not isinstance(rec, dict):
            raise InstanceError("malformed", "arc record must be an object", path)
        u = _ident(_field(rec, "from", (str, int), path), f"{path}.from")
        v = _ident(_field(rec, "to", (str, int), path), f"{path}.to")
        c = _ident(_field(rec, "color", (str, int), path), f"{path}.color")
        for x, key in ((u, "from"), (v, "to")):
            if x not in known:
                raise InstanceError("unknown-vertex", f"vertex {x!r} is not listed", f"{path}.{key}")
        if u == v:
            raise InstanceError("loop", f"loop at {u!r}; D must be loopless", path)
        if c not in palette:
            raise InstanceError("unknown-color", f"color {c!r} is not in the pattern", f"{path}.color")
        if (u, v) in coloring:
            raise InstanceError("parallel-arc", f"second arc {u!r}->{v!r}", path)
        arcs.append((u, v))
        coloring[(u, v)] = c
    colored = ColoredDigraph(Digraph(verts, arcs), coloring, PatternDigraph(colors, h_arcs))

    partition = None
    if doc.get("partition") is not None:
        groups = _field(doc, "partition", list, "")
        seen: set = set()
        built = []
        for gi, grp in enumerate(groups):
            path = f"partition[{gi}]"
            if not isinstance(grp, list) or not grp:
                raise InstanceError("bad-partition", "class must be a nonempty list of arc indices", path)
            for idx in grp:
                if isinstance(idx, bool) or not isinstance(idx, int) or not 0 <= idx < len(arcs):
                    raise InstanceError("bad-partition", f"arc index {idx!r} out of range", path)
                if idx in seen:
                    raise InstanceError("bad-partition", f"arc index {idx} used twice", path)
                seen.add(idx)
            built.append([arcs[i] for i in grp])
        if len(seen) != len(arcs):
            missing = sorted(set(range(len(arcs))) - seen)
            raise InstanceError("bad-partition", f"arc indices {missing} are not covered", "partition")
        partition = HClassPartition(built)

    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise InstanceError("malformed", "metadata must be an object", "metadata")
    return InstanceDocument(colored, partition, metadata)


def instance_to_dict(doc: InstanceDocument) -> dict:
    d = doc.colored
    arcs = d.underlying.sorted_arcs()
    index = {a: i for i, a in enumerate(arcs)}
    out: dict = {
        "pattern": {
            "colors": ordered(d.pattern.colors),
            "arcs": [list(p) for p in sorted(d.pattern.arcs, key=arc_key)],
        },
        "digraph": {
            "vertices": list(d.vertices),
            "arcs": [{"from": u, "to": v, "color": d.coloring[(u, v)]} for u, v in arcs],
        },
    }
    if doc.partition is not None:
        out["partition"] = [sorted(index[a] for a in grp) for grp in doc.partition.classes.values()]
    if doc.metadata:
        out["metadata"] = doc.metadata
    return out


def emit_instance(doc: InstanceDocument) -> bytes:
    return (json.dumps(instance_to_dict(doc), indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")


def instance_digest(doc: InstanceDocument | bytes) -> str:
    """sha256 of the canonical instance bytes (metadata included)."""
    if not isinstance(doc, InstanceDocument):
        doc = parse_instance(doc)
    return hashlib.sha256(emit_instance(doc)).hexdigest()


def certificate_to_dict(cert: KernelCertificate, digest: str) -> dict:
    v = cert.verification
    return {
        "instance_digest": digest,
        "theorem": cert.theorem,
        "k": cert.k,
        "l": cert.l,
        "kernel": cert.sorted_kernel(),
        "class_kernel": None if cert.class_kernel is None else list(cert.class_kernel),
        "partition_id": cert.partition_id,
        "isolated": ordered(cert.isolated),
        "verification": {
            "independent": bool(v.get("independent")),
            "absorbent": bool(v.get("absorbent")),
            "counterexample": _counter_json(v.get("counterexample")),
        },
    }


def _counter_json(counter):
    if counter is None:
        return None
    length = counter.get("h_length")
    out = dict(counter)
    if isinstance(length, float):
        out["h_length"] = "infinity"
    return out


def emit_certificate(cert: KernelCertificate, digest: str) -> bytes:
    return (json.dumps(certificate_to_dict(cert, digest), indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")


def parse_certificate(data: bytes | str) -> KernelCertificate:
    doc = _load_json(data)
    if not isinstance(doc, dict):
        raise InstanceError("malformed", "top level must be an object")
    for key in ("theorem", "k", "l", "kernel", "verification"):
        if key not in doc:
            raise InstanceError("malformed", f"missing field {key!r}")
    ver = doc["verification"]
    ck = doc.get("class_kernel")
    return KernelCertificate(
        kernel=frozenset(doc["kernel"]),
        k=int(doc["k"]),
        l=int(doc["l"]),
        theorem=doc["theorem"],
        class_kernel=None if ck is None else tuple(ck),
        partition_id=doc.get("partition_id"),
        isolated=frozenset(doc.get("isolated", ())),
        verified=bool(ver.get("independent")) and bool(ver.get("absorbent")),
        verification=dict(ver),
    )


def to_dot(graph: Digraph, name: str = "G", labels: dict | None = None) -> str:
    """Plain DOT text; a convenience view only."""
    lines = [f"digraph {json.dumps(name)} {{"]
    for v in graph.vertices:
        label = f' [label={json.dumps(labels[v])}]' if labels and v in labels else ""
        lines.append(f"  {json.dumps(str(v))}{label};")
    for u, v in graph.sorted_arcs():
        lines.append(f"  {json.dumps(str(u))} -> {json.dumps(str(v))};")
    lines.append("}")
    return "\n".join(lines) + "\n"

