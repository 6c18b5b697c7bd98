"""Command-line interface.

Exit codes: 0 success or property true; 1 property false, nothing found,
hypothesis failure or no H-class partition; 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import analyze, render_text
from .constructors import (
    THEOREM_ALIASES,
    THEOREMS,
    ClassKernelNotFound,
    HypothesisFailure,
    PartitionUnavailable,
    VerificationFailed,
    construct,
)
from .fixtures import fixture_names, fixtures, get_fixture
from .formats import InstanceDocument, InstanceError, emit_certificate, emit_instance, instance_digest, parse_instance, to_dot
from .generators import FAMILIES, generate
from .hclass import NoPartition, class_digraph, finest_partition, validate_partition
from .oracle import verify_klh_kernel
from .util import fmt_length

OK, FALSE, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def load(source: str) -> InstanceDocument:
    """A path to an instance file, or the name of a built-in fixture."""
    path = Path(source)
    if path.is_file():
        try:
            return parse_instance(path.read_bytes())
        except InstanceError as exc:
            raise InputError(f"{source}: {exc}") from None
    if source in fixture_names():
        fx = get_fixture(source)
        return InstanceDocument(fx.colored, fx.partition, fx.metadata)
    raise InputError(f"{source}: no such file or fixture (fixtures: {', '.join(fixture_names())})")


def _partition(doc: InstanceDocument):
    if doc.partition is not None:
        check = validate_partition(doc.colored, doc.partition)
        if not check:
            raise InputError(f"supplied partition is not an H-class partition: {check.reason} at {check.witness}")
        return doc.partition
    return finest_partition(doc.colored)


def _vertex_lookup(doc: InstanceDocument, names: list[str]) -> set:
    by_text = {str(v): v for v in doc.colored.vertices}
    missing = [n for n in names if n not in by_text]
    if missing:
        raise InputError(f"unknown vertices: {', '.join(missing)}")
    return {by_text[n] for n in names}


def cmd_validate(args) -> int:
    doc = load(args.file)
    d = doc.colored
    print(f"ok: {len(d.vertices)} vertices, {len(d.arcs)} arcs, {len(d.pattern.colors)} colors")
    if doc.partition is not None:
        check = validate_partition(d, doc.partition)
        if not check:
            print(f"partition invalid: {check.reason} at {check.witness}")
            return FALSE
        print(f"partition valid: {len(doc.partition)} classes")
    return OK


def cmd_partition(args) -> int:
    doc = load(args.file)
    f = _partition(doc)
    if isinstance(f, NoPartition):
        print("no H-class partition")
        print(f.explain())
        return FALSE
    for cid, arcs in zip(f.classes, f.groups()):
        print(f"{cid}: " + ", ".join(f"{u}->{v}" for u, v in arcs))
    return OK


def cmd_class_digraph(args) -> int:
    doc = load(args.file)
    f = _partition(doc)
    if isinstance(f, NoPartition):
        print("no H-class partition")
        print(f.explain())
        return FALSE
    g = class_digraph(doc.colored, f).underlying
    if args.dot:
        sys.stdout.write(to_dot(g, "C_F"))
    else:
        print("classes: " + ", ".join(g.vertices))
        for u, v in g.sorted_arcs():
            print(f"{u} -> {v}")
    return OK


def cmd_analyze(args) -> int:
    doc = load(args.file)
    if doc.partition is not None:
        _partition(doc)
    report = analyze(doc.colored, doc.partition)
    if args.format == "json":
        print(json.dumps(report.as_dict(), indent=2, sort_keys=True))
    else:
        print(render_text(report))
    return OK


def cmd_kernel(args) -> int:
    doc = load(args.file)
    if doc.partition is not None and args.method not in ("thm35", "classlema", "brute"):
        _partition(doc)
    try:
        cert = construct(args.method, doc.colored, doc.partition, k=args.k, l=args.l, class_kernel=args.class_kernel)
    except PartitionUnavailable as exc:
        print("no H-class partition", file=sys.stderr)
        print(exc.reason.explain(), file=sys.stderr)
        return FALSE
    except HypothesisFailure as exc:
        print(f"hypothesis failure: {exc}", file=sys.stderr)
        return FALSE
    except ClassKernelNotFound as exc:
        print(f"not found: {exc}", file=sys.stderr)
        return FALSE
    except VerificationFailed as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return FALSE
    except ValueError as exc:
        raise InputError(str(exc)) from None
    data = emit_certificate(cert, instance_digest(doc))
    if args.out:
        Path(args.out).write_bytes(data)
        print(f"wrote {args.out}: {cert.theorem} ({cert.k},{cert.l}) kernel {cert.sorted_kernel()}")
    else:
        sys.stdout.write(data.decode("utf-8"))
    return OK


def cmd_verify(args) -> int:
    doc = load(args.file)
    names = [p.strip() for p in args.set.split(",") if p.strip()]
    s = _vertex_lookup(doc, names)
    if args.k < 2 or args.l < 1:
        raise InputError("need --k >= 2 and --l >= 1")
    verdict = verify_klh_kernel(doc.colored, s, args.k, args.l)
    if verdict:
        print(f"true: {{{', '.join(names)}}} is a ({args.k},{args.l},H)-kernel by walks")
        return OK
    w = dict(verdict.witness)
    w["h_length"] = fmt_length(w["h_length"])
    print(f"false: {verdict.reason} fails: {json.dumps(w, default=str)}")
    return FALSE


def cmd_fixtures(args) -> int:
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, fx in fixtures().items():
        target = out / f"{name}.json"
        target.write_bytes(emit_instance(InstanceDocument(fx.colored, fx.partition, fx.metadata)))
        print(target)
    return OK


def cmd_gen(args) -> int:
    gen = generate(args.family, args.seed, args.size)
    meta = {"name": f"{args.family}-{args.seed}-{args.size}", "provenance": "generated", "family": args.family, "seed": args.seed, "size": args.size}
    data = emit_instance(InstanceDocument(gen.colored, gen.partition, meta))
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hkernels", description="(k,l,H)-kernels by walks in H-colored digraphs")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("file", help="instance JSON path or fixture name")
        sp.set_defaults(fn=fn)
        return sp

    with_file("validate", cmd_validate, "parse and check an instance")
    with_file("partition", cmd_partition, "print the H-class partition")
    sp = with_file("class-digraph", cmd_class_digraph, "print C_F(D)")
    sp.add_argument("--dot", action="store_true", help="emit DOT text")
    sp = with_file("analyze", cmd_analyze, "theorem applicability report")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp = with_file("kernel", cmd_kernel, "construct a certified kernel")
    sp.add_argument("--method", required=True, choices=THEOREMS + tuple(THEOREM_ALIASES))
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--l", type=int, default=None)
    sp.add_argument("--class-kernel", default=None, help="comma-separated class ids, e.g. F6,F9")
    sp.add_argument("--out", default=None, help="write the certificate here instead of stdout")
    sp = with_file("verify", cmd_verify, "check a vertex set with the oracle")
    sp.add_argument("--set", required=True, help="comma-separated vertex ids")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)

    fx = sub.add_parser("fixtures", help="built-in fixtures")
    fx_sub = fx.add_subparsers(dest="action", required=True)
    emit = fx_sub.add_parser("emit", help="write every fixture as JSON")
    emit.add_argument("dir")
    emit.set_defaults(fn=cmd_fixtures)

    gen = sub.add_parser("gen", help="reproducible random instance")
    gen.add_argument("--family", required=True, choices=FAMILIES)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--size", type=int, default=3)
    gen.add_argument("--out", default=None)
    gen.set_defaults(fn=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
