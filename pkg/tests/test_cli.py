"""Command-line surface and exit codes."""
import json

import pytest

from hkernels.cli import FALSE, INPUT_ERROR, OK, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_two_blob(capsys):
    code, out, _ = run(capsys, "verify", "two-blob", "--set", "z", "--k", "4", "--l", "3")
    assert code == OK and out.startswith("true")
    code, out, _ = run(capsys, "verify", "two-blob", "--set", "z", "--k", "2", "--l", "1")
    assert code == FALSE and "absorbency" in out
    assert run(capsys, "verify", "two-blob", "--set", "q", "--k", "2", "--l", "1")[0] == INPUT_ERROR


def test_kernel_on_conflict_triangle(capsys):
    code, _, err = run(capsys, "kernel", "conflict-triangle", "--method", "thm55", "--k", "2")
    assert code == FALSE and "no H-class partition" in err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "fig2-style", "--format", "json")
    assert code == OK and json.loads(out)["walk_preservative"] is False
    code, out, _ = run(capsys, "analyze", "two-blob")
    assert code == OK and "prop44" in out


def test_kernel_certificate_reverifies(capsys, tmp_path):
    cert_path = tmp_path / "cert.json"
    code, _, _ = run(capsys, "kernel", "two-blob", "--method", "prop44", "--k", "3", "--l", "2", "--out", str(cert_path))
    assert code == OK
    cert = json.loads(cert_path.read_text())
    code, _, _ = run(capsys, "verify", "two-blob", "--set", ",".join(cert["kernel"]), "--k", str(cert["k"]), "--l", str(cert["l"]))
    assert code == OK
    again = tmp_path / "again.json"
    run(capsys, "kernel", "two-blob", "--method", "prop44", "--k", "3", "--l", "2", "--out", str(again))
    assert again.read_bytes() == cert_path.read_bytes()


def test_kernel_refusals(capsys):
    code, _, err = run(capsys, "kernel", "fig2-style", "--method", "prop42", "--l", "4")
    assert code == FALSE and "hypothesis" in err
    assert run(capsys, "kernel", "two-blob", "--method", "prop43", "--k", "2")[0] == INPUT_ERROR
    assert run(capsys, "kernel", "two-blob", "--method", "bogus")[0] == INPUT_ERROR


def test_partition_and_class_digraph(capsys):
    code, out, _ = run(capsys, "partition", "two-blob")
    assert code == OK and out.startswith("F1:")
    assert run(capsys, "partition", "conflict-triangle")[0] == FALSE
    code, out, _ = run(capsys, "class-digraph", "two-blob", "--dot")
    assert code == OK and '"F1" -> "F2";' in out


def test_fixtures_emit_and_validate(capsys, tmp_path):
    code, out, _ = run(capsys, "fixtures", "emit", str(tmp_path))
    assert code == OK
    paths = sorted(tmp_path.glob("*.json"))
    assert len(paths) == len(out.split())
    for p in paths:
        assert run(capsys, "validate", str(p))[0] == OK


def test_validate_errors(capsys, tmp_path):
    bad = tmp_path / "loop.json"
    bad.write_text(json.dumps({
        "pattern": {"colors": [1], "arcs": []},
        "digraph": {"vertices": ["a"], "arcs": [{"from": "a", "to": "a", "color": 1}]},
    }))
    code, _, err = run(capsys, "validate", str(bad))
    assert code == INPUT_ERROR and "loop" in err
    assert run(capsys, "validate", str(tmp_path / "missing.json"))[0] == INPUT_ERROR


@pytest.mark.parametrize("family", ["blobs", "symmetric-classes", "random"])
def test_gen_is_reproducible(capsys, tmp_path, family):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "gen", "--family", family, "--seed", "7", "--size", "3", "--out", str(a))[0] == OK
    assert run(capsys, "gen", "--family", family, "--seed", "7", "--size", "3", "--out", str(b))[0] == OK
    assert a.read_bytes() == b.read_bytes()
    assert run(capsys, "validate", str(a))[0] == OK
