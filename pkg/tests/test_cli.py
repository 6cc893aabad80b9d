import io
import json

import pytest

from conftest import F_CYC3, F_MIX
from relorder.cli import run_command
from relorder.formats import parse_relation, serialize


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out=out, err=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


MIX = serialize(F_MIX)


def test_solve_mix_json():
    code, out, _ = run(["solve", "--json", "-"], MIX)
    report = json.loads(out)
    assert code == 0
    assert report["schwartz_gocha"] == ["c"]
    assert report["schwartz_strict"] == ["a", "c"]
    assert report["deb"]["strict_violations"] == 0


def test_solve_text():
    code, out, _ = run(["solve", "-"], MIX)
    assert code == 0
    assert "schwartz gocha: {c}" in out and "schwartz strict: {a, c}" in out


def test_verify_exhaustive_small():
    code, out, _ = run(["verify", "--nmax", "3", "--count", "0"])
    assert code == 0
    assert "0 violations" in out and "n=3: 512 instances" in out


def test_malformed_input_exit_2():
    code, _, err = run(["props", "-"], "a\n")
    assert code == 2 and "line 1" in err


def test_unknown_flag_exit_2():
    code, _, err = run(["props", "--frobnicate", "-"])
    assert code == 2 and "usage:" in err


def test_missing_file_exit_2(tmp_path):
    code, _, _ = run(["props", str(tmp_path / "nope.txt")])
    assert code == 2


def test_props(tmp_path):
    path = tmp_path / "cyc.txt"
    path.write_text(serialize(F_CYC3))
    code, out, _ = run(["props", "--json", str(path)])
    d = json.loads(out)
    assert code == 0 and d["transitive"] is False
    assert d["witness"]["transitive"] == [["a", "b"], ["b", "c"], ["a", "c"]]


def test_json_input_by_extension(tmp_path):
    path = tmp_path / "mix.json"
    path.write_text(serialize(F_MIX, "json"))
    code, out, _ = run(["closure", str(path)])
    assert code == 0
    closed = parse_relation(out)
    assert ("c", "a") in closed.label_pairs()


def test_quotient_outputs():
    code, out, _ = run(["quotient", "--json", "-"], MIX)
    assert json.loads(out) == {"classes": [["a", "b"], ["c"]], "order": [[0, 0], [1, 0], [1, 1]]}
    code, out, _ = run(["quotient", "--dot", "-"], MIX)
    assert code == 0 and "c1 -> c0;" in out


@pytest.mark.parametrize("mode", ["check-hypothesis", "extend-chain", "find-top-cycle", "verify-theorem"])
def test_zorn_modes_emit_json(mode):
    code, out, _ = run(["zorn", mode, "-"], serialize(F_CYC3))
    assert code == 0
    json.loads(out)


def test_zorn_traces():
    _, out, _ = run(["zorn", "extend-chain", "-"], serialize(F_CYC3))
    assert json.loads(out)["terminal_chain"] == ["a", "c"]
    _, out, _ = run(["zorn", "check-hypothesis", "-"], serialize(F_CYC3))
    assert json.loads(out) == {"hypothesis": False, "witness": ["a", "b"]}
    _, out, _ = run(["zorn", "find-top-cycle", "-"], serialize(F_CYC3))
    assert json.loads(out)["extracted"] == ["a", "b", "c"]


def test_zorn_guard_exit_2():
    big = "elements: " + " ".join(f"v{i}" for i in range(25)) + "\n"
    code, _, err = run(["zorn", "check-hypothesis", "-"], big)
    assert code == 2 and "guard" in err


def test_random_is_reproducible():
    argv = ["random", "--n", "12", "--density", "0.2", "--seed", "99"]
    _, first, _ = run(argv)
    _, second, _ = run(argv)
    assert first == second
    assert first.splitlines()[0].startswith("elements: x0 x1")
    assert parse_relation(first).n == 12


def test_random_partial_order_and_json():
    code, out, _ = run(["random", "--n", "5", "--density", "0.5", "--seed", "1", "--partial-order", "--out-format", "json"])
    assert code == 0
    assert ["x0", "x0"] in json.loads(out)["pairs"]


def test_verify_reports_violations(monkeypatch):
    import relorder.sweep as sweep

    monkeypatch.setattr(sweep, "check_instance", lambda r, checks: [("closure", "forced")] if r.n == 1 else [])
    code, out, _ = run(["verify", "--nmax", "1", "--count", "0"])
    assert code == 1 and "VIOLATION closure" in out
