import io
import json
import subprocess
import sys

import pytest

from neutral_ricci import cli

ZERO = {"tetrad": "null", "components": [[0] * 4 for _ in range(4)]}


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    args = cli.build_parser().parse_args(argv)
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = args.func(args, out=out)
    return code, out.getvalue()


def write(tmp_path, doc, name="in.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc), encoding="utf-8")
    return str(p)


def test_classify_zero_document(tmp_path):
    code, out = run(["classify", write(tmp_path, ZERO)])
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == cli.REPORT_SCHEMA
    assert rep["reports"][0]["symbol"] == "[-]x[-] [4R^nst]^4_(1)"


def test_generate_then_classify_type_four(tmp_path):
    code, out = run(["generate", "--type", "IV.a"])
    assert code == 0
    doc = json.loads(out)
    assert doc["components"][0][0] == "1" and doc["components"][1][3] == doc["components"][3][1] == "1"
    code, out = run(["classify", write(tmp_path, doc), "--format", "text"])
    assert code == 0
    assert "[N]_r x [III]_r [4R^n]^1_(4)" in out


def test_non_traceless_exits_2(tmp_path, capsys):
    doc = {"components": [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]}
    code, out = run(["classify", write(tmp_path, doc)])
    assert code == 2
    assert json.loads(out)["reports"][0]["error"] == "TraceViolation"


def test_bad_inputs_exit_2(tmp_path):
    assert run(["classify", str(tmp_path / "missing.json")])[0] == 2
    p = tmp_path / "junk.json"
    p.write_text("{not json", encoding="utf-8")
    assert run(["classify", str(p)])[0] == 2
    assert run(["classify", write(tmp_path, {"components": [["x", 0, 0, 0]] * 4})])[0] == 2
    assert run(["classify", write(tmp_path, {"tetrad": "polar", "components": ZERO["components"]})])[0] == 2


def test_inconsistency_exits_3(monkeypatch, tmp_path):
    from neutral_ricci.errors import InconsistentPattern

    def boom(*a, **k):
        raise InconsistentPattern("forced", stage="spectral")

    monkeypatch.setattr(cli, "classify", boom)
    assert run(["classify", write(tmp_path, ZERO)])[0] == 3


def test_generate_random_parent():
    code, out = run(["generate", "--type", "I_r", "--seed", "7"])
    assert code == 0
    doc = json.loads(out)
    vals = [json.loads(json.dumps(v)) for v in doc["parameters"].values()]
    from fractions import Fraction

    nums = [Fraction(v) for v in vals]
    assert sum(nums) == 0 and len(set(nums)) == 4
    assert doc["registry"]["code"] in ("I_r.1", "I_r.2")


def test_generate_rejects_degenerate_parent_params():
    assert run(["generate", "--type", "I_r", "--params", "1,1,−1,−1"])[0] == 2
    assert run(["generate", "--type", "I_r.6", "--params", "1,1,-1,-1"])[0] == 0
    assert run(["generate", "--type", "I_r", "--params", "1,2,3,4"])[0] == 2
    assert run(["generate", "--type", "I_r.1", "--params", "1,-3,2,0"])[0] == 2


def test_generate_unknown_type_is_invalid():
    assert run(["generate", "--type", "V.1"])[0] == 2
    assert run(["generate", "--type", "99"])[0] == 2


def test_generate_orthonormal_and_count():
    code, out = run(["generate", "--type", "II_r.2", "--seed", "3", "--count", "3", "--tetrad", "orthonormal"])
    assert code == 0
    docs = json.loads(out)
    assert len(docs) == 3 and all(d["tetrad"] == "orthonormal" for d in docs)


def test_stdin_and_lists(monkeypatch):
    docs = [ZERO, {"tetrad": "null", "components": [["1", 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 1, 0, 0]]}]
    code, out = run(["classify", "-"], stdin=json.dumps(docs), monkeypatch=monkeypatch)
    rep = json.loads(out)
    assert code == 0 and [r["registry"]["code"] for r in rep["reports"]] == ["I_r.10", "IV.1"]


def test_float_document_reports_mode(tmp_path):
    doc = {"components": [[0.5, 0.25, 0, 0], [0.25, 0, 0, 0], [0, 0, 0, -0.25], [0, 0, -0.25, 0]]}
    code, out = run(["classify", write(tmp_path, doc)])
    rec = json.loads(out)["reports"][0]
    assert code == 0 and rec["mode"] == "float" and rec["warnings"]


def test_json_output_is_byte_stable(tmp_path):
    _, doc = run(["generate", "--type", "I_c.2", "--seed", "11"])
    path = write(tmp_path, json.loads(doc))
    outs = {run(["classify", path])[1] for _ in range(3)}
    assert len(outs) == 1


def test_selftest_quick():
    code, out = run(["selftest", "--quick"])
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["failures"] == []


def test_module_entry_point(tmp_path):
    path = write(tmp_path, ZERO)
    proc = subprocess.run([sys.executable, "-m", "neutral_ricci", "classify", path, "--format", "text"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "I_r.10" in proc.stdout
