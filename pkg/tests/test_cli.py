import json
import os
import subprocess
import sys
from importlib.resources import files
from io import StringIO

import jsonschema
import pytest

from irredcomp.cli import main

SCHEMA = json.loads((files("irredcomp") / "schemas" / "report.schema.json").read_text())


def run(*argv):
    out = StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_theorem3_degree93():
    code, text = run("construct", "theorem3", "--field", "GF(2)", "--f", "x^3+x+1", "--l", "x^5+x^4+x^2+x+1")
    assert code == 0 and "degree: 93" in text


def test_varshamov_ok():
    code, text = run("construct", "varshamov", "--field", "GF(2)", "--f", "x^3+x+1", "--r", "3", "--format", "json")
    d = json.loads(text)
    assert code == 0
    assert d["output"]["poly"] == "x^6 + x^4 + x^2 + x + 1" and d["output"]["order"] == 21


def test_varshamov_gcd_precondition(capsys):
    code, _ = run("construct", "varshamov", "--field", "GF(2)", "--f", "x^2+x+1", "--r", "3")
    assert code == 2 and "gcd" in capsys.readouterr().err


def test_verify_examples():
    code, text = run("verify", "--field", "GF(2)", "--poly", "x^2+x+1", "--order")
    assert code == 0 and "irreducible" in text and "order: 3" in text and "primitive: True" in text
    code, text = run("verify", "--field", "GF(2)", "--poly", "x^4+x^2+1")
    assert code == 3 and "reducible" in text
    code, text = run("verify", "--field", "GF(3)", "--poly", "x^2+1", "--order", "--format", "json")
    d = json.loads(text)
    assert code == 0 and d["irreducible"] and d["order"] == 4 and d["primitive"] is False


def test_verify_oracle():
    code, text = run("verify", "--field", "GF(2)", "--poly", "x^6+x^4+x^2+x+1", "--verify", "oracle", "--format", "json")
    assert code == 0 and json.loads(text)["oracle"] is True


def test_enumerate_examples():
    code, text = run("enumerate", "--field", "GF(2)", "--degree", "2")
    assert code == 0 and text.splitlines() == ["x^2 + x + 1"]
    code, text = run("enumerate", "--field", "GF(2)", "--degree", "3", "--primitive")
    assert text.splitlines() == ["x^3 + x + 1", "x^3 + x^2 + 1"]
    code, text = run("enumerate", "--field", "GF(2)", "--degree", "4", "--check-mobius", "--format", "json")
    d = json.loads(text)
    assert code == 0 and d["count"] == 3 and d["mobius_ok"]


def test_enumerate_exps_format():
    code, text = run("enumerate", "--field", "GF(2)", "--degree", "3", "--format", "exps")
    assert text.splitlines() == ["exps:[3,1,0]", "exps:[3,2,0]"]


CASES = [
    (["theorem1", "--field", "GF(2)", "--f", "x^2+x+1", "--k", "3", "--alpha", "1", "--beta", "y"], 0),
    (["cohen", "--field", "GF(2)", "--P", "x^2+x+1", "--f", "x^2+x", "--g", "1"], 0),
    (["cohen", "--field", "GF(2)", "--P", "x^2+x+1", "--f", "x^2", "--g", "1"], 2),
    (["ogm", "--field", "GF(2)", "--l", "x^2+x+1"], 0),
    (["ogm", "--field", "GF(3)", "--l", "x^2+1"], 2),
    (["cor-theta", "--field", "GF(3)", "--f", "x^3+2x+2", "--theta", "2"], 0),
    (["cor-ci", "--field", "GF(2)", "--f", "x^3+x+1", "--l", "x^5+x^4+x^2+x+1"], 0),
    (["cor-ci", "--field", "GF(2)", "--f", "x^5+x^2+1", "--l", "x^3+x+1"], 2),
    (["theorem5", "--field", "GF(2)", "--f", "x^2+x+1", "--beta", "1", "--gamma", "0"], 0),
    (["theorem8", "--field", "GF(2)", "--f", "x^4+x+1", "--e", "3"], 0),
    (["theorem8", "--field", "GF(2)", "--f", "x^4+x+1"], 0),
    (["theorem8", "--field", "GF(2)", "--f", "x^4+x+1", "--e", "1"], 2),
    (["theorem10", "--field", "GF(2)", "--f", "x^2+x+1"], 0),
    (["theorem11", "--field", "GF(2)", "--f", "x^2+x+1", "--verify", "oracle"], 0),
    (["theorem11", "--field", "GF(3)", "--f", "x^2+x+2"], 3),
    (["theorem3", "--field", "GF(2)", "--f", "x^2+x+1", "--l", "x^4+x^3+x^2+x+1"], 2),
]


@pytest.mark.parametrize("argv,expected", CASES, ids=lambda v: " ".join(v) if isinstance(v, list) else str(v))
def test_construct_exit_codes_and_schema(argv, expected):
    code, text = run("construct", *argv, "--format", "json")
    assert code == expected
    if text:
        d = json.loads(text)
        jsonschema.validate(d, SCHEMA)
        assert (d["status"] == "ok") == (code == 0)


@pytest.mark.parametrize("argv,expected", CASES, ids=lambda v: " ".join(v) if isinstance(v, list) else str(v))
def test_text_and_json_describe_same_poly(argv, expected):
    _, js = run("construct", *argv, "--format", "json")
    _, text = run("construct", *argv, "--format", "text")
    if js:
        poly = json.loads(js)["output"]["poly"]
        if poly is not None:
            assert f"F: {poly}" in text


def test_failed_verification_still_prints_report():
    code, text = run("construct", "theorem11", "--field", "GF(3)", "--f", "x^2+x+2", "--format", "json")
    d = json.loads(text)
    assert code == 3 and d["status"] == "verification-failed" and d["checks"]["irreducible"] is False


def test_exps_falls_back_to_text_in_odd_characteristic():
    code, text = run("construct", "cor-theta", "--field", "GF(3)", "--f", "x^3+2x+2", "--theta", "2", "--format", "exps")
    assert code == 0 and text.strip() == "x^6 + x^4 + x^3 + x^2 + 2x + 2"


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        main(["construct", "nosuch", "--field", "GF(2)"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["verify", "--poly", "x"])
    assert info.value.code == 1
    assert run("construct", "varshamov", "--field", "GF(2)", "--f", "x^3+x+1")[0] == 1
    assert run("verify", "--field", "GF(2)", "--poly", "x", "--trial-bound", "1")[0] == 1


def test_parse_errors_exit_1(capsys):
    assert run("verify", "--field", "GF(2)", "--poly", "2x^2 + x")[0] == 1
    assert "position" in capsys.readouterr().err
    assert run("verify", "--field", "F(2)", "--poly", "x")[0] == 1


def test_bad_field_is_precondition():
    assert run("verify", "--field", "GF(6)", "--poly", "x")[0] == 2


def test_trial_bound_flag_is_scoped_to_the_run(monkeypatch):
    monkeypatch.delenv("GALOIS_TRIAL_BOUND", raising=False)
    code, text = run("construct", "varshamov", "--field", "GF(2)", "--f", "x^5+x^2+1", "--r", "3",
                     "--trial-bound", "2", "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(text), SCHEMA)
    assert "GALOIS_TRIAL_BOUND" not in os.environ


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "irredcomp", "verify", "--field", "GF(2)", "--poly", "x^2+x+1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "irreducible" in proc.stdout
