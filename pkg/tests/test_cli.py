import io
import json
import subprocess
import sys

import pytest

from lpkit.cli import run
from lpkit.serialize import array_from_json
from test_acceptance import FIXTURES, GOLDEN, GOLDEN_CASES, golden_text


def call(argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        old, sys.stdin = sys.stdin, io.StringIO(stdin)
    try:
        status = run(argv, stdout=out, stderr=err)
    finally:
        if stdin is not None:
            sys.stdin = old
    return status, json.loads(out.getvalue()), err.getvalue()


def fx(name):
    return str(FIXTURES / name)


@pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden(name, argv):
    expected = (GOLDEN / f"{name}.txt").read_text(encoding="utf-8")
    assert golden_text(name, argv) == expected
    assert golden_text(name, argv) == expected


def test_every_command_has_a_golden_case():
    commands = {argv[0] for _, argv in GOLDEN_CASES}
    assert commands == {"validate", "classify", "d4", "end", "reconstruct", "family", "complete", "oracle"}


def test_exit_codes():
    assert call(["validate", fx("k3.json")])[0] == 0
    status, doc, _ = call(["validate", fx("k3_bad.json")])
    assert status == 1 and doc["valid"] is False
    status, doc, err = call(["reconstruct", "--trace", fx("gf13_degenerate_ends.json")])
    assert status == 2 and doc["error"]["kind"] == "DegenerateDelta"
    assert "DegenerateDelta" in err


def test_every_document_is_versioned():
    for argv in (["validate", fx("k3.json")], ["end", fx("k3.json")], ["classify", fx("nope.json")]):
        assert call(argv)[1]["lpkit_schema"] == 1


@pytest.mark.parametrize("argv", [
    ["validate", "--bogus", "k3.json"],
    ["frobnicate", "k3.json"],
    ["d4", "k3.json"],
    ["d4", "--word", "x", "k3.json"],
    ["family", "--case", "II", "--sweep", "k3.json"],
    ["family", "--case", "I", "--zeta", "[1]", "--sweep", "k3.json"],
    ["classify", "missing.json"],
])
def test_malformed_invocations(argv):
    argv = [fx(a) if a.endswith(".json") else a for a in argv]
    status, doc, err = call(argv)
    assert status == 2
    assert doc["error"]["kind"] == "ParseError"
    assert err


@pytest.mark.parametrize("text,kind", [
    ("{", "ParseError"),
    ("[]", "ParseError"),
    ('{"lpkit_schema": 2}', "ParseError"),
    ('{"field": {"kind": "Q"}, "d": 3, "theta": ["1"], "theta_star": [], "varphi": [], "phi": []}',
     "ParseError"),
    ('{"field": {"kind": "GF", "p": 12, "k": 1}, "d": 1, "theta": ["1","2"], "theta_star": ["1","2"],'
     ' "varphi": ["1"], "phi": ["1"]}', None),
])
def test_bad_documents_on_stdin(text, kind):
    status, doc, _ = call(["validate", "-"], stdin=text)
    assert status == 2
    assert "error" in doc
    if kind:
        assert doc["error"]["kind"] == kind


def test_classify_small_diameter():
    text = json.dumps({"field": {"kind": "Q"}, "d": 2, "theta": ["1", "0", "-1"],
                       "theta_star": ["1", "0", "-1"], "varphi": ["1", "1"], "phi": ["1", "1"]})
    status, doc, _ = call(["classify", "-"], stdin=text)
    assert status == 2 and doc["error"]["kind"] in ("DiameterTooSmall", "InvalidArray")


def test_pipeline_composability():
    for argv in (["d4", "--word", "sdD", fx("gf13_typeI.json")],
                 ["complete", "--phi1", "[4]", fx("gf13_seed.json")],
                 ["family", "--case", "I", "--zeta", "[3]", fx("gf13_degenerate.json")]):
        status, doc, _ = call(argv)
        assert status == 0
        text = json.dumps(doc)
        for follow in ("validate", "end", "oracle"):
            s2, doc2, _ = call([follow, "-"], stdin=text)
            assert s2 == 0, (argv, follow, doc2)
        assert array_from_json(doc).d == doc["d"]


def test_family_accepts_end_entry_base():
    _, ends_doc, _ = call(["end", fx("gf13_degenerate.json")])
    base = {"field": {"kind": "GF", "p": 13, "k": 1, "modulus": [0, 1]}, "d": 3, "q": "[5]",
            "ends": ends_doc["end_entries"]}
    status, doc, _ = call(["family", "--case", "I", "--sweep", "-"], stdin=json.dumps(base))
    assert status == 0 and doc["n_valid"] == 8 and doc["bound"] == 24
    _, direct, _ = call(["family", "--case", "I", "--sweep", fx("gf13_degenerate.json")])
    assert doc == direct


def test_wrong_family_case():
    status, doc, _ = call(["family", "--case", "IV", "--sweep", fx("gf13_degenerate.json")])
    assert status == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lpkit", "validate", fx("k3.json")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["valid"] is True
    assert proc.stdout == (GOLDEN / "validate_k3.txt").read_text().split("\n", 1)[1]
