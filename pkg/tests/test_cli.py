"""Command-line interface: subcommands, formats, exit codes."""

import io
import json

import pytest

from hypmin import cli


def _run(argv, stdin=None, capsys=None):
    if stdin is not None:
        import sys

        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
        try:
            code = cli.run(argv)
        finally:
            sys.stdin = old
    else:
        code = cli.run(argv)
    out = capsys.readouterr().out if capsys else ""
    return code, out


def test_disc_json(capsys):
    code, out = _run(
        ["disc", "--genus", "1", "--q", "", "--p", "1,0,0,1"], capsys=capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["disc"]["sign"] == -1
    assert doc["disc"]["factors"] == [[2, 4], [3, 3]]
    assert doc["disc"]["cofactor"] == 1


def test_minimize_paper(capsys):
    code, out = _run(
        ["minimize", "--genus", "2", "--q", "2288", "--p", "0,0,0,0,0,76765625"],
        capsys=capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["disc"]["factors"] == [[2, 12], [5, 11], [11, 8], [13, 8], [17, 8]]
    assert [r["prime"] for r in doc["reports"]] == [2, 5, 11, 13, 17]


def test_minimize_pointed_stdin(capsys):
    payload = json.dumps({"genus": 1, "q": [], "p": [15625, 0, 0, 1]})
    code, out = _run(
        ["minimize", "--pointed", "--stdin"], stdin=payload, capsys=capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["p"] == [1, 0, 0, 1]
    assert doc["change"]["matrix"] == [25, 0, 0, 1]


def test_check_minimal(capsys):
    code, out = _run(
        ["check", "--prime", "5", "--genus", "1", "--q", "", "--p", "1,0,0,1"],
        capsys=capsys,
    )
    assert code == 0
    assert json.loads(out)["status"] == "minimal"


def test_check_not_minimal(capsys):
    code, out = _run(
        ["check", "--prime", "5", "--genus", "1", "--q", "", "--p", "15625,0,0,1"],
        capsys=capsys,
    )
    assert code == 0
    assert json.loads(out)["status"] == "not-minimal"


def test_verify(capsys):
    code, out = _run(
        ["verify", "--prime", "5", "--genus", "1", "--q", "", "--p", "15625,0,0,1"],
        capsys=capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["agree"] and doc["v_minimize"] == 0


def test_invalid_curve_exit_code(capsys):
    code, _ = _run(
        ["disc", "--genus", "1", "--q", "", "--p", "0,0,0,1"], capsys=capsys
    )
    assert code == 2


def test_roundtrip_minimized_output(capsys):
    code, out = _run(
        ["minimize", "--genus", "1", "--q", "", "--p", "15625,0,0,1"], capsys=capsys
    )
    doc = json.loads(out)
    payload = json.dumps({"genus": doc["genus"], "q": doc["q"], "p": doc["p"]})
    code2, out2 = _run(["minimize", "--stdin"], stdin=payload, capsys=capsys)
    assert code2 == 0
    doc2 = json.loads(out2)
    assert doc2["disc"]["factors"] == doc["disc"]["factors"]
    det = (
        doc2["change"]["matrix"][0] * doc2["change"]["matrix"][3]
        - doc2["change"]["matrix"][1] * doc2["change"]["matrix"][2]
    )
    g = doc2["genus"]
    # an identity-equivalent change leaves the discriminant untouched
    assert det ** (2 * (g + 1) * (2 * g + 1)) == doc2["change"]["e"] ** (
        4 * (2 * g + 1)
    )


def test_text_format_contains_numbers(capsys):
    code, out = _run(
        ["disc", "--genus", "1", "--q", "", "--p", "1,0,0,1", "--format", "text"],
        capsys=capsys,
    )
    assert code == 0
    assert "sign: -1" in out and "cofactor: 1" in out
