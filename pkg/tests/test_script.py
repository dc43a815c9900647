import json
from pathlib import Path

import pytest

from dualform.errors import ArityError, ScriptError, UndefinedNameError
from dualform.script import execute_script, parse_literal, parse_script, run_text, tokenize

EXAMPLES = Path(__file__).resolve().parents[1] / "docs" / "examples"

PARITY = """\
group Z4 cyclic 4
group Z2 cyclic 2
hom f : Z4 -> Z2 map 0 1 0 1
zigzag F = f fwd
zigzag B = f bwd
induce F
induce B
"""


def test_tokens_carry_columns():
    toks = tokenize("hom f : A -> B map 0 1", 3)
    assert [t.text for t in toks] == ["hom", "f", ":", "A", "->", "B", "map", "0", "1"]
    assert toks[4].column == 11


def test_literals_are_sorted_and_unique():
    (tok,) = tokenize("{4, 0,2,0}", 1)
    assert parse_literal(tok, 1) == (0, 2, 4)
    (empty,) = tokenize("{}", 1)
    assert parse_literal(empty, 1) == ()


def test_parse_statement_kinds():
    script = parse_script(PARITY + "sub K = ker f\nhom g = compose f f\n# comment only\n\n")
    kinds = [st.kind for st in script.statements]
    assert kinds == ["group", "group", "hom", "zigzag", "zigzag", "induce", "induce", "subdef", "homdef"]
    assert script.statements[2].line == 3


def test_round_trip():
    text = PARITY + "sub E of Z4 = {2, 0}\nscope SC = Z4, Z2 homs f\nverify axioms SC\ndualize on\n"
    script = parse_script(text)
    assert parse_script(script.pretty()) == script
    assert "sub E of Z4 = {0,2}" in script.pretty()


@pytest.mark.parametrize("path", sorted(EXAMPLES.glob("*.ds")), ids=lambda p: p.stem)
def test_examples_round_trip(path):
    script = parse_script(path.read_text())
    assert parse_script(script.pretty()) == script


@pytest.mark.parametrize(
    "text, error, line, column",
    [
        ("group G cyclic 4\nhom f : G -> H map 0\n", UndefinedNameError, 2, 14),
        ("group G cyclic\n", ArityError, 1, 15),
        ("induce Z\n", UndefinedNameError, 1, 8),
        ("group G cyclic 4\nsub S of G = {0,2\n", ScriptError, 2, 14),
        ("frobnicate\n", ScriptError, 1, 1),
    ],
)
def test_parse_errors_point_at_the_token(text, error, line, column):
    with pytest.raises(error) as info:
        parse_script(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_parse_error_exit_code():
    code, out = run_text("frobnicate\n")
    assert code == 2
    assert out == "[1] \nFAIL syntax: line 1, column 1: unknown statement 'frobnicate'\n"


def test_parity_records():
    code, records = execute_script(parse_script(PARITY))
    assert code == 1
    assert [r.line for r in records] == [6, 7]
    assert records[0].ok and "induced: map [0 1 0 1] : Z4 -> Z2" in records[0].output
    assert records[1].verdict() == "FAIL not-inducible: forward chase of 1 = {0,2}"


def test_empty_script():
    assert run_text("") == (0, "")
    assert run_text("# nothing\n\n") == (0, "")


def test_runtime_errors_are_records():
    code, out = run_text("group G cyclic 4\nsub S of G = {0,1}\n")
    assert code == 1
    assert out.endswith("FAIL invalid-subobject: {0,1} is not a subgroup of G\n")


def test_json_lines():
    code, out = run_text(PARITY, fmt="json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["status"] for r in rows] == ["ok", "fail"]
    assert rows[1]["code"] == "not-inducible"
    assert set(rows[0]) == {"line", "statement", "status", "code", "message", "output"}


def test_fail_fast_stops_at_first_failure():
    text = PARITY + "induce F\n"
    _, slow = execute_script(parse_script(text))
    _, fast = execute_script(parse_script(text), fail_fast=True)
    assert len(slow) == 3 and len(fast) == 2


def test_dual_reading_reverses_maps():
    text = "dualize on\n" + PARITY
    code, records = execute_script(parse_script(text))
    assert records[0].output == ["reading: dual"]
    assert "induced: op map [0 1 0 1] : Z2 -> Z4" in records[1].output
    assert records[2].verdict() == "FAIL not-inducible: backward chase of top = {0,2}"
    assert code == 1


def test_verify_reports_theorem_verdict():
    text = (
        "group G catalog S3\n"
        "sub A of G = {0,4,5}\n"
        "sub B of G = {0,1}\n"
        "verify diamond G A B\n"
        "verify diamond G {0,1} {0,2}\n"
    )
    code, records = execute_script(parse_script(text))
    assert records[0].ok and records[0].output[-1] == "verdict: pass"
    assert records[1].verdict() == "FAIL hypothesis-violation: diamond: hypothesis A <| AvB fails"


def test_verify_axioms_on_a_builtin_scope():
    code, records = execute_script(parse_script("verify axioms ring-standard\n"))
    assert code == 0 and records[0].output[0] == "model: Ring"
    assert any(line.startswith("axiom 1.1: ok") for line in records[0].output)


@pytest.mark.parametrize("path", sorted(EXAMPLES.glob("*.ds")), ids=lambda p: p.stem)
def test_examples_match_golden_output(path):
    _, out = run_text(path.read_text())
    assert out == path.with_suffix(".out").read_text()
