import io
import json
from pathlib import Path

import pytest

from herzogfp.cli.main import run
from herzogfp.cli.parsing import (
    parse_input_document,
    parse_order_spec,
    parse_polynomial,
    parse_substitution,
    read_order,
    read_substitution,
)
from herzogfp.core.fields import GF, QQ
from herzogfp.core.order import degrevlex, lex
from herzogfp.core.polynomial import variables
from herzogfp.corpus import case1_change_of_variables, case1_order, e6_order, fermat_change_of_variables, fermat_transformed
from herzogfp.errors import ParseError

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    lines = [json.loads(l) for l in out.getvalue().splitlines() if l.startswith("{")]
    return code, lines, out.getvalue(), err.getvalue()


# ---- parsing ----------------------------------------------------------------


def test_parse_polynomial_examples():
    x0, x1, x2, x3 = variables(4)
    assert parse_polynomial("x0*x2 - x1^2", ["x0", "x1", "x2", "x3"], QQ) == x0 * x2 - x1**2
    text = "6*x*y*z + 3*y^2*z + 3*y*z^2 + 3*x^2*w + 3*x*w^2 + w^3"
    assert parse_polynomial(text, ["x", "y", "z", "w"], QQ) == fermat_transformed()


def test_parse_polynomial_errors():
    with pytest.raises(ParseError):
        parse_polynomial("1/2*x + y", ["x", "y"], GF(2))
    with pytest.raises(ParseError) as info:
        parse_polynomial("x + q", ["x", "y"], QQ)
    assert "^" in str(info.value)
    with pytest.raises(ParseError):
        parse_polynomial("x*(y+1)", ["x", "y"], QQ)
    with pytest.raises(ParseError):
        parse_polynomial("x +", ["x"], QQ)


def test_parse_order_spec_examples():
    names = ["x0", "x1", "x2", "x3"]
    assert parse_order_spec("lex(x0>x1>x2>x3)", names) == lex(4)
    assert parse_order_spec("degrevlex(x1>x0>x3>x2)", names) == case1_order()
    assert parse_order_spec("block(degrevlex(x3); lex(x0>x1>x2))", names) == e6_order()
    assert parse_order_spec("matrix([[1,1,1,1],[0,0,0,-1],[0,0,-1,0],[0,-1,0,0]])", names) == degrevlex(4)
    assert parse_order_spec("degrevlex", names) == degrevlex(4)


def test_parse_order_spec_errors():
    names = ["x", "y", "z"]
    with pytest.raises(ParseError, match="missing"):
        parse_order_spec("lex(x>y)", names)
    with pytest.raises(ParseError):
        parse_order_spec("matrix([[1,1,1],[1,1,1],[2,2,2]])", names)
    with pytest.raises(ParseError):
        parse_order_spec("revlex(x>y>z)", names)


def test_fixture_files():
    doc = parse_input_document((FIX / "twisted_cubic.id").read_text())
    assert doc.variables == ["x0", "x1", "x2", "x3"] and doc.field == QQ
    assert len(doc.generators) == 3 and doc.orders["default"] == lex(4)
    assert parse_input_document(doc.render()).canonical() == doc.canonical()
    names = ["X", "Y", "Z", "W"]
    assert read_substitution(FIX / "fermat4_g.sub", names, QQ) == fermat_change_of_variables()
    assert read_substitution(FIX / "case1.sub", ["x0", "x1", "x2", "x3"], QQ) == case1_change_of_variables()
    assert read_order(FIX / "case1.ord", ["x0", "x1", "x2", "x3"]) == case1_order()
    assert read_order(FIX / "e6.ord", ["x0", "x1", "x2", "x3"]) == e6_order()
    gf = parse_input_document((FIX / "square_gf2.id").read_text())
    assert gf.field == GF(2)


def test_bare_substitution_forms():
    s = parse_substitution("x + y\n-y\n", ["x", "y"], QQ)
    x, y = variables(2)
    assert s.images() == [x + y, -y]


def test_input_document_errors():
    with pytest.raises(ParseError, match="variables"):
        parse_input_document("x^2\n")
    with pytest.raises(ParseError, match="line 3"):
        parse_input_document("variables: x\nfield: QQ\nx + z\n")


# ---- subcommands ------------------------------------------------------------


def test_record_schema():
    code, lines, _, _ = call("gb", "--ideal", FIX / "twisted_cubic.id")
    assert code == 0 and len(lines) == 1
    rec = lines[0]
    assert set(rec) == {"schema_version", "command", "input_digest", "seed", "result", "elapsed_ms"}
    assert rec["schema_version"] == 1 and rec["command"] == "gb"
    assert rec["result"]["basis"] == ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]


def test_initial_and_table():
    code, _, text, _ = call("initial", "--ideal", FIX / "twisted_cubic.id", "--format", "table")
    assert code == 0 and "squarefree" in text.splitlines()[0] and "True" in text


def test_initial_strict_negative():
    code, lines, _, _ = call("initial", "--ideal", FIX / "fermat3.id", "--strict")
    assert code == 2 and lines[0]["result"]["squarefree"] is False


def test_herzog_check_and_search():
    code, lines, _, _ = call("herzog-check", "--ideal", FIX / "case1.id", "--order", FIX / "case1.ord",
                             "--sub", FIX / "case1.sub")
    assert code == 0 and lines[0]["result"]["certificate"]["initial"] == ["x0*x1*x3"]
    code, lines, _, _ = call("herzog-search", "--ideal", FIX / "fermat4.id", "--sub", FIX / "fermat4_g.sub",
                             "--order", "degrevlex(X>Y>Z>W)", "--transcript")
    res = lines[0]["result"]
    assert res["certified"] and res["certificate"]["initial"] == ["X*Y*Z"] and res["attempts"] == 2
    code, lines, _, _ = call("herzog-search", "--ideal", FIX / "fermat3.id", "--strict")
    assert code == 2 and not lines[0]["result"]["certified"]


def test_fedder_command():
    code, lines, _, _ = call("fedder", "--ideal", FIX / "fermat3.id", "--prime", 7)
    assert code == 0 and lines[0]["result"]["f_pure"] and lines[0]["result"]["witness"] == "6*x^6*y^6*z^6"
    code, lines, _, _ = call("fedder", "--ideal", FIX / "fermat3.id", "--prime", 5, "--strict")
    assert code == 2
    code, lines, _, _ = call("fedder", "--ideal", FIX / "square_gf2.id")
    assert code == 0 and lines[0]["result"]["f_pure"] is False and lines[0]["result"]["mode"] == "general"
    code, _, _, err = call("fedder", "--ideal", FIX / "fermat3.id", "--prime", 3)
    assert code == 0
    code, _, _, err = call("fedder", "--ideal", FIX / "fermat3.id")
    assert code == 1 and "--prime" in err


def test_prime_scan_remark_surface():
    code, lines, _, _ = call("prime-scan", "--ideal", FIX / "nonpure_surface.id", "--from", 2, "--to", 7)
    assert code == 0 and [l["result"]["status"] for l in lines] == ["not_f_pure"] * 4


def test_prime_scan_resume(tmp_path):
    log = tmp_path / "scan.jsonl"
    code, first, _, _ = call("prime-scan", "--ideal", FIX / "fermat3.id", "--from", 2, "--to", 13, "--out", log)
    assert [l["result"]["p"] for l in first] == [2, 3, 5, 7, 11, 13]
    code, again, _, _ = call("prime-scan", "--ideal", FIX / "fermat3.id", "--from", 2, "--to", 19, "--out", log)
    assert [l["result"]["p"] for l in again] == [17, 19]
    stored = [json.loads(l) for l in log.read_text().splitlines()]
    assert [r["result"]["p"] for r in stored] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert log.read_bytes().endswith(b"\n") and b"\r" not in log.read_bytes()


def test_q12_command():
    code, lines, _, _ = call("q12", "--ideal", FIX / "nonpure_surface.id", "--from", 2, "--to", 7)
    assert code == 0 and lines[0]["result"]["classification"] == "tension_2_without_1"
    code, lines, _, _ = call("q12", "--ideal", FIX / "fermat4.id", "--from", 5, "--to", 13,
                             "--sub", FIX / "fermat4_g.sub", "--order", "degrevlex(X>Y>Z>W)", "--strict")
    assert code == 0 and lines[0]["result"]["classification"] == "both_hold"


def test_supersingular_and_crosscheck():
    code, lines, _, _ = call("supersingular", "--ideal", FIX / "fermat3.id", "--to", 13)
    assert code == 0
    assert {l["result"]["p"] for l in lines if l["result"]["supersingular"]} == {2, 5, 11}
    code, lines, _, _ = call("crosscheck", "--ideal", FIX / "elliptic.id", "--to", 50, "--strict")
    assert code == 0 and all(l["result"]["consistent"] for l in lines)


def test_trace_command():
    code, lines, _, _ = call("trace", "--poly", "x^3*y^7", "--vars", "x,y", "--prime", 2, "--e", 2)
    assert code == 0 and lines[0]["result"]["image"] == "y"


def test_compat_command():
    code, lines, _, _ = call("compat", "--ideal", FIX / "square_gf2.id", "--target", FIX / "x_plus_square_gf2.id",
                             "--strict")
    assert code == 2
    w = lines[0]["result"]["witness"]
    assert w == {"u": "y^3", "alpha": [0, 0], "carrier": "x", "image": "y"}
    code, lines, _, _ = call("compat", "--ideal", FIX / "square_gf2.id", "--target", FIX / "square_gf2.id",
                             "--e", 1, "--e-max", 2)
    assert code == 0 and [l["result"]["compatible"] for l in lines] == [True, True]


def test_verify_paper_command():
    code, lines, _, _ = call("verify-paper")
    assert code == 0
    assert [l["result"]["criterion"] for l in lines] == [1, 2, 3, 4, 5, 6, 7]
    assert all(l["result"]["passed"] for l in lines)


def test_usage_errors():
    assert call("nonsense")[0] == 1
    assert call("gb")[0] == 1
    code, _, _, err = call("gb", "--ideal", FIX / "missing.id")
    assert code == 1 and "error" in err


def test_report_determinism():
    argv = ("herzog-search", "--ideal", FIX / "fermat3.id", "--random-subs", 4, "--random-weights", 2,
            "--seed", 5, "--transcript")
    a, b = call(*argv)[1][0], call(*argv)[1][0]
    for rec in (a, b):
        rec.pop("elapsed_ms")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
