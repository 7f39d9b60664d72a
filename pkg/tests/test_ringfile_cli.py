import io
import json
import subprocess
import sys

import pytest

from ringlab.cli import FINITE, run
from ringlab.constructions import b_l, cyclic_ring, matrix_ring
from ringlab.errors import ArityMismatch, MissingProduct, NonAssociative, RingFileSyntaxError
from ringlab.ringfile import export_ring, parse_element, parse_elements, parse_ring_file

from conftest import CORPUS

B_L_FILE = """# the ring B_l over F2
ring B_l
additive 2 2
mul e1 e1 = (1,0)
mul e1 e2 = (0,1)
mul e2 e1 = (0,0)
mul e2 e2 = (0,0)
"""


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_parse_b_l():
    r = parse_ring_file(B_L_FILE)
    assert r.table_key() == b_l(2).table_key()
    assert r.name == "B_l"


def test_missing_product():
    text = "ring X\nadditive 2\n"
    with pytest.raises(MissingProduct) as exc:
        parse_ring_file(text)
    assert (exc.value.i, exc.value.j) == (1, 1)


def test_default_zero():
    r = parse_ring_file("ring Z\nadditive 2 2\ndefault zero\n")
    assert all(r.mul(a, b).is_zero() for a in r for b in r)


@pytest.mark.parametrize("text,line", [
    ("ring X\nadditive 2\nmul e1 e1 = (x)\n", 3),
    ("ring X\nadditive 1\n", 2),
    ("ring X\nadditive 2\nmul e1 e3 = (1)\n", 3),
    ("ring X\nadditive 2\nmul e1 e1 = (1)\nmul e1 e1 = (0)\n", 4),
    ("ring X\nfrobnicate\n", 2),
    ("additive 2\nmul e1 e1 = (1)\n", 1),
])
def test_syntax_errors(text, line):
    with pytest.raises(RingFileSyntaxError) as exc:
        parse_ring_file(text)
    assert exc.value.line == line


def test_non_associative_file():
    text = "ring N\nadditive 2 2\ndefault zero\nmul e1 e1 = (0,1)\nmul e2 e1 = (1,0)\n"
    with pytest.raises(NonAssociative):
        parse_ring_file(text)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_round_trip_bit_exact(name):
    ring = CORPUS[name]
    text = export_ring(ring)
    again = parse_ring_file(text)
    assert again.table_key() == ring.table_key()
    assert export_ring(again) == text


def test_parse_element():
    r = b_l(2)
    assert parse_element(r, "(1,1)") == r.element([1, 1])
    assert parse_element(r, "(3,-1)") == r.element([1, 1])
    with pytest.raises(ArityMismatch):
        parse_element(r, "(1)")
    m2 = matrix_ring(cyclic_ring(2), 2)
    assert parse_element(m2, "(E01+E10)") == m2.element([0, 1, 1, 0])
    assert parse_elements(r, "(1,0);(e2)") == [r.element([1, 0]), r.element([0, 1])]


@pytest.fixture
def m2_file(tmp_path):
    p = tmp_path / "m2.ring"
    p.write_text(export_ring(matrix_ring(cyclic_ring(2), 2)))
    return str(p)


@pytest.fixture
def b_r_file(tmp_path):
    code, text, _ = call("construct", "b_r")
    assert code == 0
    p = tmp_path / "b_r.ring"
    p.write_text(text)
    return str(p)


def test_cli_validate(m2_file):
    code, out, _ = call("validate", m2_file)
    assert code == 0 and "|R| = 16" in out


def test_cli_classify_json(m2_file):
    code, out, _ = call("classify", m2_file, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["classes"]["unital"]["verdict"] == "yes"
    assert data["classes"]["unital"]["witness"] == "E00+E11"


def test_cli_classify_construction():
    code, out, _ = call("classify", "C", "--bound", "5")
    assert code == 0 and "refuted up to N=5" in out


def test_cli_bound_from_env(monkeypatch):
    monkeypatch.setenv("RINGLAB_BOUND", "3")
    code, out, _ = call("classify", "C", "--format", "json")
    assert json.loads(out)["bound"] == 3
    code, out, _ = call("classify", "C", "--format", "json", "--bound", "4")
    assert json.loads(out)["bound"] == 4


def test_cli_witness_regular_unit(m2_file):
    code, out, _ = call("witness", m2_file, "--kind", "regular-unit", "--elements", "(E01)", "--trace")
    data = json.loads(out)
    assert code == 0 and data["e"] == "E00"
    assert data["trace"][0]["f"] == "E00"


def test_cli_witness_join(m2_file):
    code, out, _ = call("witness", m2_file, "--kind", "join", "--elements", "(E00);(E01+E11)", "--trace")
    data = json.loads(out)
    assert data["e"] == "E00+E01+E11" and data["e_squared"] == "E00+E11"
    assert data["idempotent"] is False


def test_cli_witness_common_unit(m2_file):
    code, out, _ = call("witness", m2_file, "--kind", "common-unit", "--elements", "(E01);(E10)")
    assert code == 0 and "e: " in out


def test_cli_exit_2_on_refuted_hypothesis(b_r_file):
    code, _, err = call("witness", b_r_file, "--kind", "promote")
    assert code == 2 and "HypothesisFailed" in err


def test_cli_exit_1(tmp_path):
    bad = tmp_path / "bad.ring"
    bad.write_text("ring X\nadditive 2\n")
    assert call("validate", str(bad))[0] == 1
    assert call("validate", str(tmp_path / "missing.ring"))[0] == 1
    assert call("frobnicate")[0] == 1
    assert call("construct", "C")[0] == 1
    assert call()[0] == 1


def test_cli_table_and_idempotents(m2_file):
    code, out, _ = call("idempotents", m2_file)
    assert code == 0 and len(out.split()) == 8
    code, out, _ = call("table", m2_file, "--op", "mul")
    assert code == 0 and len(out.splitlines()) == 18


@pytest.mark.parametrize("name", sorted(FINITE))
def test_cli_construct_round_trip(name, tmp_path):
    p = tmp_path / f"{name}.ring"
    assert call("construct", name, "--out", str(p))[0] == 0
    code, text, _ = call("construct", name)
    assert p.read_text() == text
    assert export_ring(parse_ring_file(text)) == text


def test_demo_hierarchy_deterministic():
    code1, out1, _ = call("demo", "hierarchy")
    code2, out2, _ = call("demo", "hierarchy")
    assert code1 == code2 == 0 and out1 == out2
    assert "all six stages reproduced" in out1
    assert "DOCUMENTED" in out1
    for n in range(1, 7):
        assert f"[stage {n}]" in out1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ringlab", "demo", "hierarchy", "--bound", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
