import io
import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from sym3lift import cli, wire
from sym3lift.eigensys import Eigensystem, stabilized_from_roots, sym3_lift
from sym3lift.hecke import GL2
from sym3lift.scalars import QuadExt


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(map(str, argv)), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return path


SPH = ((2, (3, 1)), (3, (-1, 2)), (7, (F(1, 2), 3)))


@pytest.fixture
def form_file(tmp_path):
    chi = stabilized_from_roots(5, 4, F(2), F(125, 2), spherical=SPH)
    return write(tmp_path, "f.json", wire.encode_eigensystem(chi))


def test_level():
    assert run("level", 12) == (0, "192\n", "")
    assert run("level", 12, "--format", "table")[1] == "192\n"


def test_lift(form_file):
    code, out, _ = run("lift", "--branch", 1, form_file)
    assert code == 0
    obj = json.loads(out)
    assert obj["group"] == "GSp4" and obj["weight"] == [7, 5]
    x = wire.decode_eigensystem(obj)
    assert x.spherical_dict[2] == (1, 151, 15)


def test_classify_summary(form_file, tmp_path):
    _, out, _ = run("lift", "--branch", 1, form_file)
    lifted = tmp_path / "F.json"
    lifted.write_text(out)
    code, text, _ = run("classify", lifted, "--primes", "2,3,7", "--format", "table")
    assert code == 0 and text == "sym3-candidate, branch {1}\n"
    obj = json.loads(run("classify", lifted, "--primes", "2,3,7")[1])
    assert obj["summary"] == "sym3-candidate, branch {1}"
    assert obj["params"]["2"] == {"a": "3/1", "c": "1/1"}


def test_stabilize_and_slope(tmp_path):
    chi = Eigensystem(GL2, 5, 1, 2, ((5, (6, 1)), (2, (1, 1))))
    path = write(tmp_path, "g.json", wire.encode_eigensystem(chi))
    code, out, _ = run("stabilize", path)
    assert code == 0
    a, b = json.loads(out)
    assert a["iwahori_p"] == ["5/1", "1/1"] and b["iwahori_p"] == ["5/1", "5/1"]
    pa = write(tmp_path, "a.json", a)
    assert json.loads(run("slope", pa)[1])["slope"] == "0"


def test_twist(form_file):
    code, out, _ = run("twist", form_file, "--character", "legendre:3")
    assert code == 0
    obj = json.loads(out)
    assert obj["tame_level"] == 9 and "3" not in obj["spherical"]
    assert obj["spherical"]["2"] == ["-3/1", "1/1"]


def test_weights():
    code, out, _ = run("weights", 4)
    assert code == 0
    obj = json.loads(out)
    assert obj["sym3_weight"] == [7, 5] and obj["sym3_hodge_tate"] == [0, 3, 6, 9]
    assert run("weights", 1, 2, 3)[0] == 1


class TestExitCodes:
    def test_unknown_verb(self):
        code, _, err = run("frobnicate")
        assert code == 1 and "error" in err

    def test_missing_file(self, tmp_path):
        assert run("lift", tmp_path / "nope.json")[0] == 1

    def test_schema_error_pointer(self, tmp_path):
        chi = stabilized_from_roots(5, 4, F(2), F(125, 2), spherical=SPH)
        obj = wire.encode_eigensystem(chi)
        obj["spherical"]["3"][1] = "two"
        code, _, err = run("lift", write(tmp_path, "bad.json", obj))
        assert code == 1 and "/spherical/3/1" in err

    def test_computational_error(self, tmp_path):
        chi = Eigensystem(GL2, 5, 1, 2, ((2, (1, 1)),))
        code, _, err = run("lift", write(tmp_path, "u.json", wire.encode_eigensystem(chi)))
        assert code == 2 and "p-stabilized" in err

    def test_bad_json(self, tmp_path):
        path = tmp_path / "x.json"
        path.write_text("{")
        assert run("slope", path)[0] == 1


class TestOracleSuite:
    def test_default_passes(self):
        code, out, _ = run("oracle-suite", "--seed", 0, "--trials", 20)
        assert code == 0 and json.loads(out)["passed"]

    def test_single_trial(self):
        assert run("oracle-suite", "--trials", 1)[0] == 0

    def test_fault_is_caught(self):
        code, out, _ = run("oracle-suite", "--trials", 10, "--inject-fault", "transfer-T1", "--format", "table")
        assert code == 2
        assert any(line.startswith("transfer-functoriality") and "FAIL" in line for line in out.splitlines())
        assert "first failure: transfer-functoriality reproducer" in out

    def test_deterministic(self):
        assert run("oracle-suite", "--seed", 7, "--trials", 5) == run("oracle-suite", "--seed", 7, "--trials", 5)


def test_out_flag(tmp_path, form_file):
    target = tmp_path / "out.json"
    code, out, _ = run("lift", form_file, "--out", target)
    assert code == 0 and out == ""
    assert wire.decode_eigensystem(json.loads(target.read_text())).group == "GSp4"


def test_congruences_verb(tmp_path):
    from helpers import PRIMES, congruence_dataset

    entries, forms, expected = congruence_dataset(seed=2)
    obj = {"schema": 1, "gsp4": [wire.encode_eigensystem(x) for x in entries], "gl2": [wire.encode_eigensystem(f) for f in forms]}
    path = write(tmp_path, "d.json", obj)
    args = ("congruences", path, "--primes", ",".join(map(str, PRIMES)), "--max-depth", 4)
    code, out, _ = run(*args)
    assert code == 0
    verdicts = [e["verdict"] for e in json.loads(out)["entries"]]
    assert verdicts == [e[0] for e in expected]
    assert run(*args, "--jobs", 2)[1] == out
    assert run(*args, "--format", "table")[1].startswith("entry")


scalars = st.one_of(
    st.fractions(max_denominator=50).map(F),
    st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.fractions(max_denominator=9), st.integers(-9, 9).filter(bool), st.integers(0, 1)).map(
        lambda t: QuadExt(t[0], t[1], t[2], t[3], t[4])
    ),
)


@settings(max_examples=60)
@given(st.lists(st.tuples(scalars, scalars), min_size=1, max_size=3), scalars, scalars)
def test_round_trip(vals, t0, t1):
    sph = tuple(zip((2, 3, 7), vals))
    chi = Eigensystem(GL2, 5, 1, 3, sph, (t0, t1), None, ("x",), "id")
    text = wire.dumps(wire.encode_eigensystem(chi))
    back = wire.decode_eigensystem(json.loads(text))
    assert back == chi
    assert wire.dumps(wire.encode_eigensystem(back)) == text
