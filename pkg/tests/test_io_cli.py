import json

import pytest
from hypothesis import given, strategies as st

from hopfcross.catalog import line_nilpotent, line_semisimple, resolve, sweedler4
from hopfcross.cli import main
from hopfcross.crossed import CrossedSystem
from hopfcross.errors import FieldMismatch, MalformedData, ParseError
from hopfcross.fields import GF, QQ, FieldSpec
from hopfcross.hopf import LinearMap, perturb, unit_counit
from hopfcross.io import (
    algebra_from_json,
    algebra_to_json,
    dump_algebra,
    load_algebra,
    map_from_json,
    map_to_json,
    parse_element,
    parse_json,
    system_from_json,
    system_to_json,
)
from hopfcross.sweedler import H4CocycleParam, cocycle_from_param

F3 = GF(3)
F3X = FieldSpec.from_flag("f3(X1)")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- io ---------------------------------------------------------------------------------------


@pytest.mark.parametrize("ref,field", [("sweedler4", F3), ("tensor(line1:3,sweedler4)", F3),
                                       ("line1:3", F3X), ("cyclic:4", QQ)])
def test_algebra_round_trip(ref, field):
    H = resolve(ref, field)
    text = json.dumps(algebra_to_json(H))
    back = algebra_from_json(json.loads(text))
    assert back.same_structure(H) and back.labels == H.labels


def test_system_round_trip():
    A = line_nilpotent(3, F3)
    s = cocycle_from_param(H4CocycleParam(A, [0, 2, 0]))
    d = json.loads(json.dumps(system_to_json(s)))
    assert d["action"] == "trivial"
    assert system_from_json(d).same_tensors(s)
    triv = system_from_json({"A": "catalog:line0:3", "H": "catalog:sweedler4", "field": "f3"})
    assert triv.same_tensors(CrossedSystem(A, sweedler4(F3)))


def test_map_round_trip():
    H, A = sweedler4(F3), line_semisimple(3, F3)
    f = unit_counit(H, A)
    assert map_from_json(map_to_json(f), H, A) == f


def test_parse_element():
    A = line_semisimple(3, F3X)
    X1 = F3X.variable("X1")
    assert parse_element(A, "y") == [0, 1, 0]
    assert parse_element(A, "2*y^2 - X1*y") == [0, -X1, 2]
    assert parse_element(A, "(X1+1)*y + 1") == [1, X1 + 1, 0]
    with pytest.raises(ParseError):
        parse_element(A, "(y")


def test_bad_inputs():
    with pytest.raises(ParseError) as exc:
        parse_json('{"dim": 2,, }')
    assert exc.value.position == 10
    with pytest.raises(MalformedData):
        algebra_from_json({"field": "f3", "dim": 2, "unit": [1, 0], "counit": [1, 1], "mult": [[0, 0, 5, "1"]]})
    with pytest.raises(FieldMismatch):
        algebra_from_json(algebra_to_json(sweedler4(F3)), GF(5))
    with pytest.raises(MalformedData):
        load_algebra("catalog:sweedler4")


@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(1, 2))
def test_round_trip_of_perturbed_algebras(i, j, k, d):
    H = perturb(sweedler4(F3), "mult", (i, j, k), d)
    assert algebra_from_json(json.loads(dump_algebra(H))).same_structure(H)


# -- cli -------------------------------------------------------------------------------------


def test_cli_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "catalog:sweedler4", "--field", "f3")
    assert code == 0 and "PASS" in out
    bad = tmp_path / "bad.json"
    bad.write_text(dump_algebra(sweedler4(F3).replace(antipode=[{i: F3(1)} for i in range(4)])))
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1 and "antipode" in out
    broken = tmp_path / "broken.json"
    broken.write_text('{"field": "f3", "dim": 2,, }')
    code, _, err = run(capsys, "verify", str(broken))
    assert code == 3 and "position 25" in err


def test_cli_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "catalog:line0:3", "--field", "f3", "--json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_cli_input_errors(capsys):
    assert run(capsys, "verify", "catalog:nope", "--field", "f3")[0] == 3
    assert run(capsys, "verify", "catalog:sweedler4")[0] == 3
    assert run(capsys, "frobnicate")[0] == 3
    assert run(capsys, "equiv", "--field", "f3(X1)", "--q", "X1*", "--qprime", "1")[0] == 3


def test_cli_classify(capsys):
    code, out, _ = run(capsys, "classify", "catalog:line1:3", "--field", "f3", "--json")
    d = json.loads(out)
    assert code == 0 and d["crp"]["count"] == 2 and d["h2"]["points"] == 3
    code, out, _ = run(capsys, "classify", "catalog:sweedler4", "--field", "q", "--json")
    assert code == 0 and json.loads(out)["crp"]["count"] == 1
    assert run(capsys, "classify", "catalog:line1:3", "--field", "f3(X1)")[0] == 2


def test_cli_classify_function_field(capsys):
    code, out, _ = run(capsys, "classify", "catalog:line1:3", "--field", "f3(X1,X2,X3,X4,X5)",
                       "--representatives", "X1*y,X2*y,X3*y,X4*y,X5*y", "--json")
    d = json.loads(out)
    assert code == 0 and d["crp"]["count"] == 5
    assert len(d["crp"]["pairwise"]) == 10
    assert {p["status"] for p in d["crp"]["pairwise"]} == {"NotEquivalent"}


def test_cli_crossed_build_and_verify(capsys, tmp_path):
    out_file = tmp_path / "ay.json"
    code, out, _ = run(capsys, "crossed", "build", "--base", "catalog:line0:3", "--field", "f3",
                       "--param", "y", "--out", str(out_file))
    assert code == 0 and "12-dimensional" in out
    assert json.loads(out_file.read_text())["dim"] == 12
    assert run(capsys, "verify", str(out_file))[0] == 0
    assert run(capsys, "crossed", "build", "--base", "catalog:line0:3", "--field", "f3", "--param", "y^2")[0] == 3


def test_cli_crossed_check(capsys, tmp_path):
    sys_file = tmp_path / "sys.json"
    s = cocycle_from_param(H4CocycleParam(line_nilpotent(3, F3), [0, 1, 0]))
    d = system_to_json(s, "catalog:line0:3", "catalog:sweedler4")
    sys_file.write_text(json.dumps(d))
    assert run(capsys, "crossed", "check", "--system", str(sys_file))[0] == 0
    d["cocycle"] = [row for row in d["cocycle"] if row[:2] != [2, 3]] + [[2, 3, 1, "1"]]
    sys_file.write_text(json.dumps(d))
    code, out, _ = run(capsys, "crossed", "check", "--system", str(sys_file))
    assert code == 1 and "cocycle" in out
    assert run(capsys, "crossed", "build", "--system", str(sys_file))[0] == 1
    assert run(capsys, "crossed", "build", "--system", str(sys_file), "--force")[0] == 3
    assert run(capsys, "crossed", "build", "--system", str(sys_file), "--force",
               "--i-know-this-is-unchecked", "--out", str(tmp_path / "forced.json"))[0] == 0
    assert run(capsys, "verify", str(tmp_path / "forced.json"))[0] == 1


def test_cli_equiv_and_seq(capsys):
    code, out, _ = run(capsys, "equiv", "--field", "f3(X1,X2)", "--q", "X1", "--qprime", "X2",
                       "--scalars", "prime-subfield")
    assert code == 0 and out.startswith("NotEquivalent")
    code, out, _ = run(capsys, "equiv", "--field", "f3(X1)", "--q", "X1", "--qprime", "2*X1",
                       "--scalars", "prime-subfield")
    assert code == 0 and out.startswith("Equivalent")
    assert run(capsys, "equiv", "--field", "f3(X1)", "--q", "X1+1", "--qprime", "1",
               "--scalars", "prime-subfield")[0] == 2
    code, out, _ = run(capsys, "seq", "--field", "f3", "--s", "1:1", "--t", "1:2")
    assert code == 0 and out.startswith("Equivalent")


def test_cli_aut_and_iso(capsys):
    code, out, _ = run(capsys, "aut", "--algebra", "catalog:sweedler4", "--field", "f5")
    assert code == 0 and "= 4" in out
    code, out, _ = run(capsys, "aut", "--algebra", "catalog:line1:3", "--field", "f3", "--param", "y", "--json")
    assert code == 0 and json.loads(out)["order"] == 2
    code, out, _ = run(capsys, "iso", "--algebra", "catalog:line1:3", "--field", "f3", "--a", "y", "--b", "2*y")
    assert code == 0 and out.startswith("Equivalent")


def test_cli_morphism(capsys, tmp_path):
    A, H = line_semisimple(3, F3), sweedler4(F3)
    src = system_to_json(cocycle_from_param(H4CocycleParam(A, [0, 1, 0])), "catalog:line1:3", "catalog:sweedler4")
    data = {"source": src, "target": src, "u": map_to_json(LinearMap.identity(A)),
            "r": map_to_json(unit_counit(H, A)), "v": map_to_json(LinearMap.identity(H))}
    f = tmp_path / "m.json"
    f.write_text(json.dumps(data))
    assert run(capsys, "morphism", "check", str(f))[0] == 0
    data["p"] = map_to_json(unit_counit(A, H))
    f.write_text(json.dumps(data))
    assert run(capsys, "morphism", "check", str(f))[0] == 0
    data["v"] = map_to_json(unit_counit(H, H))
    f.write_text(json.dumps(data))
    assert run(capsys, "morphism", "check", str(f))[0] == 1
