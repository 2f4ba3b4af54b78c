import pytest

from hopfcross.catalog import cyclic_group_algebra, line_nilpotent, line_semisimple, resolve, sweedler4
from hopfcross.errors import CharMismatch, ParseError
from hopfcross.fields import GF, QQ, FieldSpec
from hopfcross.hopf import verify_hopf
from hopfcross.structure import center, group_likes_bruteforce, primitives, zp

F3, F5 = GF(3), GF(5)
F3X = FieldSpec.from_flag("f3(X1)")


@pytest.mark.parametrize("field", [QQ, F3, F5, F3X], ids=str)
def test_characteristic_free_constructors_verify(field):
    for H in (sweedler4(field), cyclic_group_algebra(2, field), cyclic_group_algebra(4, field)):
        assert verify_hopf(H).ok


@pytest.mark.parametrize("field", [F3, F3X], ids=str)
def test_line_algebras_verify(field):
    assert verify_hopf(line_nilpotent(3, field)).ok
    assert verify_hopf(line_semisimple(3, field)).ok


def test_line_algebras_over_f5():
    assert verify_hopf(line_nilpotent(5, F5)).ok
    assert verify_hopf(line_semisimple(5, F5)).ok


def test_characteristic_mismatch():
    with pytest.raises(CharMismatch):
        line_nilpotent(3, QQ)
    with pytest.raises(CharMismatch):
        line_semisimple(3, F5)


def test_sweedler_relations():
    H = sweedler4(F3)
    assert list(H.labels) == ["1", "g", "x", "gx"]
    x, g, gx = H.basis("x"), H.basis("g"), H.basis("gx")
    assert H.mul(x, g) == [0, 0, 0, 2]
    assert H.mul(g, g) == H.one()
    assert H.mul(x, x) == [0, 0, 0, 0]
    assert H.antipode_of(x) == [0, 0, 0, 2]
    assert H.antipode_of(g) == g
    assert H.mul(g, x) == gx


def test_sweedler_has_no_primitives():
    assert primitives(sweedler4(QQ)).dim == 0


def test_line_algebra_examples():
    A = line_nilpotent(3, F3)
    assert list(A.labels) == ["1", "y", "y^2"]
    assert all(A.counit[j] == 0 for j in (1, 2))
    assert primitives(A).basis == [A.basis("y")]
    B = line_semisimple(3, F3)
    assert primitives(B).basis == [B.basis("y")]
    assert zp(B).basis == [B.basis("y")]
    assert center(B).dim == 3
    y = B.basis("y")
    assert B.power(y, 3) == y
    assert A.power(A.basis("y"), 3) == [0, 0, 0]


def test_cyclic_group_algebra_examples():
    C2 = cyclic_group_algebra(2, F3)
    found = [list(v) for v in group_likes_bruteforce(C2).elements]
    assert len(found) == 2 and C2.basis("1") in found and C2.basis("g") in found
    assert zp(cyclic_group_algebra(2, QQ)).dim == 0
    C4 = cyclic_group_algebra(4, F3)
    assert list(C4.labels) == ["1", "g", "g^2", "g^3"]
    assert C4.antipode_of(C4.basis("g")) == C4.basis("g^3")


def test_resolve_names():
    assert resolve("catalog:sweedler4", F3).dim == 4
    assert resolve("line0:3", F3).meta["name"] == "line0(3)"
    assert resolve("cyclic:4", F3).dim == 4
    T = resolve("tensor(line1:3,tensor(cyclic:2,sweedler4))", F3)
    assert T.dim == 24
    assert verify_hopf(T).ok
    with pytest.raises(ParseError):
        resolve("line0:x", F3)
    with pytest.raises(ParseError):
        resolve("nope", F3)
