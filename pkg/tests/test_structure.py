import pytest
from hypothesis import given, strategies as st

from hopfcross.catalog import cyclic_group_algebra, line_nilpotent, line_semisimple, sweedler4
from hopfcross.errors import NotGroupLike
from hopfcross.fields import GF, QQ
from hopfcross.hopf import LinearMap, check_map_properties, tensor_hopf, unit_counit
from hopfcross.io import algebra_from_json, algebra_to_json
from hopfcross.structure import (
    center,
    check_coz1_group,
    coalgebra_maps,
    cocentral_maps,
    group_likes,
    group_likes_bruteforce,
    is_cocentral,
    is_primitively_generated,
    primitives,
    skew_primitives,
    zp,
)

F3, F5 = GF(3), GF(5)


def as_ints(vectors):
    return {tuple(int(c) for c in v) for v in vectors}


def permuted(H, perm):
    """The same Hopf algebra with basis element ``i`` moved to position ``perm[i]``."""
    d = algebra_to_json(H)
    d["basis"] = [None] * H.dim
    for i, lab in enumerate(H.labels):
        d["basis"][perm[i]] = lab
    for key in ("unit", "counit"):
        old = d[key]
        d[key] = [None] * H.dim
        for i, c in enumerate(old):
            d[key][perm[i]] = c
    d["mult"] = [[perm[i], perm[j], perm[k], c] for i, j, k, c in d["mult"]]
    d["comult"] = [[perm[i], perm[j], perm[k], c] for i, j, k, c in d["comult"]]
    d["antipode"] = [[perm[i], perm[j], c] for i, j, c in d["antipode"]]
    return algebra_from_json(d)


def test_group_likes_examples():
    H = sweedler4(F3)
    assert as_ints(group_likes(H)) == {(1, 0, 0, 0), (0, 1, 0, 0)}
    assert as_ints(group_likes(line_nilpotent(3, F3))) == {(1, 0, 0)}
    assert len(group_likes(cyclic_group_algebra(4, F3))) == 4
    C2 = cyclic_group_algebra(2, F3)
    assert as_ints(group_likes_bruteforce(C2)) == {(1, 0), (0, 1)}


@pytest.mark.parametrize("make", [sweedler4, lambda F: line_semisimple(3, F), lambda F: cyclic_group_algebra(4, F)])
def test_group_likes_match_brute_force(make):
    A = make(F3)
    assert as_ints(group_likes(A)) == as_ints(group_likes_bruteforce(A))


def test_line1_group_likes():
    # y^3 = y gives grouplikes 1 + c y + ... ; brute force is the oracle here
    A = line_semisimple(3, F3)
    found = as_ints(group_likes_bruteforce(A))
    for v in found:
        vec = [F3(c) for c in v]
        assert A.coproduct(vec) == {(i, j): a * b for i, a in enumerate(vec) for j, b in enumerate(vec) if a and b}


def test_skew_primitives_of_sweedler():
    H = sweedler4(F5)
    one, g = H.basis("1"), H.basis("g")
    P = skew_primitives(H, one, g)
    assert P.dim == 2
    assert H.basis("x") in P
    assert [F5(1), F5(-1), 0, 0] in P
    assert H.basis("gx") not in P
    with pytest.raises(NotGroupLike):
        skew_primitives(H, one, H.basis("x"))


def test_center_and_zp():
    H = sweedler4(F3)
    assert center(H).dim == 1
    assert zp(H).dim == 0
    A = line_nilpotent(3, F3)
    assert zp(A).basis == [A.basis("y")]
    T = tensor_hopf(line_semisimple(3, F3), line_semisimple(3, F3))
    assert zp(T).dim == 2
    assert zp(cyclic_group_algebra(3, QQ)).dim == 0


coefs = st.lists(st.integers(0, 2), min_size=2, max_size=2)


@given(coefs)
def test_zp_elements_are_central_primitive(cs):
    T = tensor_hopf(line_nilpotent(3, F3), line_semisimple(3, F3))
    basis = zp(T).basis
    v = [sum((F3(c) * b[i] for c, b in zip(cs, basis)), F3(0)) for i in range(T.dim)]
    one = T.one()
    expect = {}
    for i, c in enumerate(v):
        if c:
            for j, d in enumerate(one):
                if d:
                    expect[(i, j)] = expect.get((i, j), 0) + c * d
                    expect[(j, i)] = expect.get((j, i), 0) + c * d
    expect = {k: c for k, c in expect.items() if c}
    assert T.coproduct(v) == expect
    for k in range(T.dim):
        e = T.basis(k)
        assert T.mul(v, e) == T.mul(e, v)
    assert T.counit_of(v) == 0


def test_primitive_generation():
    assert is_primitively_generated(line_nilpotent(3, F3))
    assert is_primitively_generated(line_semisimple(3, F3))
    assert not is_primitively_generated(sweedler4(F3))


def test_identity_is_not_cocentral():
    H = sweedler4(F3)
    assert not is_cocentral(LinearMap.identity(H))
    assert is_cocentral(unit_counit(H, line_nilpotent(3, F3)))


def test_cocentral_maps_form_a_group():
    C2 = cyclic_group_algebra(2, F3)
    maps = cocentral_maps(C2, C2)
    assert len(maps) == 2
    assert check_coz1_group(maps) == (True, "group")
    H = sweedler4(F3)
    for A in (line_nilpotent(3, F3), line_semisimple(3, F3)):
        maps = cocentral_maps(H, A)
        assert check_coz1_group(maps)[0]
        for r in maps:
            pr = check_map_properties(r)
            assert pr.is_coalgebra_map and pr.is_unitary and is_cocentral(r)


def test_cocentral_maps_over_infinite_field():
    H = sweedler4(QQ)
    assert len(cocentral_maps(H, H)) == 1


def test_coalgebra_maps_cover_group_like_choices():
    C2 = cyclic_group_algebra(2, F3)
    H = sweedler4(F3)
    # a unitary coalgebra map k[C2] -> H sends g to a group-like
    images = as_ints(tuple(int(c) for c in f.matrix.column(1)) for f in coalgebra_maps(C2, H))
    assert images == as_ints(group_likes(H))


@pytest.mark.parametrize("perm", [(0, 2, 1, 3), (3, 1, 2, 0), (1, 0, 3, 2)])
def test_cocentral_maps_basis_permutation_invariant(perm):
    C2 = cyclic_group_algebra(2, F3)
    H = sweedler4(F3)
    Hp = permuted(H, perm)
    assert len(cocentral_maps(C2, Hp)) == len(cocentral_maps(C2, H))
    assert len(group_likes(Hp)) == len(group_likes(H))
    assert zp(Hp).dim == zp(H).dim
