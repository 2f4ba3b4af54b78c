import random

import pytest

from hopfcross import sparse as sp
from hopfcross.catalog import cyclic_group_algebra, line_nilpotent, line_semisimple, sweedler4
from hopfcross.crossed import (
    CHECK_NAMES,
    CrossedSystem,
    build_crossed_product,
    check_crossed_system,
    coinvariants,
    cohomologous_transform,
    extract_from_splitting,
    hopf_structure_implies_axioms,
)
from hopfcross.errors import InvalidSystem, NotASection, NotCocentral
from hopfcross.fields import GF, QQ
from hopfcross.hopf import LinearMap, check_map_properties, convolution, tensor_hopf, unit_counit, verify_hopf
from hopfcross.structure import cocentral_maps
from hopfcross.sweedler import H4CocycleParam, cocycle_from_param

F3 = GF(3)


def fa_system(A, a):
    return cocycle_from_param(H4CocycleParam(A, a))


@pytest.mark.parametrize("make", [line_nilpotent, line_semisimple])
@pytest.mark.parametrize("c", [0, 1, 2])
def test_family_systems_are_valid(make, c):
    A = make(3, F3)
    s = fa_system(A, [0, c, 0])
    assert check_crossed_system(s).ok
    assert verify_hopf(build_crossed_product(s).algebra).ok


def test_check_names_in_order():
    rep = check_crossed_system(fa_system(line_nilpotent(3, F3), [0, 1, 0]))
    assert tuple(c.name for c in rep.checks) == CHECK_NAMES


def test_flipped_entry_breaks_the_cocycle_identity():
    A = line_nilpotent(3, F3)
    s = fa_system(A, [0, 1, 0])
    s.cocycle[2][3] = {1: F3(1)}
    rep = check_crossed_system(s)
    assert rep.failed_names() == ["cocycle"]
    assert "associativity" in verify_hopf(build_crossed_product(s, force=True).algebra).failed_names()
    with pytest.raises(InvalidSystem):
        build_crossed_product(s)


def test_trivial_system_gives_tensor_product():
    A, H = line_semisimple(3, F3), sweedler4(F3)
    P = build_crossed_product(CrossedSystem(A, H))
    assert P.algebra.same_structure(tensor_hopf(A, H))


def test_product_relations():
    A = line_nilpotent(3, F3)
    P = build_crossed_product(fa_system(A, [0, 1, 0]))
    E = P.algebra
    x, g = P.pure("1", "x"), P.pure("1", "g")
    assert E.mul(x, x) == P.pure("y", "1")
    assert E.mul(x, g) == [2 * c for c in P.pure("1", "gx")]
    assert E.mul(g, x) == P.pure("1", "gx")
    assert P.algebra.labels[P.index(1, 2)] == "y#x"


def test_canonical_maps():
    P = build_crossed_product(fa_system(line_nilpotent(3, F3), [0, 1, 0]))
    for m in (P.i_A, P.pi_H):
        assert check_map_properties(m).is_hopf_map
    iH = check_map_properties(P.i_H)
    assert iH.is_coalgebra_map and iH.is_unitary and not iH.is_algebra_map
    assert P.pi_H @ P.i_H == LinearMap.identity(P.H)


def test_coinvariants_are_the_base():
    for a in ([0, 0, 0], [0, 1, 0]):
        P = build_crossed_product(fa_system(line_nilpotent(3, F3), a))
        co = coinvariants(P.algebra, P.pi_H)
        assert co.dim == 3
        assert co.basis == [P.pure(lab, "1") for lab in ("1", "y", "y^2")]


@pytest.mark.parametrize("make", [line_nilpotent, line_semisimple])
def test_extraction_round_trip(make):
    A = make(3, F3)
    s = fa_system(A, [0, 2, 0])
    P = build_crossed_product(s)
    ex = extract_from_splitting(P.algebra, P.pi_H, P.i_H)
    assert ex.system.A.same_structure(A)
    assert ex.system.same_tensors(s)
    assert ex.is_isomorphism and ex.stabilizes_A and ex.costabilizes_H


def test_extraction_rejects_non_section():
    P = build_crossed_product(fa_system(line_nilpotent(3, F3), [0, 1, 0]))
    with pytest.raises(NotASection):
        extract_from_splitting(P.algebra, P.pi_H, P.i_H @ unit_counit(P.H, P.H))


def test_transform_by_trivial_map_is_identity():
    A = line_nilpotent(3, F3)
    s = fa_system(A, [0, 1, 0])
    t = cohomologous_transform(s, unit_counit(s.H, A))
    assert t.system.same_tensors(s)
    assert t.iso == LinearMap.identity(build_crossed_product(s).algebra)


def test_transform_gives_isomorphic_products():
    C2, C4 = cyclic_group_algebra(2, F3), cyclic_group_algebra(4, F3)
    base = CrossedSystem(C2, C4)
    # r(g) = g, r(g^2) = r(g^3) = 1 is unitary, cocentral and coalgebra
    r = LinearMap.from_images(C4, C2, [C2.unit, {1: F3(1)}, C2.unit, C2.unit])
    t = cohomologous_transform(base, r)
    assert check_crossed_system(t.system).ok
    assert not t.system.same_tensors(base)
    assert t.system.cocycle[1][2] == {1: F3(1)}
    assert check_map_properties(t.iso).is_hopf_map


def test_transform_rejects_non_cocentral():
    H = sweedler4(F3)
    with pytest.raises(NotCocentral):
        cohomologous_transform(CrossedSystem(H, H), LinearMap.identity(H))


def test_transforms_compose_by_convolution():
    C2, H = cyclic_group_algebra(2, F3), sweedler4(F3)
    base = CrossedSystem(H, C2)
    maps = cocentral_maps(C2, H)
    assert len(maps) == 2
    for r in maps:
        once = cohomologous_transform(base, r, build_iso=False).system
        assert check_crossed_system(once).ok
        for r2 in maps:
            twice = cohomologous_transform(once, r2, build_iso=False).system
            direct = cohomologous_transform(base, convolution(r2, r), build_iso=False).system
            assert twice.same_tensors(direct)


def test_transform_over_rationals():
    Q = QQ
    C2, C4 = cyclic_group_algebra(2, Q), cyclic_group_algebra(4, Q)
    r = LinearMap.from_images(C4, C2, [C2.unit, {1: Q(1)}, {1: Q(1)}, C2.unit])
    t = cohomologous_transform(CrossedSystem(C2, C4), r)
    assert check_crossed_system(t.system).ok
    assert check_map_properties(t.iso).is_hopf_map


def test_hopf_product_forces_axioms_on_perturbations():
    A = line_nilpotent(3, F3)
    H = sweedler4(F3)
    s = fa_system(A, [0, 1, 0])
    rng = random.Random(7)
    hopf_count = 0
    for _ in range(100):
        action = [[dict(v) for v in row] for row in s.action]
        cocycle = [[dict(v) for v in row] for row in s.cocycle]
        table = rng.choice([action, cocycle])
        i = rng.randrange(len(table))
        j = rng.randrange(len(table[i]))
        k = rng.randrange(A.dim)
        sp.add_term(table[i][j], k, F3(rng.choice([1, 2])))
        rep = hopf_structure_implies_axioms(A, H, action, cocycle)
        assert rep.implication_holds
        hopf_count += rep.hopf.ok
    # single-entry changes essentially never keep a Hopf structure
    assert hopf_count < 100
