import random

import pytest
from hypothesis import given, strategies as st

from hopfcross.catalog import cyclic_group_algebra, line_nilpotent, line_semisimple, sweedler4, trivial_hopf
from hopfcross.errors import MalformedData, ShapeMismatch
from hopfcross.fields import GF
from hopfcross.hopf import (
    HopfAlgebra,
    LinearMap,
    check_map_properties,
    convolution,
    perturb,
    structure_entries,
    tensor_hopf,
    unit_counit,
    verify_hopf,
)
from hopfcross.linalg import Matrix
from hopfcross.morphisms import endo_search_by_generators
from hopfcross.structure import coalgebra_maps, group_likes_bruteforce

F3 = GF(3)

# checks that can notice a change in each kind of structure constant
TOUCHES = {
    "mult": {"associativity", "unit", "comult_multiplicative", "counit_multiplicative", "antipode"},
    "unit": {"unit", "comult_unit", "counit_unit", "antipode"},
    "comult": {"coassociativity", "counit", "comult_multiplicative", "comult_unit", "antipode"},
    "counit": {"counit", "counit_multiplicative", "counit_unit", "antipode"},
    "antipode": {"antipode"},
}

CATALOG = {
    "sweedler4": lambda F: sweedler4(F),
    "line0(3)": lambda F: line_nilpotent(3, F),
    "line1(3)": lambda F: line_semisimple(3, F),
    "k[C2]": lambda F: cyclic_group_algebra(2, F),
    "k[C4]": lambda F: cyclic_group_algebra(4, F),
}


def test_identity_antipode_fails_at_x():
    H = sweedler4(F3)
    bad = H.replace(antipode=Matrix.identity(F3, 4))
    rep = verify_hopf(bad)
    assert rep.failed_names() == ["antipode"]
    assert rep.get("antipode").witness == ("x",)


def test_check_order_is_fixed():
    names = [c.name for c in verify_hopf(sweedler4(F3)).checks]
    assert names == ["associativity", "unit", "coassociativity", "counit", "comult_multiplicative",
                     "comult_unit", "counit_multiplicative", "counit_unit", "antipode"]


def test_malformed_data_rejected_before_math():
    with pytest.raises(MalformedData):
        HopfAlgebra(F3, ["1", "g"], {}, {0: 1}, [{(0, 0): 1}], [1, 1], [{0: 1}, {1: 1}])


def test_tensor_product():
    A, H = line_nilpotent(3, F3), sweedler4(F3)
    T = tensor_hopf(A, H)
    assert T.dim == 12
    assert T.dense(T.unit) == T.basis("1⊗1")
    assert verify_hopf(T).ok
    assert verify_hopf(tensor_hopf(H, H)).ok


def test_group_likes_of_tensor_by_brute_force():
    T = tensor_hopf(line_nilpotent(3, F3), sweedler4(F3))
    found = {tuple(int(c) for c in v) for v in group_likes_bruteforce(T).elements}
    assert found == {tuple(int(c) for c in T.basis(s)) for s in ("1⊗1", "1⊗g")}


def test_tensor_needs_common_field():
    with pytest.raises(TypeError):
        tensor_hopf(sweedler4(F3), sweedler4(GF(5)))


def test_convolution_examples():
    H = sweedler4(F3)
    A = line_nilpotent(3, F3)
    e = unit_counit(H, A)
    assert convolution(e, e) == e
    f = LinearMap(H, A, Matrix(F3, [[1, 1, 0, 2], [0, 2, 1, 0], [0, 0, 0, 1]]))
    assert convolution(f, e) == f and convolution(e, f) == f
    phi = LinearMap.identity(H)
    S_phi = LinearMap(H, H, H.antipode_matrix()) @ phi
    assert convolution(phi, S_phi) == unit_counit(H, H)


def test_convolution_shape_mismatch():
    H = sweedler4(F3)
    with pytest.raises(ShapeMismatch):
        convolution(unit_counit(H, H), unit_counit(H, line_nilpotent(3, F3)))


def test_map_property_examples():
    H = sweedler4(F3)
    pr = check_map_properties(LinearMap.identity(H))
    assert pr.is_coalgebra_map and pr.is_algebra_map and pr.is_unitary and pr.is_hopf_map
    k = trivial_hopf(F3)
    assert check_map_properties(unit_counit(H, k)).is_hopf_map
    r = check_map_properties(unit_counit(H, line_nilpotent(3, F3)))
    assert r.is_coalgebra_map and r.is_unitary


random_maps = st.lists(st.integers(0, 2), min_size=12, max_size=12)


@given(random_maps, random_maps, random_maps)
def test_convolution_is_associative(a, b, c):
    H, A = sweedler4(F3), line_nilpotent(3, F3)
    f, g, h = (LinearMap(H, A, Matrix(F3, [x[i * 4:(i + 1) * 4] for i in range(3)])) for x in (a, b, c))
    assert convolution(convolution(f, g), h) == convolution(f, convolution(g, h))
    e = unit_counit(H, A)
    assert convolution(f, e) == f == convolution(e, f)


_C2 = cyclic_group_algebra(2, F3)
_H4 = sweedler4(F3)
_COALG = coalgebra_maps(_C2, _H4)
_HOPF_H4 = endo_search_by_generators(_H4).maps


@given(st.sampled_from(_COALG), st.sampled_from(_HOPF_H4))
def test_composites_of_coalgebra_maps(f, g):
    assert check_map_properties(f).is_coalgebra_map
    assert check_map_properties(g @ f).is_coalgebra_map


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_perturbation_soundness(name):
    H = CATALOG[name](F3)
    rng = random.Random(name)
    entries = structure_entries(H)
    for _ in range(100):
        kind, idx = rng.choice(entries)
        delta = rng.choice([1, 2])
        rep = verify_hopf(perturb(H, kind, idx, delta))
        failed = set(rep.failed_names())
        assert failed, (kind, idx, delta)
        assert failed & TOUCHES[kind], (kind, idx, failed)
