"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Each test prints a ``[PASS]``/``[FAIL]`` line before asserting, so
``pytest -s tests/test_acceptance.py`` gives a readable summary.
"""

import itertools
import random
import warnings

import pytest

from hopfcross.catalog import cyclic_group_algebra, line_nilpotent, line_semisimple, sweedler4
from hopfcross.crossed import (
    CrossedSystem,
    build_crossed_product,
    check_crossed_system,
    coinvariants,
    cohomologous_transform,
    extract_from_splitting,
)
from hopfcross.errors import HypothesisUnchecked
from hopfcross.fields import GF, QQ, FieldSpec
from hopfcross.hopf import (
    LinearMap,
    check_map_properties,
    perturb,
    structure_entries,
    tensor_hopf,
    unit_counit,
    verify_hopf,
)
from hopfcross.linalg import span_rank
from hopfcross.morphisms import (
    MorphismQuadruple,
    check_group_closure,
    endo_search_by_generators,
    hopf_maps_by_generators,
    psi_u_beta,
    quadruple_to_map,
    stabilization_check,
    triple_to_map,
)
from hopfcross.structure import coalgebra_maps, cocentral_maps
from hopfcross.sweedler import (
    H4CocycleParam,
    ScalingModel,
    build_A_a,
    classification_report,
    cocycle_from_param,
    decide_orbit,
    enumerate_h4_systems,
    presentation_checks,
)

F3, F5 = GF(3), GF(5)
F3X = FieldSpec.from_flag("f3(X1)")

# every crossed product built below is recorded for the coinvariant criterion
BUILT = []


def verdict(number, title, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def product(sys):
    P = build_crossed_product(sys)
    BUILT.append(P)
    return P


def catalog_over(F):
    """The catalog algebras that exist over ``F`` plus tensor products of them."""
    base = {"sweedler4": sweedler4(F), "k[C2]": cyclic_group_algebra(2, F), "k[C4]": cyclic_group_algebra(4, F)}
    if F.p:
        base["line0"] = line_nilpotent(F.p, F)
        base["line1"] = line_semisimple(F.p, F)
    out = dict(base)
    names = sorted(base)
    for a, b in itertools.combinations(names, 2):
        if base[a].dim * base[b].dim <= 16:
            out[f"{a}⊗{b}"] = tensor_hopf(base[a], base[b])
    return out


def test_criterion_01_hopf_axioms_and_perturbation_soundness():
    failures = []
    count = 0
    for F in (QQ, F3, F5, F3X):
        for name, H in catalog_over(F).items():
            count += 1
            if not verify_hopf(H).ok:
                failures.append(f"{name}/{F}")
    rng = random.Random(2024)
    missed = []
    perturbed = 0
    for name, H in catalog_over(F3).items():
        if "⊗" in name:
            continue
        entries = structure_entries(H)
        for _ in range(100):
            kind, idx = rng.choice(entries)
            rep = verify_hopf(perturb(H, kind, idx, rng.choice([1, 2])))
            perturbed += 1
            if rep.ok:
                missed.append((name, kind, idx))
    ok = not failures and not missed
    verdict(1, "Hopf axioms and perturbation soundness", ok,
            f"{count} algebras verified, {perturbed} perturbations all caught" if ok else f"{failures} {missed[:3]}")


def test_criterion_02_cocycle_family():
    problems = []
    for make in (line_nilpotent, line_semisimple):
        A = make(3, F3)
        for c in range(3):
            sys = cocycle_from_param(H4CocycleParam(A, [0, c, 0]))
            if not check_crossed_system(sys).ok:
                problems.append(f"{A.meta['name']} a={c}y fails")
            product(sys)
        fam = enumerate_h4_systems(A, exhaustive=True)
        ex = fam.certificate.exhaustive
        if not (fam.certificate.complete and fam.dimension == 1 and ex["solutions"] == 3 and ex["all_in_family"]):
            problems.append(f"{A.meta['name']} certificate {fam.certificate.to_dict()}")
    for A in (sweedler4(F3), sweedler4(QQ), cyclic_group_algebra(2, QQ)):
        fam = enumerate_h4_systems(A)
        if not (fam.certificate.complete and fam.dimension == 0):
            problems.append(f"{A!r} has extra systems")
        product(CrossedSystem(A, sweedler4(A.field)))
    verdict(2, "crossed systems over H4 are exactly the f_a family", not problems, "; ".join(problems))


def test_criterion_03_presentations():
    problems = []
    A = line_nilpotent(3, F3)
    P = build_A_a(H4CocycleParam(A, [0, 1, 0]))
    BUILT.append(P)
    rep = presentation_checks(P, [0, 1, 0])
    x = P.pure("1", "x")
    E = P.algebra
    if not rep.ok:
        problems.append(f"relations {rep.failed_names()}")
    if E.power(x, 6) != E.zero_vector():
        problems.append("x^6 != 0 in the nilpotent case")
    B = line_semisimple(3, F3)
    for q in (1, 2):
        Q = build_A_a(H4CocycleParam(B, [0, q, 0]))
        BUILT.append(Q)
        x = Q.pure("1", "x")
        if Q.algebra.power(x, 6) != [F3(q * q) * c for c in Q.algebra.power(x, 2)]:
            problems.append(f"x^6 != q^2 x^2 for q={q}")
    verdict(3, "presentations of A_(a)", not problems, "; ".join(problems))


def test_criterion_04_classification_counts():
    problems = []
    for make, members in ((line_nilpotent, [1, 2]), (line_semisimple, [1, 2])):
        rep = classification_report(make(3, F3))
        sizes = [len(c.members) for c in rep.classes]
        if not (rep.decided and rep.crp_count == 2 and rep.h2_points == 3 and sizes == members):
            problems.append(f"{make.__name__}: {rep.crp_count} classes, {rep.h2_points} points, sizes {sizes}")
        if any(t.status == "Unknown" for _, _, t in rep.pairwise):
            problems.append("Unknown verdict")
    rep = classification_report(line_semisimple(3, F3))
    if [[int(c) for c in m] for m in rep.classes[1].members] != [[0, 1, 0], [0, 2, 0]]:
        problems.append("line1 classes are not {0} and {y, 2y}")
    verdict(4, "Crp and H^2 counts over F3", not problems, "; ".join(problems))


def test_criterion_05_automorphism_groups():
    L = line_semisimple(3, F3)
    H = sweedler4(F3)
    cases = {
        "H4/F5": (sweedler4(F5), 4),
        "line1(3)/F3": (L, 2),
        "line1(3)⊗H4": (tensor_hopf(L, H), 4),
        "A_(y)": (build_A_a(H4CocycleParam(L, [0, 1, 0])).algebra, 2),
    }
    problems = []
    for name, (A, want) in cases.items():
        res = endo_search_by_generators(A)
        if len(res.automorphisms) != want or not check_group_closure(res.automorphisms):
            problems.append(f"{name}: {len(res.automorphisms)} automorphisms")
    verdict(5, "Hopf automorphism groups by search", not problems, "; ".join(problems))


def test_criterion_06_parity_obstruction():
    K = FieldSpec.from_flag("f3(X1,X2,X3,X4,X5)")
    X = [K.variable(f"X{i}") for i in range(1, 6)]
    problems = []
    for i, j in itertools.combinations(range(5), 2):
        res = decide_orbit(X[i], X[j], "prime", K)
        if res.status != "NotEquivalent" or "odd" not in res.reason:
            problems.append(f"X{i + 1} vs X{j + 1}: {res.status}")
    for x in X:
        res = decide_orbit(x, 2 * x, "prime", K)
        w = res.witness
        if not (res.is_equivalent and w.alpha * x == w.beta**2 * (2 * x) and w.alpha in [K(1), K(2)]):
            problems.append(f"{x} vs 2{x} lacks a witness")
    verdict(6, "degree parity separates X_i and X_j", not problems, "; ".join(problems))


def test_criterion_07_morphism_machinery():
    L, H = line_semisimple(3, F3), sweedler4(F3)
    prods = [product(cocycle_from_param(H4CocycleParam(L, [0, c, 0]))) for c in range(3)]
    U, R, V = coalgebra_maps(L, L), coalgebra_maps(H, L), coalgebra_maps(H, H)
    EU, EV = hopf_maps_by_generators(L, L).maps, hopf_maps_by_generators(H, H).maps
    p0 = unit_counit(L, H)
    rng = random.Random(5)
    cands = [(s, d, u, r, v) for s in prods for d in prods for u in EU for r in R for v in EV]
    cands += [(rng.choice(prods), rng.choice(prods), rng.choice(U), rng.choice(R), rng.choice(V))
              for _ in range(200)]
    problems = []
    successes = 0
    for s, d, u, r, v in cands:
        psi, rep = quadruple_to_map(MorphismQuadruple(u, p0, r, v), s, d)
        direct = check_map_properties(psi).is_hopf_map
        if rep.ok != direct:
            problems.append("quadruple disagrees")
        if u in EU and v in EV:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", HypothesisUnchecked)
                tr = triple_to_map(u, r, v, s, d)
            if tr.report.ok != direct:
                problems.append("triple disagrees")
            if direct and tr.psi_invertible:
                successes += 1
                if not (tr.inverse_ok and tr.psi @ tr.inverse == LinearMap.identity(d.algebra)):
                    problems.append("inverse does not compose to the identity")
        if direct and not stabilization_check(psi, s, d).consistent:
            problems.append("stabilization characterizations disagree")
    model = ScalingModel((0, 1, 2), "prime")
    for alpha, beta in itertools.product((1, 2), (1, 2)):
        u = model.u(L, F3(alpha))
        st = stabilization_check(psi_u_beta(u, beta, prods[1], prods[alpha]), prods[1], prods[alpha])
        if st.stabilizes_A != (alpha == 1) or st.costabilizes_H != (beta == 1):
            problems.append(f"psi_(u,beta) alpha={alpha} beta={beta}")
    verdict(7, "morphism checks agree with direct Hopf-map checks", not problems and len(cands) >= 200,
            f"{len(cands)} candidates, {successes} isomorphisms" if not problems else "; ".join(sorted(set(problems))))


def test_criterion_08_cleft_round_trip():
    problems = []
    for make in (line_nilpotent, line_semisimple):
        A = make(3, F3)
        P = build_A_a(H4CocycleParam(A, [0, 1, 0]))
        BUILT.append(P)
        ex = extract_from_splitting(P.algebra, P.pi_H, P.i_H)
        BUILT.append(ex.product)
        if not (ex.system.A.same_structure(A) and ex.system.same_tensors(P.system)):
            problems.append(f"{make.__name__}: tensors differ")
        if not (ex.is_isomorphism and ex.stabilizes_A and ex.costabilizes_H):
            problems.append(f"{make.__name__}: psi is not a stabilizing isomorphism")
    verdict(8, "cleft extraction recovers (trivial action, f_y)", not problems, "; ".join(problems))


def test_criterion_09_cocentral_triviality():
    H = sweedler4(F3)
    problems = []
    for A in (line_nilpotent(3, F3), line_semisimple(3, F3), H):
        maps = cocentral_maps(H, A)
        if len(maps) != 1 or maps[0] != unit_counit(H, A):
            problems.append(f"{A!r}: {len(maps)} cocentral maps")
        if A is not H:
            sys = cocycle_from_param(H4CocycleParam(A, [0, 1, 0]))
            t = cohomologous_transform(sys, unit_counit(H, A))
            if not (t.system.same_tensors(sys) and t.iso == LinearMap.identity(product(sys).algebra)):
                problems.append(f"{A!r}: trivial twist is not the identity")
    verdict(9, "only the trivial cocentral map", not problems, "; ".join(problems))


def test_criterion_10_coinvariants():
    products = list(BUILT)
    if not products:
        # run on its own: rebuild the products of the other criteria
        for make in (line_nilpotent, line_semisimple):
            for c in range(3):
                products.append(build_crossed_product(cocycle_from_param(H4CocycleParam(make(3, F3), [0, c, 0]))))
        for A in (sweedler4(F3), sweedler4(QQ), cyclic_group_algebra(2, QQ)):
            products.append(build_crossed_product(CrossedSystem(A, sweedler4(A.field))))
    problems = []
    for P in products:
        co = coinvariants(P.algebra, P.pi_H)
        images = [P.i_A.apply(P.A.basis(i)) for i in range(P.A.dim)]
        F = P.A.field
        same = co.dim == P.A.dim and span_rank(co.basis + images, F) == P.A.dim
        if not same:
            problems.append(repr(P.algebra))
    verdict(10, "coinvariants equal i_A(A)", not problems, f"{len(products)} products" if not problems
            else "; ".join(problems))
