"""Morphisms between crossed products and recovery of a system from a splitting.

Run with ``python3 demos/03_morphisms_and_extraction.py``.
"""

import warnings

from hopfcross.catalog import line_semisimple, sweedler4
from hopfcross.crossed import extract_from_splitting
from hopfcross.errors import HypothesisUnchecked
from hopfcross.fields import GF
from hopfcross.hopf import LinearMap, unit_counit
from hopfcross.morphisms import endo_search_by_generators, stabilization_check, triple_to_map, v_beta
from hopfcross.sweedler import H4CocycleParam, build_A_a

F = GF(3)
A, H = line_semisimple(3, F), sweedler4(F)
Py = build_A_a(H4CocycleParam(A, [0, 1, 0]))

# psi(a # h) = u(a) r(h_(1)) # v(h_(2)) with u = id, r trivial and v = v_beta.
with warnings.catch_warnings():
    warnings.simplefilter("ignore", HypothesisUnchecked)
    for beta in (1, 2):
        res = triple_to_map(LinearMap.identity(A), unit_counit(H, A), v_beta(H, beta), Py, Py)
        st = stabilization_check(res.psi, Py, Py)
        print(f"beta = {beta}: checks ok {res.report.ok}, inverse ok {res.inverse_ok}, {st}")

search = endo_search_by_generators(Py.algebra)
print(f"\nHopf automorphisms of {Py.algebra!r}: {len(search.automorphisms)}"
      f" (generators {search.generators}, {search.candidates} candidates)")

# Starting from the product alone, the projection and its section give the system back.
ex = extract_from_splitting(Py.algebra, Py.pi_H, Py.i_H)
print("\nrecovered the same action and cocycle:", ex.system.same_tensors(Py.system))
print("psi is a stabilizing isomorphism:", ex.is_isomorphism and ex.stabilizes_A and ex.costabilizes_H)
