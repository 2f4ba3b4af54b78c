"""Classify crossed products with Sweedler's algebra up to equivalence and isomorphism.

Run with ``python3 demos/02_classification.py``.
"""

import itertools

from hopfcross.catalog import line_nilpotent, line_semisimple
from hopfcross.fields import GF, FieldSpec
from hopfcross.sweedler import classification_report, decide_orbit, iso_test_A_a

F = GF(3)
for make in (line_nilpotent, line_semisimple):
    rep = classification_report(make(3, F))
    d = rep.to_dict()
    print(f"{d['algebra']}: H^2 has {d['h2']['points']} points, {d['crp']['count']} isomorphism classes")
    for c in d["crp"]["classes"]:
        print(f"  class of {c['representative']}: members {c['members']}, |Aut| = {c['aut_order']}")

# y and 2y give isomorphic products; the witness is u(y) = 2y with beta = 1.
A = line_semisimple(3, F)
res = iso_test_A_a(A, [0, 1, 0], [0, 2, 0])
print("\ny vs 2y:", res.status, res.witness)

# Over F3(X1..X5) the elements X_i y give pairwise non-isomorphic products:
# alpha is a constant and beta^2 has even degree, so X_i/X_j is out of reach.
K = FieldSpec.from_flag("f3(X1,X2,X3,X4,X5)")
X = [K.variable(f"X{i}") for i in range(1, 6)]
for i, j in itertools.combinations(range(5), 2):
    print(f"X{i + 1} vs X{j + 1}:", decide_orbit(X[i], X[j], "prime", K).status)
print("X1 vs 2*X1:", decide_orbit(X[0], 2 * X[0], "prime", K).witness)
