"""Build the crossed products A_(a) of a line algebra by Sweedler's algebra.

Run with ``python3 demos/01_sweedler_products.py``.
"""

from hopfcross.catalog import line_nilpotent, line_semisimple
from hopfcross.crossed import coinvariants
from hopfcross.fields import GF
from hopfcross.hopf import verify_hopf
from hopfcross.sweedler import H4CocycleParam, build_A_a, enumerate_h4_systems, presentation_checks

F = GF(3)

# The parameter space is the space of central primitive elements of A.
A = line_nilpotent(3, F)
family = enumerate_h4_systems(A, exhaustive=True)
print(f"{A!r}: family dimension {family.dimension}")
print("certificate:", family.certificate.to_dict())

# a = y gives a 12-dimensional Hopf algebra in which x^2 = y.
P = build_A_a(H4CocycleParam(A, [0, 1, 0]))
E = P.algebra
x = P.pure("1", "x")
print(f"\n{E!r}")
print(verify_hopf(E))
print(presentation_checks(P, [0, 1, 0]))
print("x^2 =", E.format(E.power(x, 2)), "  x^6 =", E.format(E.power(x, 6)))

# In the semisimple line algebra y^3 = y, so x^6 = q^2 x^2 for a = q y.
B = line_semisimple(3, F)
for q in (1, 2):
    Q = build_A_a(H4CocycleParam(B, [0, q, 0]))
    xq = Q.pure("1", "x")
    print(f"q = {q}: x^6 =", Q.algebra.format(Q.algebra.power(xq, 6)),
          " x^2 =", Q.algebra.format(Q.algebra.power(xq, 2)))

# The coinvariants of the projection onto H4 recover A.
co = coinvariants(E, P.pi_H)
print("\ncoinvariants:", co)
