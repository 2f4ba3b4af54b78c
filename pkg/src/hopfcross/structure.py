"""Distinguished subsets of a Hopf algebra and cocentral maps.

Linear subsets (primitives, skew-primitives, center, central primitives) are
solved exactly.  Quadratic ones (group-likes, coalgebra maps) are enumerated
over prime fields after imposing every linear constraint first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import sparse as sp
from .errors import BudgetExceeded, NotGroupLike, ShapeMismatch, WrongField
from .hopf import LinearMap, _is_coalgebra_map, convolution, unit_counit
from .linalg import Matrix, rref, solve_linear, span_rank

__all__ = [
    "ElementSubspace",
    "GroupLikeSet",
    "DEFAULT_BUDGET",
    "is_group_like",
    "skew_primitives",
    "primitives",
    "center",
    "zp",
    "group_likes",
    "group_likes_bruteforce",
    "coalgebra_maps",
    "cocentral_maps",
    "is_cocentral",
    "coz1_inverse",
    "check_coz1_group",
    "generated_subalgebra",
    "is_primitively_generated",
]

DEFAULT_BUDGET = 10**6


@dataclass
class ElementSubspace:
    """A subspace given by an echelon basis of dense vectors."""

    algebra: object
    kind: str
    basis: list

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, vec):
        F = self.algebra.field
        if not any(vec):
            return True
        if not self.basis:
            return False
        return span_rank(self.basis + [list(vec)], F) == len(self.basis)

    def __contains__(self, vec):
        return self.contains(vec)

    def elements(self):
        """Every element, for subspaces over a finite field."""
        F = self.algebra.field
        for coeffs in F.vectors(self.dim):
            v = [F.zero] * self.algebra.dim
            for c, b in zip(coeffs, self.basis):
                if c:
                    v = [x + c * y for x, y in zip(v, b)]
            yield v

    def __repr__(self):
        fmt = ", ".join(self.algebra.format(b) for b in self.basis) or "0"
        return f"{self.kind}<{fmt}>"


@dataclass
class GroupLikeSet:
    algebra: object
    elements: list

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _echelon(vectors, field, n):
    if not vectors:
        return []
    rows, piv = rref(vectors, field, n)
    return rows[: len(piv)]


def _subspace(A, kind, equations):
    """Kernel of the linear map ``x -> [eq(x) for eq in equations]`` as an echelon subspace.

    ``equations`` is a list of rows; each row lists one coefficient per basis index.
    """
    F = A.field
    if not equations:
        basis = [A.basis(i) for i in range(A.dim)]
    else:
        basis = solve_linear(Matrix(F, equations, A.dim)).kernel
    return ElementSubspace(A, kind, _echelon(basis, F, A.dim))


def _tensor_rows(A, images):
    """Turn per-basis tensor images ``{(j, k): c}`` into equation rows over ``A.dim`` unknowns."""
    keys = sorted(set().union(*[set(d) for d in images])) if images else []
    F = A.field
    return [[images[i].get(key, F.zero) for i in range(A.dim)] for key in keys]


def is_group_like(A, c):
    v = sp.to_sparse(c)
    return A._eps(v) == A.field.one and A._delta(v) == sp.tensor(v, v)


def skew_primitives(A, g, h):
    """``{x : Delta(x) = x (x) g + h (x) x}``."""
    for w in (g, h):
        if not is_group_like(A, w):
            raise NotGroupLike(f"{A.format(w)} is not group-like")
    gs, hs = sp.to_sparse(g), sp.to_sparse(h)
    images = []
    for i in range(A.dim):
        d = dict(A.comult[i])
        for k, c in gs.items():
            sp.add_term(d, (i, k), -c)
        for k, c in hs.items():
            sp.add_term(d, (k, i), -c)
        images.append(d)
    kind = "Primitives" if gs == A.unit and hs == A.unit else f"SkewPrimitives({A.format(g)},{A.format(h)})"
    return _subspace(A, kind, _tensor_rows(A, images))


def primitives(A):
    one = A.one()
    return skew_primitives(A, one, one)


def _center_rows(A):
    rows = []
    for k in range(A.dim):
        images = [sp.sub(A.mult[k][i], A.mult[i][k]) for i in range(A.dim)]
        for key in sorted(set().union(*[set(d) for d in images])):
            rows.append([images[i].get(key, A.field.zero) for i in range(A.dim)])
    return rows


def center(A):
    return _subspace(A, "Center", _center_rows(A))


def zp(A):
    """Central primitive elements, solved as one joint linear system."""
    one = A.unit
    images = []
    for i in range(A.dim):
        d = dict(A.comult[i])
        for k, c in one.items():
            sp.add_term(d, (i, k), -c)
            sp.add_term(d, (k, i), -c)
        images.append(d)
    return _subspace(A, "CentralPrimitives", _tensor_rows(A, images) + _center_rows(A))


# -- enumeration over prime fields ---------------------------------------------------------


def _require_prime(F):
    if not F.is_finite:
        raise WrongField(f"exhaustive enumeration needs a prime field, not {F}")


def _int_vec(v):
    return [int(x) for x in v]


def _affine_points(p, z0, K, budget, needed=None):
    """Yield chunks of points ``z0 + K t`` (int arrays, one row per point) in lexicographic ``t`` order."""
    k = len(K)
    total = p**k
    if needed is None:
        needed = total
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    z0 = np.array(z0, dtype=np.int64)
    Km = np.array(K, dtype=np.int64).reshape(k, len(z0))
    chunk = max(1, min(total, 1 << 15))
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        T = np.empty((len(idx), k), dtype=np.int64)
        rest = idx.copy()
        for col in range(k - 1, -1, -1):
            T[:, col] = rest % p
            rest //= p
        yield (z0[None, :] + T @ Km) % p


def _comult_tensor(A):
    """Dense ``(n, n, n)`` int array: ``D[i, j, k]`` = coefficient of ``e_j (x) e_k`` in ``Delta(e_i)``."""
    n = A.dim
    D = np.zeros((n, n, n), dtype=np.int64)
    for i, d in enumerate(A.comult):
        for (j, k), c in d.items():
            D[i, j, k] = int(c)
    return D


def _affine_solutions(F, rows, rhs, nvars):
    if not rows:
        return [F.zero] * nvars, [[F.one if j == i else F.zero for j in range(nvars)] for i in range(nvars)]
    sol = solve_linear(Matrix(F, rows, nvars), rhs)
    if sol is None:
        return None, None
    return sol.particular, sol.kernel


def group_likes_bruteforce(A, budget=DEFAULT_BUDGET):
    """All group-like elements of ``A`` over a prime field, by exhaustive scan.

    The scan is restricted to the hyperplane ``epsilon(c) = 1`` and refuses to
    start when ``p^dim`` exceeds ``budget``.
    """
    F = A.field
    _require_prime(F)
    p, n = F.p, A.dim
    needed = p**n
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    z0, K = _affine_solutions(F, [list(A.counit)], [F.one], n)
    D = _comult_tensor(A)
    found = []
    for Z in _affine_points(p, _int_vec(z0), [_int_vec(k) for k in K], budget, needed):
        delta = np.einsum("ni,ijk->njk", Z, D) % p
        outer = (Z[:, :, None] * Z[:, None, :]) % p
        ok = np.all((delta == outer).reshape(len(Z), -1), axis=1)
        found.extend(Z[ok].tolist())
    found.sort()
    return GroupLikeSet(A, [[F(x) for x in v] for v in found])


def group_likes(A, budget=DEFAULT_BUDGET):
    """Group-likes by brute force over prime fields; catalog metadata otherwise."""
    if A.field.is_finite:
        return group_likes_bruteforce(A, budget)
    known = A.meta.get("group_likes")
    if known is None:
        raise WrongField(f"no group-like data for {A!r} over {A.field}")
    return GroupLikeSet(A, [list(v) for v in known])


# -- coalgebra maps H -> A ---------------------------------------------------------------


def _map_unknown(nA, i, k):
    """Variable index of the coefficient of ``e_k`` in ``r(e_i)``."""
    return i * nA + k


def _cocentral_rows(H, A):
    """Linear equations ``r(h_(1)) (x) h_(2) = r(h_(2)) (x) h_(1)``, one row per coordinate."""
    nA, nH, F = A.dim, H.dim, A.field
    rows = []
    for i in range(nH):
        # coefficient of e_k (x) e_l on both sides, as linear forms in r
        forms = {}
        for (j, l), c in H.comult[i].items():
            for k in range(nA):
                sp.add_term(forms.setdefault((k, l), {}), _map_unknown(nA, j, k), c)
                sp.add_term(forms.setdefault((k, j), {}), _map_unknown(nA, l, k), -c)
        for key in sorted(forms):
            if forms[key]:
                rows.append(sp.to_dense(forms[key], nA * nH, F.zero))
    return rows


def _unit_counit_rows(H, A):
    nA, nH, F = A.dim, H.dim, A.field
    rows, rhs = [], []
    # r(1_H) = 1_A
    for k in range(nA):
        row = {}
        for i, c in H.unit.items():
            sp.add_term(row, _map_unknown(nA, i, k), c)
        rows.append(sp.to_dense(row, nA * nH, F.zero))
        rhs.append(A.unit.get(k, F.zero))
    # epsilon_A(r(e_i)) = epsilon_H(e_i)
    for i in range(nH):
        row = {}
        for k in range(nA):
            sp.add_term(row, _map_unknown(nA, i, k), A.counit[k])
        rows.append(sp.to_dense(row, nA * nH, F.zero))
        rhs.append(H.counit[i])
    return rows, rhs


def coalgebra_maps(H, A, cocentral=False, budget=DEFAULT_BUDGET, extra_rows=None):
    """All unitary coalgebra maps ``H -> A``.

    Linear constraints (unitarity, counit compatibility, cocentrality when asked,
    plus any ``extra_rows`` given as ``(row, rhs)`` pairs) are solved first; the
    residual affine space is scanned for the quadratic condition
    ``Delta_A o r = (r (x) r) o Delta_H``.  Results are in lexicographic
    parameter order.  The scan needs a prime field unless the linear
    constraints leave a single candidate.
    """
    F = A.field
    if H.field != F:
        raise ShapeMismatch("coalgebra maps between algebras over different fields")
    nA, nH = A.dim, H.dim
    rows, rhs = _unit_counit_rows(H, A)
    if cocentral:
        cc = _cocentral_rows(H, A)
        rows += cc
        rhs += [F.zero] * len(cc)
    for row, b in extra_rows or []:
        rows.append(list(row))
        rhs.append(b)
    z0, K = _affine_solutions(F, rows, rhs, nA * nH)
    if z0 is None:
        return []
    if not K:
        # the linear constraints pin r down; check it exactly over any field
        cols = [z0[i * nA:(i + 1) * nA] for i in range(nH)]
        r = LinearMap(H, A, Matrix.from_columns(F, cols, nA))
        return [r] if _is_coalgebra_map(r) else []
    _require_prime(F)
    p = F.p
    DA = _comult_tensor(A)
    DH = [[(j, l, int(c)) for (j, l), c in d.items()] for d in H.comult]
    found = []
    for Z in _affine_points(p, _int_vec(z0), [_int_vec(k) for k in K], budget):
        R = Z.reshape(len(Z), nH, nA)
        ok = np.ones(len(Z), dtype=bool)
        for i in range(nH):
            lhs = np.einsum("nk,kab->nab", R[:, i], DA)
            rhs_t = np.zeros_like(lhs)
            for j, l, c in DH[i]:
                rhs_t += c * R[:, j, :, None] * R[:, l, None, :]
            ok &= np.all(((lhs - rhs_t) % p).reshape(len(Z), -1) == 0, axis=1)
            if not ok.any():
                break
        for z in Z[ok].tolist():
            cols = [[F(x) for x in z[i * nA:(i + 1) * nA]] for i in range(nH)]
            found.append(LinearMap(H, A, Matrix.from_columns(F, cols, nA)))
    return found


def cocentral_maps(H, A, budget=DEFAULT_BUDGET):
    """CoZ^1(H, A): all unitary cocentral coalgebra maps ``H -> A``."""
    return coalgebra_maps(H, A, cocentral=True, budget=budget)


def is_cocentral(r):
    """``r(h_(1)) (x) h_(2) = r(h_(2)) (x) h_(1)`` on every basis element; works over any field."""
    H = r.source
    for i in range(H.dim):
        left, right = {}, {}
        for (j, l), c in H.comult[i].items():
            for k, x in r.image(j).items():
                sp.add_term(left, (k, l), c * x)
            for k, x in r.image(l).items():
                sp.add_term(right, (k, j), c * x)
        if left != right:
            return False
    return True


def coz1_inverse(r):
    """Convolution inverse ``S_A o r`` of a unitary cocentral coalgebra map."""
    A = r.target
    return LinearMap(A, A, A.antipode_matrix()) @ r


def check_coz1_group(maps):
    """Verify that a list of maps is a group under convolution with inverse ``S_A o r``.

    Returns ``(ok, message)``.
    """
    if not maps:
        return False, "empty set"
    H, A = maps[0].source, maps[0].target
    unit = unit_counit(H, A)
    if not any(m == unit for m in maps):
        return False, "missing the trivial map"
    for f in maps:
        inv = coz1_inverse(f)
        if convolution(f, inv) != unit or convolution(inv, f) != unit:
            return False, "S_A o r is not a convolution inverse"
        if not any(m == inv for m in maps):
            return False, "not closed under inverses"
        for g in maps:
            fg = convolution(f, g)
            if not any(m == fg for m in maps):
                return False, "not closed under convolution"
    return True, "group"


# -- generation ------------------------------------------------------------------------


def generated_subalgebra(A, vectors):
    """Echelon basis of the unital subalgebra generated by ``vectors``."""
    F = A.field
    basis = _echelon([A.one()] + [list(v) for v in vectors if any(v)], F, A.dim)
    gens = [sp.to_sparse(v) for v in vectors if any(v)]
    while True:
        new = [A.dense(A._mul(sp.to_sparse(b), g)) for b in basis for g in gens]
        grown = _echelon(basis + new, F, A.dim)
        if len(grown) == len(basis):
            return basis
        basis = grown


def is_primitively_generated(A):
    """True when ``1`` and the primitive elements generate ``A`` as an algebra."""
    return len(generated_subalgebra(A, primitives(A).basis)) == A.dim

