"""Crossed products with Sweedler's algebra ``H4`` as the acting Hopf algebra.

Every crossed system ``(A, H4, action, f)`` has trivial action and a cocycle
``f_a`` fixed by one central primitive element ``a`` of ``A``.  This module
builds ``f_a`` and the products ``A_(a)``, certifies that the family is
complete, decides when two products are isomorphic (``u(a) = beta^2 b`` for a
Hopf automorphism ``u`` of ``A`` and ``beta`` in ``k*``) and assembles the
classification report.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field

from . import sparse as sp
from .catalog import sweedler4
from .crossed import CrossedSystem, build_crossed_product, system_defects
from .errors import (
    BudgetExceeded,
    FieldMismatch,
    GeneratorsDontSpan,
    HopfError,
    HypothesisUnchecked,
    MalformedData,
    NotCentralPrimitive,
    PreconditionViolated,
    UnknownModel,
    WrongField,
)
from .fields import FieldSpec, field_of, format_scalar
from .hopf import LinearMap, VerificationReport, check_map_properties, unit_counit, verify_hopf
from .linalg import span_rank
from .morphisms import endo_search_by_generators, hopf_maps_by_generators, is_invertible, psi_u_beta
from .structure import DEFAULT_BUDGET, _affine_points, cocentral_maps, is_primitively_generated, zp
from .symbolic import equations_of, evaluate_many, solve_by_propagation, unknown

__all__ = [
    "H4CocycleParam",
    "cocycle_from_param",
    "H4Certificate",
    "H4Family",
    "enumerate_h4_systems",
    "build_A_a",
    "presentation_checks",
    "OrbitWitness",
    "TriState",
    "FinSuppSeq",
    "ScalingModel",
    "FiniteSearchModel",
    "aut_model_for",
    "hopf_map_hypothesis",
    "iso_test_A_a",
    "AutDescription",
    "aut_group_A_a",
    "decide_orbit",
    "decide_seq_equiv",
    "CrpClass",
    "ClassificationReport",
    "classification_report",
]

EQUIVALENT = "Equivalent"
NOT_EQUIVALENT = "NotEquivalent"
UNKNOWN = "Unknown"

_ONE, _G, _X, _GX = 0, 1, 2, 3


# -- the cocycle family --------------------------------------------------------------------


class H4CocycleParam:
    """A central primitive element ``a`` of ``A`` (checked on construction)."""

    def __init__(self, algebra, a):
        F = algebra.field
        vec = [F(c) for c in a] if not isinstance(a, dict) else algebra.dense(a)
        if len(vec) != algebra.dim:
            raise MalformedData(f"parameter needs {algebra.dim} coordinates")
        if not zp(algebra).contains(vec):
            raise NotCentralPrimitive(f"{algebra.format(vec)} is not a central primitive element")
        self.algebra = algebra
        self.a = vec

    def __eq__(self, other):
        if not isinstance(other, H4CocycleParam):
            return NotImplemented
        return self.algebra.same_structure(other.algebra) and self.a == other.a

    __hash__ = None

    def __repr__(self):
        return f"H4CocycleParam({self.algebra.format(self.a)})"


def _fa_table(A, H, a):
    """Cocycle table of ``f_a`` as ``{(i, j): A-vector}``."""
    unit = A.unit
    a = sp.to_sparse(a)
    neg = sp.scale(-A.field.one, a)
    t = {}
    for i in range(H.dim):
        for j in range(H.dim):
            if i == _ONE or j == _ONE or (i, j) == (_G, _G):
                t[(i, j)] = sp.scale(H.counit[i] * H.counit[j], unit)
    t[(_X, _X)] = dict(a)
    t[(_X, _GX)] = dict(neg)
    t[(_GX, _X)] = dict(a)
    t[(_GX, _GX)] = dict(neg)
    return t


def cocycle_from_param(param):
    """Trivial action and the cocycle ``f_a``."""
    A = param.algebra
    H = sweedler4(A.field)
    return CrossedSystem(A, H, "trivial", _fa_table(A, H, param.a))


# -- completeness certificate ------------------------------------------------------------------


@dataclass
class H4Certificate:
    """Evidence that every crossed system over ``H4`` is one of the ``f_a``.

    ``action_forced_trivial``: the unit and symmetry axioms leave exactly the
    trivial action.  With trivial action, the linear axioms cut the cocycle
    unknowns to ``linear_dimension``; propagation then resolves the rest to an
    affine family of dimension ``family_dimension`` that ``family_matches``
    the set ``{f_a : a in zp(A)}``.  ``exhaustive`` (finite fields, optional)
    records a scan of the linear residual with every equation evaluated.
    """

    action_forced_trivial: bool
    unknowns: int
    equations: int
    linear_dimension: int
    family_dimension: int
    zp_dimension: int
    resolved: bool
    family_matches: bool
    exhaustive: dict | None = None

    @property
    def complete(self):
        ok = self.action_forced_trivial and self.resolved and self.family_matches
        if self.exhaustive is not None:
            ok = ok and self.exhaustive["all_in_family"] and self.exhaustive["solutions"] == self.exhaustive["expected"]
        return ok

    def to_dict(self):
        return {
            "complete": self.complete,
            "action_forced_trivial": self.action_forced_trivial,
            "unknowns": self.unknowns,
            "equations": self.equations,
            "linear_dimension": self.linear_dimension,
            "family_dimension": self.family_dimension,
            "zp_dimension": self.zp_dimension,
            "resolved": self.resolved,
            "family_matches": self.family_matches,
            "exhaustive": self.exhaustive,
        }


@dataclass
class H4Family:
    """All crossed systems ``(A, H4, ...)``: one ``f_a`` per ``a`` in ``zp(A)``."""

    algebra: object
    basis: list
    certificate: H4Certificate

    @property
    def dimension(self):
        return len(self.basis)

    def params(self):
        """Every parameter, for a finite field, in lexicographic coordinate order."""
        A = self.algebra
        for coeffs in A.field.vectors(len(self.basis)):
            v = [A.field.zero] * A.dim
            for c, b in zip(coeffs, self.basis):
                if c:
                    v = [x + c * y for x, y in zip(v, b.a)]
            yield H4CocycleParam(A, v)


def _cocycle_vector(A, H, table):
    F = A.field
    nA, nH = A.dim, H.dim
    z = [F.zero] * (nH * nH * nA)
    for (i, j), vec in table.items():
        for k, c in vec.items():
            z[(i * nH + j) * nA + k] = c
    return z


def _action_forced_trivial(A, H):
    F = A.field
    nA, nH = A.dim, H.dim
    act = [[{k: unknown(F, (i * nA + j) * nA + k) for k in range(nA)} for j in range(nA)] for i in range(nH)]
    sys = CrossedSystem(A, H, act, "trivial", coerce=False)
    eqs = equations_of([d for _, _, d in system_defects(sys, ["weak_action_unit", "action_symmetry"])], F)
    sol = solve_by_propagation(F, eqs, nH * nA * nA, linear_only=True)
    if not sol.resolved or sol.dimension:
        return False
    trivial = [F.zero] * (nH * nA * nA)
    for i in range(nH):
        for j in range(nA):
            if H.counit[i]:
                trivial[(i * nA + j) * nA + j] = H.counit[i]
    return list(sol.z0) == trivial


def _exhaustive(F, eqs, lin, family_z, budget):
    p = F.p
    allowed = {tuple(int(c) for c in z) for z in family_z}
    solutions, outside, scanned = 0, 0, 0
    z0 = [int(c) for c in lin.z0]
    K = [[int(c) for c in k] for k in lin.K]
    for Z in _affine_points(p, z0, K, budget):
        scanned += len(Z)
        ok = evaluate_many(eqs, Z, p)
        for row in Z[ok]:
            solutions += 1
            if tuple(int(c) for c in row) not in allowed:
                outside += 1
    return {"points": scanned, "solutions": solutions, "expected": len(allowed),
            "all_in_family": outside == 0}


def enumerate_h4_systems(A, exhaustive=False, budget=DEFAULT_BUDGET):
    """The family ``{f_a : a in zp(A)}`` and a completeness certificate.

    The certificate solves the crossed-system axioms with symbolic unknowns:
    first the action (trivial cocycle), then the cocycle (trivial action),
    propagating linear consequences until nothing nonlinear remains.  With
    ``exhaustive`` over a prime field, every point of the linear residual is
    tested against all equations; this raises BudgetExceeded when the
    residual has more than ``budget`` points.
    """
    F = A.field
    H = sweedler4(F)
    Z = zp(A)
    basis = [H4CocycleParam(A, b) for b in Z.basis]
    forced = _action_forced_trivial(A, H)

    nA, nH = A.dim, H.dim
    nvars = nH * nH * nA
    coc = [[{k: unknown(F, (i * nH + j) * nA + k) for k in range(nA)} for j in range(nH)] for i in range(nH)]
    sys = CrossedSystem(A, H, "trivial", coc, coerce=False)
    eqs = equations_of([d for _, _, d in system_defects(sys)], F)
    eqs = [e for e in eqs if e]
    lin = solve_by_propagation(F, eqs, nvars, linear_only=True)
    full = solve_by_propagation(F, eqs, nvars)

    f0 = _cocycle_vector(A, H, _fa_table(A, H, [F.zero] * nA))
    directions = [[x - y for x, y in zip(_cocycle_vector(A, H, _fa_table(A, H, b.a)), f0)] for b in basis]
    matches = False
    if full.resolved:
        offset = [x - y for x, y in zip(full.z0, f0)]
        r = span_rank(directions, F) if directions else 0
        matches = (full.dimension == len(basis) and r == len(basis)
                   and span_rank(directions + list(full.K), F) == r
                   and (span_rank(directions + [offset], F) == r if any(offset) else True))
    ex = None
    if exhaustive:
        if not F.is_finite:
            raise HopfError("exhaustive confirmation needs a prime field")
        needed = F.p ** lin.dimension
        if needed > budget:
            raise BudgetExceeded(needed, budget)
        family_z = [_cocycle_vector(A, H, _fa_table(A, H, prm.a)) for prm in H4Family(A, basis, None).params()]
        ex = _exhaustive(F, eqs, lin, family_z, budget)
    cert = H4Certificate(forced, nvars, len(eqs), lin.dimension, full.dimension, Z.dim,
                         full.resolved, matches, ex)
    return H4Family(A, basis, cert)


# -- the products A_(a) ------------------------------------------------------------------------


def presentation_checks(P, a):
    """Defining relations and Hopf structure of ``A_(a)`` on the generators ``g = 1#g``, ``x = 1#x``."""
    E = P.algebra
    A = P.A
    F = A.field
    one = E.one()
    H = P.H
    g, x, gx = (P.element(A.one(), H.basis(lab)) for lab in ("g", "x", "gx"))
    a_img = P.i_A.apply(a)
    neg = lambda v: [-c for c in v]  # noqa: E731
    rep = VerificationReport()

    def check(name, ok, witness):
        rep.add(name, None if ok else witness)

    check("g^2 = 1", E.mul(g, g) == one, ("g",))
    check("x^2 = a", E.mul(x, x) == a_img, ("x",))
    check("xg = -gx", E.mul(x, g) == neg(E.mul(g, x)), ("x", "g"))
    check("g x = gx", E.mul(g, x) == gx, ("g", "x"))
    bad_g = bad_x = None
    for j in range(A.dim):
        b = P.i_A.apply(A.basis(j))
        if bad_g is None and E.mul(g, b) != E.mul(b, g):
            bad_g = (A.labels[j],)
        if bad_x is None and E.mul(x, b) != E.mul(b, x):
            bad_x = (A.labels[j],)
    check("g central over A", bad_g is None, bad_g)
    check("x central over A", bad_x is None, bad_x)

    gs, xs = sp.to_sparse(g), sp.to_sparse(x)
    tg = {}
    for i, c in gs.items():
        for j, d in gs.items():
            tg[(i, j)] = c * d
    tx = {}
    for i, c in xs.items():
        for j in E.unit:
            sp.add_term(tx, (i, j), c * E.unit[j])
        for j, d in gs.items():
            sp.add_term(tx, (j, i), d * c)
    check("Delta(g) = g (x) g", E._delta(gs) == {k: v for k, v in tg.items() if v}, ("g",))
    check("Delta(x) = x (x) 1 + g (x) x", E._delta(xs) == tx, ("x",))
    check("epsilon(g) = 1, epsilon(x) = 0", E.counit_of(g) == F.one and E.counit_of(x) == F.zero, ("g", "x"))
    check("S(g) = g", E.antipode_of(g) == g, ("g",))
    check("S(x) = -gx", E.antipode_of(x) == neg(gx), ("x",))
    bad = None
    for j in range(A.dim):
        b = A.basis(j)
        if E.antipode_of(P.i_A.apply(b)) != P.i_A.apply(A.antipode_of(b)):
            bad = (A.labels[j],)
            break
    check("S restricts to S_A", bad is None, bad)
    return rep


def build_A_a(param):
    """``A_(a)``: the crossed product for ``f_a``, with its presentation verified."""
    P = build_crossed_product(cocycle_from_param(param))
    rep = presentation_checks(P, param.a)
    if not rep.ok:
        raise HopfError(f"A_(a) presentation failed: {rep.failed_names()}")
    return P


# -- decision results ----------------------------------------------------------------------------


@dataclass
class OrbitWitness:
    """Scalars ``alpha``, ``beta`` (and possibly a map ``u``) satisfying ``relation``."""

    alpha: object
    beta: object
    relation: str
    u: LinearMap | None = None

    def to_dict(self):
        d = {"alpha": None if self.alpha is None else format_scalar(self.alpha),
             "beta": format_scalar(self.beta), "relation": self.relation}
        if self.u is not None:
            d["u"] = [[format_scalar(c) for c in row] for row in self.u.matrix.data]
        return d


@dataclass
class TriState:
    status: str
    witness: OrbitWitness | None = None
    reason: str = ""
    iso: LinearMap | None = None

    def __post_init__(self):
        if self.status not in (EQUIVALENT, NOT_EQUIVALENT, UNKNOWN):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == EQUIVALENT and self.witness is None:
            raise ValueError("an Equivalent verdict needs a witness")

    @classmethod
    def equivalent(cls, witness, reason="", iso=None):
        return cls(EQUIVALENT, witness, reason, iso)

    @classmethod
    def not_equivalent(cls, reason):
        return cls(NOT_EQUIVALENT, None, reason)

    @classmethod
    def unknown(cls, reason):
        return cls(UNKNOWN, None, reason)

    @property
    def decided(self):
        return self.status != UNKNOWN

    @property
    def is_equivalent(self):
        return self.status == EQUIVALENT

    def to_dict(self):
        return {"status": self.status, "reason": self.reason,
                "witness": None if self.witness is None else self.witness.to_dict()}


# -- scalar orbit problems -----------------------------------------------------------------------


def _subgroup_units(spec, subgroup):
    """Finite list of the allowed ``alpha`` values, or None when infinite."""
    if spec.is_finite:
        return list(spec.units())
    if subgroup == "prime" and spec.kind == "Fp(X)":
        return [spec(c) for c in range(1, spec.p)]
    return None


def _normalize_subgroup(name):
    aliases = {"full": "full", "FullUnits": "full", "prime": "prime", "prime-subfield": "prime",
               "PrimeSubfieldUnits": "prime"}
    if name not in aliases:
        raise MalformedData(f"unknown scalar subgroup {name!r}")
    return aliases[name]


def _monomial(spec, coeff, exponents):
    v = spec(coeff)
    for name, e in zip(spec.variables, exponents):
        x = spec.variable(name)
        if e >= 0:
            for _ in range(e):
                v = v * x
        else:
            for _ in range(-e):
                v = v / x
    return v


def decide_orbit(q, qprime, scalar_subgroup="full", spec=None):
    """Decide ``alpha q = beta^2 q'`` for some ``alpha`` in the subgroup and ``beta`` in ``k*``."""
    sub = _normalize_subgroup(scalar_subgroup)
    if spec is None:
        spec = field_of(q)
    q, qp = spec(q), spec(qprime)
    rel = "alpha*q = beta^2*q'"
    if not q and not qp:
        return TriState.equivalent(OrbitWitness(spec.one, spec.one, rel), "both zero")
    if not q or not qp:
        return TriState.not_equivalent("zero is only related to zero")
    if spec.is_finite:
        for alpha in spec.units():
            for beta in spec.units():
                if alpha * q == beta * beta * qp:
                    return TriState.equivalent(OrbitWitness(alpha, beta, rel), "brute force over units")
        return TriState.not_equivalent("no pair (alpha, beta) in the exhaustive search")
    if spec.kind == "Q":
        return TriState.equivalent(OrbitWitness(qp / q, spec.one, rel), "alpha = q'/q")
    lm = (q / qp).laurent_monomial()
    if sub == "full":
        if lm is not None and all(e % 2 == 0 for e in lm[1]):
            beta = _monomial(spec, 1, [e // 2 for e in lm[1]])
            alpha = beta * beta * qp / q
            return TriState.equivalent(OrbitWitness(alpha, beta, rel), "q/q' is a constant times a square")
        return TriState.equivalent(OrbitWitness(qp / q, spec.one, rel), "alpha = q'/q")
    if lm is None:
        return TriState.unknown("q/q' is not a Laurent monomial")
    c, exps = lm
    odd = [name for name, e in zip(spec.variables, exps) if e % 2]
    if odd:
        return TriState.not_equivalent(
            f"the degree of q/q' in {odd[0]} is odd, while alpha is constant and beta^2 has even degree")
    half = [e // 2 for e in exps]
    for a0 in range(1, spec.p):
        for b0 in range(1, spec.p):
            if (a0 * c - b0 * b0) % spec.p == 0:
                beta = _monomial(spec, b0, half)
                return TriState.equivalent(OrbitWitness(spec(a0), beta, rel), "even exponents, constants matched")
    return TriState.not_equivalent("the constant of q/q' is not matched by any alpha in F_p*")


class FinSuppSeq:
    """A finitely supported sequence ``(alpha_i)`` over a field of characteristic ``p``."""

    def __init__(self, p, entries):
        self.p = p
        self.entries = {int(i): c for i, c in dict(entries).items() if c}
        if any(i < 0 for i in self.entries):
            raise MalformedData("sequence indices must be >= 0")

    @property
    def support(self):
        return sorted(self.entries)

    def __eq__(self, other):
        if not isinstance(other, FinSuppSeq):
            return NotImplemented
        return self.p == other.p and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"FinSuppSeq(p={self.p}, {self.entries})"


def _solve_exponents(pis, targets):
    """Integers ``(A, B)`` with ``pi * A - 2 B = t`` for every pair, or None."""
    # with two or more equations A is pinned down by any pair with different pi
    base_p, base_t = pis[0], targets[0]
    cand = None
    for pi, t in zip(pis[1:], targets[1:]):
        if pi != base_p:
            num = t - base_t
            den = pi - base_p
            if num % den:
                return None
            cand = num // den
            break
    if cand is None:
        # a single distinct equation: pick A with p^i A = t (mod 2)
        cand = base_t % 2
    for pi, t in zip(pis, targets):
        if (pi * cand - t) % 2:
            return None
    B = (base_p * cand - base_t) // 2
    if any(pi * cand - 2 * B != t for pi, t in zip(pis, targets)):
        return None
    return cand, B


def decide_seq_equiv(s, t, spec):
    """Decide ``alpha^(p^i) s_i = beta^2 t_i`` for all ``i`` with ``alpha, beta`` in ``k*``."""
    if spec.kind == "Q" or s.p != spec.p or t.p != spec.p:
        raise FieldMismatch(f"sequences need characteristic {spec.characteristic or 'p'} matching {spec}")
    rel = "alpha^(p^i)*s_i = beta^2*t_i"
    sv = {i: spec(c) for i, c in s.entries.items()}
    tv = {i: spec(c) for i, c in t.entries.items()}
    sv = {i: c for i, c in sv.items() if c}
    tv = {i: c for i, c in tv.items() if c}
    if set(sv) != set(tv):
        i = min(set(sv) ^ set(tv))
        return TriState.not_equivalent(f"supports differ at index {i}")
    if not sv:
        return TriState.equivalent(OrbitWitness(spec.one, spec.one, rel), "both zero")
    p = spec.p
    if sv == tv:
        return TriState.equivalent(OrbitWitness(spec.one, spec.one, rel), "identical sequences")
    if len(sv) == 1:
        (i, si), = sv.items()
        c = tv[i] / si
        # alpha = c, beta = c^((p^i - 1)/2) gives alpha^(p^i) = beta^2 c
        alpha = c
        beta = spec.one
        for _ in range((p**i - 1) // 2):
            beta = beta * c
        return TriState.equivalent(OrbitWitness(alpha, beta, rel), "single index, explicit witness")
    idx = sorted(sv)
    if spec.is_finite:
        for alpha in spec.units():
            for beta in spec.units():
                if all(alpha ** (p**i) * sv[i] == beta * beta * tv[i] for i in idx):
                    return TriState.equivalent(OrbitWitness(alpha, beta, rel), "brute force over units")
        return TriState.not_equivalent("no pair (alpha, beta) in the exhaustive search")
    ratios = [(tv[i] / sv[i]).laurent_monomial() for i in idx]
    if any(r is None for r in ratios):
        return TriState.unknown("a ratio t_i/s_i is not a Laurent monomial")
    # alpha^(p^i - p^j) is a monomial for every pair, so alpha and beta are monomials a0 X^A, b0 X^B
    pis = [p**i for i in idx]
    nv = len(spec.variables)
    A_exp, B_exp = [], []
    for v in range(nv):
        sol = _solve_exponents(pis, [r[1][v] for r in ratios])
        if sol is None:
            return TriState.not_equivalent(
                f"no monomial exponents in {spec.variables[v]} satisfy p^i*A - 2*B = deg_i")
        A_exp.append(sol[0])
        B_exp.append(sol[1])
    for a0 in range(1, p):
        for b0 in range(1, p):
            if all((pow(a0, pi, p) - b0 * b0 * r[0]) % p == 0 for pi, r in zip(pis, ratios)):
                alpha = _monomial(spec, a0, A_exp)
                beta = _monomial(spec, b0, B_exp)
                assert all(alpha ** (p**i) * sv[i] == beta * beta * tv[i] for i in idx)
                return TriState.equivalent(OrbitWitness(alpha, beta, rel), "monomial ansatz")
    return TriState.not_equivalent("no constants a0, b0 in F_p* match the monomial ansatz")


# -- automorphism models -------------------------------------------------------------------------


class ScalingModel:
    """Hopf automorphisms ``u_alpha: e_i -> alpha^(degree_i) e_i``.

    ``units`` is ``"full"`` (alpha in ``k*``) or ``"prime"`` (alpha in ``F_p*``).
    """

    name = "scaling"

    def __init__(self, degrees, units="full"):
        self.degrees = tuple(int(d) for d in degrees)
        self.units = _normalize_subgroup(units)

    def u(self, A, alpha):
        if len(self.degrees) != A.dim:
            raise UnknownModel(f"scaling model has {len(self.degrees)} degrees, algebra has dimension {A.dim}")
        F = A.field
        alpha = F(alpha)
        imgs = []
        for i, d in enumerate(self.degrees):
            c = F.one
            for _ in range(d):
                c = c * alpha
            imgs.append({i: c})
        return LinearMap.from_images(A, A, imgs)

    def alphas(self, F):
        return _subgroup_units(F, self.units)

    def automorphisms(self, A):
        al = self.alphas(A.field)
        if al is None:
            raise UnknownModel(f"Aut_Hopf is infinite over {A.field}; it cannot be enumerated")
        return [(alpha, self.u(A, alpha)) for alpha in al]

    def __repr__(self):
        return f"ScalingModel({self.degrees}, {self.units!r})"


class FiniteSearchModel:
    """Hopf automorphisms found by exhaustive generator-image search over a prime field."""

    name = "search"

    def __init__(self, generators=None, budget=DEFAULT_BUDGET):
        self.generators = generators
        self.budget = budget
        self._cache = {}

    def automorphisms(self, A):
        if not A.field.is_finite:
            raise UnknownModel(f"generator search needs a prime field, not {A.field}")
        key = id(A)
        if key not in self._cache:
            res = endo_search_by_generators(A, self.generators, self.budget)
            self._cache[key] = (A, [(None, u) for u in res.automorphisms])
        return self._cache[key][1]

    def __repr__(self):
        return "FiniteSearchModel()"


def aut_model_for(A, name="auto", budget=DEFAULT_BUDGET):
    """``scaling`` (catalog metadata), ``search`` (prime fields) or ``auto`` (scaling if known)."""
    scaling = A.meta.get("aut_scaling")
    if name in ("auto", "scaling") and scaling is not None:
        return ScalingModel(*scaling)
    if name == "scaling":
        raise UnknownModel(f"no scaling description of Aut_Hopf for {A!r}")
    if name in ("auto", "search"):
        if not A.field.is_finite:
            raise UnknownModel(f"no automorphism model for {A!r} over {A.field}")
        return FiniteSearchModel(budget=budget)
    raise UnknownModel(f"unknown automorphism model {name!r}")


# -- isomorphism of the A_(a) ---------------------------------------------------------------------


def hopf_map_hypothesis(A, budget=DEFAULT_BUDGET):
    """Whether the only Hopf map ``A -> H4`` is the trivial one.

    Returns ``("certified", reason)`` or ``("unchecked", reason)``; raises
    PreconditionViolated when a nontrivial map is found.
    """
    if is_primitively_generated(A):
        return "certified", "A is generated by primitives and H4 has no nonzero primitives"
    F = A.field
    if F.is_finite:
        H = sweedler4(F)
        try:
            res = hopf_maps_by_generators(A, H, budget=budget)
        except (GeneratorsDontSpan, BudgetExceeded) as exc:
            return "unchecked", f"generator search unavailable: {exc}"
        triv = LinearMap.from_images(A, H, [sp.scale(c, H.unit) for c in A.counit])
        if any(m != triv for m in res.maps):
            raise PreconditionViolated("A has a nontrivial Hopf map to H4")
        return "certified", "generator search found only the trivial map"
    return "unchecked", "A is not generated by primitives and the field is infinite"


def _check_param(A, a):
    return H4CocycleParam(A, a).a


def _coords_single(A, a, b):
    """``(index, qa, qb)`` when ``a`` and ``b`` are multiples of one basis vector, else None."""
    sa = {i for i, c in enumerate(a) if c}
    sb = {i for i, c in enumerate(b) if c}
    idx = sa | sb
    if len(idx) != 1:
        return None
    (i,) = idx
    return i, a[i], b[i]


def _witness_iso(A, a, b, u, beta):
    src = build_A_a(H4CocycleParam(A, a))
    dst = build_A_a(H4CocycleParam(A, b))
    psi = psi_u_beta(u, beta, src, dst)
    props = check_map_properties(psi)
    if not (props.is_hopf_map and is_invertible(psi)):
        raise HopfError("psi_(u, beta) failed verification")
    return psi


def iso_test_A_a(A, a, b, aut_model=None, build_witness=True, budget=DEFAULT_BUDGET):
    """Decide whether ``A_(a)`` and ``A_(b)`` are isomorphic by ``u(a) = beta^2 b``.

    Equivalent verdicts carry ``(u, beta)`` and, with ``build_witness``, the
    verified isomorphism ``z # h -> u(z) # v_beta(h)``.
    """
    F = A.field
    a, b = _check_param(A, a), _check_param(A, b)
    rel = "u(a) = beta^2*b"
    ident = LinearMap.identity(A)
    if a == b:
        iso = _witness_iso(A, a, b, ident, F.one) if build_witness else None
        return TriState.equivalent(OrbitWitness(F.one, F.one, rel, ident), "a = b", iso)
    if not any(a) or not any(b):
        return TriState.not_equivalent("u(a) = beta^2 b forces a = 0 iff b = 0")
    status, why = hopf_map_hypothesis(A, budget)
    if status != "certified":
        warnings.warn(HypothesisUnchecked(why), stacklevel=2)
        return TriState.unknown(f"hypothesis unchecked: {why}")
    if aut_model is None:
        try:
            aut_model = aut_model_for(A)
        except UnknownModel as exc:
            return TriState.unknown(str(exc))

    def done(alpha, u, beta, reason):
        iso = _witness_iso(A, a, b, u, beta) if build_witness else None
        return TriState.equivalent(OrbitWitness(alpha, beta, rel, u), reason, iso)

    if isinstance(aut_model, ScalingModel):
        if len(aut_model.degrees) != A.dim:
            raise UnknownModel("scaling model does not match the algebra")
        if {i for i, c in enumerate(a) if c} != {i for i, c in enumerate(b) if c}:
            return TriState.not_equivalent("u_alpha and beta^2 preserve the support of a")
        alphas = aut_model.alphas(F)
        if F.is_finite:
            for alpha in alphas:
                u = aut_model.u(A, alpha)
                ua = u.apply(a)
                for beta in F.units():
                    if ua == [beta * beta * c for c in b]:
                        return done(alpha, u, beta, "exhaustive search over (alpha, beta)")
            return TriState.not_equivalent("no (alpha, beta) in the exhaustive search")
        single = _coords_single(A, a, b)
        if single is not None and aut_model.degrees[single[0]] == 1:
            i, qa, qb = single
            res = decide_orbit(qa, qb, aut_model.units, F)
            if res.is_equivalent:
                alpha, beta = res.witness.alpha, res.witness.beta
                return done(alpha, aut_model.u(A, alpha), beta, res.reason)
            return res
        return TriState.unknown("scaling model over an infinite field with multi-degree support")
    try:
        autos = aut_model.automorphisms(A)
    except UnknownModel as exc:
        return TriState.unknown(str(exc))
    if not F.is_finite:
        return TriState.unknown("beta ranges over an infinite field")
    for alpha, u in autos:
        ua = u.apply(a)
        for beta in F.units():
            if ua == [beta * beta * c for c in b]:
                return done(alpha, u, beta, "exhaustive search over Aut_Hopf(A) x k*")
    return TriState.not_equivalent(f"no pair among {len(autos)} automorphisms and all beta")


@dataclass
class AutDescription:
    """The group ``{(u, beta) : u(a) = beta^2 a}`` of Hopf automorphisms of ``A_(a)``."""

    condition: str
    order: int | None
    elements: list = dc_field(default_factory=list)
    verified: bool | None = None

    def to_dict(self):
        return {"condition": self.condition, "order": self.order, "verified": self.verified,
                "elements": [{"alpha": None if al is None else format_scalar(al), "beta": format_scalar(be)}
                             for al, _, be in self.elements]}


def aut_group_A_a(A, a, aut_model=None, verify=True):
    """Enumerate ``G(a)`` over a finite field, each element checked as a Hopf automorphism of ``A_(a)``.

    Over infinite fields only the defining condition is returned (order None).
    """
    F = A.field
    a = _check_param(A, a)
    if aut_model is None:
        aut_model = aut_model_for(A)
    cond = "u(a) = beta^2*a"
    if isinstance(aut_model, ScalingModel):
        cond = f"alpha-scaling(a) = beta^2*a, alpha in {'F_p*' if aut_model.units == 'prime' else 'k*'}"
    if not F.is_finite:
        if not isinstance(aut_model, ScalingModel):
            raise UnknownModel(f"no automorphism model for {A!r} over {F}")
        return AutDescription(cond, None)
    elems = []
    for alpha, u in aut_model.automorphisms(A):
        ua = u.apply(a)
        for beta in F.units():
            if ua == [beta * beta * c for c in a]:
                elems.append((alpha, u, beta))
    ok = None
    if verify:
        P = build_A_a(H4CocycleParam(A, a))
        ok = True
        for _, u, beta in elems:
            psi = psi_u_beta(u, beta, P, P)
            if not (check_map_properties(psi).is_hopf_map and is_invertible(psi)):
                ok = False
                break
    return AutDescription(cond, len(elems), elems, ok)


# -- classification ------------------------------------------------------------------------------


@dataclass
class CrpClass:
    representative: list
    members: list
    witnesses: list
    aut: AutDescription | None
    product_verified: bool
    undecided: bool = False


@dataclass
class ClassificationReport:
    algebra: object
    field: FieldSpec
    zp_basis: list
    h2_points: int | None
    coz1_trivial: bool | None
    certificate: H4Certificate
    hypothesis: tuple
    classes: list
    pairwise: list
    aut_model: str

    @property
    def h2_dimension(self):
        return len(self.zp_basis)

    @property
    def decided(self):
        return (bool(self.classes) and self.hypothesis[0] == "certified"
                and all(not c.undecided for c in self.classes)
                and all(t.decided for _, _, t in self.pairwise))

    @property
    def crp_count(self):
        return len(self.classes)

    def to_dict(self):
        A = self.algebra
        fmt = lambda v: A.format(v)  # noqa: E731
        return {
            "algebra": A.meta.get("name", repr(A)),
            "field": str(self.field),
            "zp_basis": [fmt(b) for b in self.zp_basis],
            "h2": {"dimension": self.h2_dimension, "points": self.h2_points,
                   "description": "H^2(H4, A) is parameterized by zp(A)",
                   "coz1_trivial": self.coz1_trivial},
            "certificate": self.certificate.to_dict(),
            "hypothesis": {"status": self.hypothesis[0], "reason": self.hypothesis[1]},
            "aut_model": self.aut_model,
            "crp": {
                "count": self.crp_count,
                "decided": self.decided,
                "classes": [
                    {"representative": fmt(c.representative),
                     "members": [fmt(m) for m in c.members],
                     "witnesses": [dict(member=fmt(m), **w.to_dict()) for m, w in c.witnesses],
                     "aut_order": None if c.aut is None else c.aut.order,
                     "product_verified": c.product_verified,
                     "undecided": c.undecided}
                    for c in self.classes
                ],
                "pairwise": [{"i": i, "j": j, **t.to_dict()} for i, j, t in self.pairwise],
            },
        }


def _coz1_trivial(A, budget):
    try:
        maps = cocentral_maps(sweedler4(A.field), A, budget)
    except WrongField:
        return None
    return len(maps) == 1 and maps[0] == unit_counit(sweedler4(A.field), A)


def classification_report(A, aut_model=None, representatives=None, budget=DEFAULT_BUDGET,
                          exhaustive=False):
    """``H^2(H4, A)`` and ``Crp(H4, A)``: the zp basis and the orbit classes of ``zp(A)``.

    Over a prime field every element of ``zp(A)`` is classified; otherwise the
    caller's ``representatives`` (or ``0`` alone when ``zp(A) = 0``) are
    compared pairwise.
    """
    F = A.field
    fam = enumerate_h4_systems(A, exhaustive=exhaustive, budget=budget)
    zbasis = [b.a for b in fam.basis]
    if aut_model is None and zbasis:
        aut_model = aut_model_for(A, budget=budget)
    model_name = "none" if aut_model is None else aut_model.name
    try:
        coz1 = _coz1_trivial(A, budget)
    except BudgetExceeded:
        coz1 = None
    zero = [F.zero] * A.dim
    if not zbasis:
        hyp = ("certified", "zp(A) = 0, only the tensor product occurs")
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", HypothesisUnchecked)
            hyp = hopf_map_hypothesis(A, budget)
    if F.is_finite:
        points = list(H4Family(A, fam.basis, fam.certificate).params())
        h2 = len(points)
        candidates = [p.a for p in points]
    else:
        h2 = None
        if representatives is None:
            candidates = [zero] if not zbasis else []
        else:
            candidates = [_check_param(A, r) for r in representatives]
    classes = []
    pairwise = []
    for vec in candidates:
        placed = False
        results = []
        for ci, cls in enumerate(classes):
            if cls.undecided:
                continue
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", HypothesisUnchecked)
                res = iso_test_A_a(A, cls.representative, vec, aut_model, build_witness=True, budget=budget)
            results.append((ci, res))
            if res.is_equivalent:
                cls.members.append(vec)
                cls.witnesses.append((vec, res.witness))
                placed = True
                break
        if placed:
            continue
        undecided = any(not r.decided for _, r in results)
        P = build_A_a(H4CocycleParam(A, vec))
        verified = verify_hopf(P.algebra).ok
        aut = None
        if F.is_finite and aut_model is not None:
            aut = aut_group_A_a(A, vec, aut_model)
        idx = len(classes)
        for ci, r in results:
            pairwise.append((ci, idx, r))
        classes.append(CrpClass(vec, [vec], [], aut, verified, undecided))
    if not F.is_finite and representatives is None and zbasis:
        classes = []
    return ClassificationReport(A, F, zbasis, h2, coz1, fam.certificate, hyp, classes, pairwise, model_name)
