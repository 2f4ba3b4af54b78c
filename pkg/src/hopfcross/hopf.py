"""Finite-dimensional Hopf algebras given by structure constants.

A :class:`HopfAlgebra` stores, for a fixed basis ``e_0 .. e_{n-1}``:

* ``mult[i][j]``: the product ``e_i e_j`` as a sparse vector,
* ``unit``: the unit as a sparse vector,
* ``comult[i]``: ``Delta(e_i)`` as ``{(j, k): c}``,
* ``counit[i]``: ``epsilon(e_i)``,
* ``antipode[i]``: ``S(e_i)`` as a sparse vector.

Public methods take and return dense coordinate lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from . import sparse as sp
from .errors import FieldMismatch, HopfError, MalformedData, ShapeMismatch
from .linalg import Matrix

__all__ = [
    "HopfAlgebra",
    "LinearMap",
    "Check",
    "VerificationReport",
    "MapProperties",
    "verify_hopf",
    "tensor_hopf",
    "convolution",
    "check_map_properties",
    "unit_counit",
    "perturb",
    "structure_entries",
]


@dataclass
class Check:
    name: str
    passed: bool
    witness: tuple | None = None

    def __str__(self):
        if self.passed:
            return f"PASS {self.name}"
        return f"FAIL {self.name} at {self.witness}"


@dataclass
class VerificationReport:
    """Named checks in a fixed order; a failing check keeps its first witness."""

    checks: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.ok

    def add(self, name, witness=None):
        self.checks.append(Check(name, witness is None, witness))

    def failed_names(self):
        return [c.name for c in self.checks if not c.passed]

    def get(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness))
        return self

    def to_dict(self):
        return {
            "ok": self.ok,
            "checks": [{"name": c.name, "passed": c.passed,
                        "witness": None if c.witness is None else list(c.witness)} for c in self.checks],
        }

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


def _coerce_vec(field, v, n, what):
    if isinstance(v, dict):
        out = {}
        for k, x in v.items():
            if not (0 <= k < n):
                raise MalformedData(f"{what}: index {k} out of range")
            x = field(x)
            if x:
                out[k] = x
        return out
    v = list(v)
    if len(v) != n:
        raise MalformedData(f"{what}: expected {n} coordinates, got {len(v)}")
    return {i: field(x) for i, x in enumerate(v) if x}


class HopfAlgebra:
    """Structure-constant Hopf algebra over an exact field.

    ``mult`` may be a dict ``{(i, j): vector}`` (missing pairs are zero) or an
    ``n x n`` nested list of vectors; vectors are dense lists or ``{k: c}``.
    ``comult`` is a list with one entry per basis element, either
    ``{(j, k): c}`` or a list of ``(j, k, c)`` triples.
    ``antipode`` lists ``S(e_i)`` per basis element, or is a :class:`Matrix`
    whose column ``i`` is ``S(e_i)``.
    """

    def __init__(self, field, labels, mult, unit, comult, counit, antipode, meta=None):
        self.field = field
        self.labels = tuple(labels)
        n = self.dim = len(self.labels)
        if n == 0:
            raise MalformedData("dimension must be positive")
        if len(set(self.labels)) != n:
            raise MalformedData("basis labels must be distinct")
        self.index = {lab: i for i, lab in enumerate(self.labels)}

        table = [[{} for _ in range(n)] for _ in range(n)]
        if isinstance(mult, dict):
            for key, v in mult.items():
                i, j = key
                if not (0 <= i < n and 0 <= j < n):
                    raise MalformedData(f"mult: pair {key} out of range")
                table[i][j] = _coerce_vec(field, v, n, f"mult{key}")
        else:
            if len(mult) != n or any(len(r) != n for r in mult):
                raise MalformedData("mult must be n x n")
            for i in range(n):
                for j in range(n):
                    table[i][j] = _coerce_vec(field, mult[i][j], n, f"mult({i},{j})")
        self.mult = table
        self.unit = _coerce_vec(field, unit, n, "unit")

        if len(comult) != n:
            raise MalformedData("comult needs one entry per basis element")
        self.comult = []
        for i, d in enumerate(comult):
            items = d.items() if isinstance(d, dict) else (((j, k), c) for j, k, c in d)
            out = {}
            for (j, k), c in items:
                if not (0 <= j < n and 0 <= k < n):
                    raise MalformedData(f"comult({i}): index out of range")
                sp.add_term(out, (j, k), field(c))
            self.comult.append(out)

        if len(counit) != n:
            raise MalformedData("counit needs one entry per basis element")
        self.counit = [field(c) for c in counit]

        if isinstance(antipode, Matrix):
            if antipode.shape != (n, n):
                raise MalformedData("antipode matrix must be n x n")
            antipode = antipode.columns()
        if len(antipode) != n:
            raise MalformedData("antipode needs one entry per basis element")
        self.antipode = [_coerce_vec(field, v, n, f"antipode({i})") for i, v in enumerate(antipode)]
        self.meta = dict(meta or {})
        self._cop_cache = {}

    # -- construction helpers -------------------------------------------------

    def replace(self, **changes):
        kw = dict(field=self.field, labels=self.labels, mult=self.mult, unit=self.unit,
                  comult=self.comult, counit=self.counit, antipode=self.antipode, meta=self.meta)
        kw.update(changes)
        return HopfAlgebra(**kw)

    def basis(self, label):
        """Dense coordinate vector of a basis element given by label or index."""
        i = self.index[label] if isinstance(label, str) else label
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def element(self, coeffs):
        """Dense vector from ``{label: coefficient}``."""
        v = [self.field.zero] * self.dim
        for lab, c in coeffs.items():
            v[self.index[lab]] += self.field(c)
        return v

    def zero_vector(self):
        return [self.field.zero] * self.dim

    def one(self):
        return sp.to_dense(self.unit, self.dim, self.field.zero)

    def dense(self, v):
        return sp.to_dense(v, self.dim, self.field.zero)

    def format(self, vec):
        v = sp.to_sparse(vec) if isinstance(vec, list) else vec
        if not v:
            return "0"
        parts = []
        for i, c in sorted(v.items()):
            if c == 1:
                parts.append(self.labels[i])
                continue
            text = self.field.format(c)
            if any(ch in text[1:] for ch in "+-/") and not text.startswith("("):
                text = f"({text})"
            parts.append(f"{text}*{self.labels[i]}")
        return " + ".join(parts)

    # -- sparse kernels -----------------------------------------------------------

    def _mul(self, u, v):
        out = {}
        mult = self.mult
        for i, x in u.items():
            row = mult[i]
            for j, y in v.items():
                sp.axpy(out, x * y, row[j])
        return out

    def _delta(self, u):
        out = {}
        for i, x in u.items():
            sp.axpy(out, x, self.comult[i])
        return out

    def _eps(self, u):
        s = self.field.zero
        for i, x in u.items():
            c = self.counit[i]
            if c:
                s = s + x * c
        return s

    def _S(self, u):
        out = {}
        for i, x in u.items():
            sp.axpy(out, x, self.antipode[i])
        return out

    def _power(self, u, n):
        out = dict(self.unit)
        for _ in range(n):
            out = self._mul(out, u)
        return out

    def coproduct_terms(self, i, parts=2):
        """Iterated coproduct of ``e_i`` into ``parts`` tensor factors: ``[(indices, c)]``."""
        key = (i, parts)
        hit = self._cop_cache.get(key)
        if hit is not None:
            return hit
        if parts == 1:
            terms = [((i,), self.field.one)]
        else:
            acc = {}
            for idx, c in self.coproduct_terms(i, parts - 1):
                for (j, k), d in self.comult[idx[-1]].items():
                    sp.add_term(acc, idx[:-1] + (j, k), c * d)
            terms = sorted(acc.items())
        self._cop_cache[key] = terms
        return terms

    # -- dense public API -------------------------------------------------------------

    def mul(self, u, v):
        return self.dense(self._mul(sp.to_sparse(u), sp.to_sparse(v)))

    def power(self, u, n):
        return self.dense(self._power(sp.to_sparse(u), n))

    def coproduct(self, u):
        return self._delta(sp.to_sparse(u))

    def counit_of(self, u):
        return self._eps(sp.to_sparse(u))

    def antipode_of(self, u):
        return self.dense(self._S(sp.to_sparse(u)))

    def antipode_matrix(self):
        return Matrix.from_columns(self.field, [self.dense(v) for v in self.antipode], self.dim)

    # -- comparison -------------------------------------------------------------------

    def same_structure(self, other):
        """Structure-constant equality, ignoring labels and metadata."""
        return (self.field == other.field and self.dim == other.dim and self.mult == other.mult
                and self.unit == other.unit and self.comult == other.comult
                and all(a == b for a, b in zip(self.counit, other.counit))
                and self.antipode == other.antipode)

    def __eq__(self, other):
        if not isinstance(other, HopfAlgebra):
            return NotImplemented
        return self.labels == other.labels and self.same_structure(other)

    __hash__ = object.__hash__

    def __repr__(self):
        name = self.meta.get("name", "HopfAlgebra")
        return f"<{name} dim={self.dim} over {self.field}>"


def _lab(H, *idx):
    return tuple(H.labels[i] for i in idx)


def verify_hopf(H):
    """Run every Hopf algebra axiom on basis tuples; returns a :class:`VerificationReport`."""
    n, F = H.dim, H.field
    rep = VerificationReport()
    basis = [{i: F.one} for i in range(n)]

    def first(it):
        for w in it:
            if w is not None:
                return w
        return None

    def assoc():
        for i in range(n):
            for j in range(n):
                ij = H.mult[i][j]
                for k in range(n):
                    if H._mul(ij, basis[k]) != H._mul(basis[i], H.mult[j][k]):
                        return _lab(H, i, j, k)
        return None

    rep.add("associativity", assoc())
    rep.add("unit", first(_lab(H, i) for i in range(n)
                          if H._mul(H.unit, basis[i]) != basis[i] or H._mul(basis[i], H.unit) != basis[i]))

    def coassoc(i):
        left, right = {}, {}
        for (j, k), c in H.comult[i].items():
            for (a, b), d in H.comult[j].items():
                sp.add_term(left, (a, b, k), c * d)
            for (a, b), d in H.comult[k].items():
                sp.add_term(right, (j, a, b), c * d)
        return left == right

    rep.add("coassociativity", first(_lab(H, i) for i in range(n) if not coassoc(i)))

    def counit_ok(i):
        left, right = {}, {}
        for (j, k), c in H.comult[i].items():
            sp.add_term(left, k, c * H.counit[j])
            sp.add_term(right, j, c * H.counit[k])
        return left == basis[i] and right == basis[i]

    rep.add("counit", first(_lab(H, i) for i in range(n) if not counit_ok(i)))

    def delta_mult(i, j):
        lhs = H._delta(H.mult[i][j])
        rhs = {}
        for (a, b), c in H.comult[i].items():
            for (x, y), d in H.comult[j].items():
                cd = c * d
                for k, u in H.mult[a][x].items():
                    for l, v in H.mult[b][y].items():
                        sp.add_term(rhs, (k, l), cd * u * v)
        return lhs == rhs

    rep.add("comult_multiplicative",
            first(_lab(H, i, j) for i in range(n) for j in range(n) if not delta_mult(i, j)))
    rep.add("comult_unit", None if H._delta(H.unit) == sp.tensor(H.unit, H.unit) else ("1",))
    rep.add("counit_multiplicative",
            first(_lab(H, i, j) for i in range(n) for j in range(n)
                  if H._eps(H.mult[i][j]) != H.counit[i] * H.counit[j]))
    rep.add("counit_unit", None if H._eps(H.unit) == F.one else ("1",))

    def antipode_ok(i):
        left, right = {}, {}
        for (j, k), c in H.comult[i].items():
            sp.axpy(left, c, H._mul(H.antipode[j], basis[k]))
            sp.axpy(right, c, H._mul(basis[j], H.antipode[k]))
        target = sp.scale(H.counit[i], H.unit)
        return left == target and right == target

    rep.add("antipode", first(_lab(H, i) for i in range(n) if not antipode_ok(i)))
    return rep


def _pair_labels(A, B, sep):
    return [f"{a}{sep}{b}" for a in A.labels for b in B.labels]


def tensor_hopf(A, B):
    """The tensor product Hopf algebra; basis ``e_i (x) f_j`` has index ``i*dim(B) + j``."""
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    nA, nB = A.dim, B.dim
    idx = lambda i, j: i * nB + j  # noqa: E731
    mult = {}
    for i in range(nA):
        for j in range(nB):
            for k in range(nA):
                for l in range(nB):
                    v = {}
                    for a, x in A.mult[i][k].items():
                        for b, y in B.mult[j][l].items():
                            v[idx(a, b)] = x * y
                    if v:
                        mult[(idx(i, j), idx(k, l))] = v
    unit = {idx(a, b): x * y for a, x in A.unit.items() for b, y in B.unit.items()}
    comult = []
    counit = []
    antipode = []
    for i in range(nA):
        for j in range(nB):
            d = {}
            for (a1, a2), x in A.comult[i].items():
                for (b1, b2), y in B.comult[j].items():
                    sp.add_term(d, (idx(a1, b1), idx(a2, b2)), x * y)
            comult.append(d)
            counit.append(A.counit[i] * B.counit[j])
            antipode.append({idx(a, b): x * y for a, x in A.antipode[i].items() for b, y in B.antipode[j].items()})
    meta = {"name": f"{A.meta.get('name', 'A')}(x){B.meta.get('name', 'B')}",
            "factors": (A, B)}
    gl_a, gl_b = A.meta.get("group_likes"), B.meta.get("group_likes")
    if gl_a is not None and gl_b is not None:
        meta["group_likes"] = [[x * y for x in g for y in h] for g in gl_a for h in gl_b]
    return HopfAlgebra(A.field, _pair_labels(A, B, "⊗"), mult, unit, comult, counit, antipode, meta)


# -- linear maps --------------------------------------------------------------------


@dataclass
class MapProperties:
    is_coalgebra_map: bool
    is_algebra_map: bool
    is_unitary: bool
    is_hopf_map: bool
    antipode_compatible: bool


class LinearMap:
    """A linear map ``source -> target`` between based spaces; ``matrix`` is target.dim x source.dim."""

    def __init__(self, source, target, matrix):
        if isinstance(matrix, Matrix):
            if matrix.shape != (target.dim, source.dim):
                raise ShapeMismatch(f"matrix {matrix.shape} for a map of dim {source.dim} -> {target.dim}")
            if matrix.field != source.field or target.field != source.field:
                raise FieldMismatch("map between different fields")
        else:
            matrix = Matrix(source.field, matrix, source.dim)
            if matrix.shape != (target.dim, source.dim):
                raise ShapeMismatch(f"matrix {matrix.shape} for a map of dim {source.dim} -> {target.dim}")
        self.source = source
        self.target = target
        self.matrix = matrix
        self._cols = [sp.to_sparse(c) for c in matrix.columns()]

    @classmethod
    def from_images(cls, source, target, images):
        """Map sending basis element ``i`` to ``images[i]`` (dense or sparse vectors)."""
        cols = [target.dense(v) if isinstance(v, dict) else list(v) for v in images]
        return cls(source, target, Matrix.from_columns(source.field, cols, target.dim))

    @classmethod
    def identity(cls, A):
        return cls(A, A, Matrix.identity(A.field, A.dim))

    @classmethod
    def trivial(cls, source, target):
        """``h -> epsilon(h) 1``."""
        return unit_counit(source, target)

    def image(self, i):
        """Sparse image of basis element ``i``."""
        return self._cols[i]

    def _apply(self, v):
        out = {}
        for i, x in v.items():
            sp.axpy(out, x, self._cols[i])
        return out

    def apply(self, vec):
        return self.target.dense(self._apply(sp.to_sparse(vec)))

    __call__ = apply

    def __matmul__(self, other):
        """Composition ``self o other``."""
        if other.target.dim != self.source.dim:
            raise ShapeMismatch("composition of incompatible maps")
        return LinearMap(other.source, self.target, self.matrix @ other.matrix)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.matrix == other.matrix

    __hash__ = None

    @cached_property
    def properties(self):
        return check_map_properties(self)

    def __repr__(self):
        return f"LinearMap({self.source!r} -> {self.target!r})"


def unit_counit(source, target):
    """The convolution unit ``eta o epsilon``."""
    cols = [target.dense(sp.scale(source.counit[i], target.unit)) for i in range(source.dim)]
    return LinearMap(source, target, Matrix.from_columns(source.field, cols, target.dim))


def convolution(f, g):
    """``(f*g)(c) = f(c_(1)) g(c_(2))``."""
    if f.source.dim != g.source.dim or f.target.dim != g.target.dim:
        raise ShapeMismatch("convolution needs maps with a common source and target")
    C, A = f.source, f.target
    cols = []
    for i in range(C.dim):
        out = {}
        for (j, k), c in C.comult[i].items():
            sp.axpy(out, c, A._mul(f._cols[j], g._cols[k]))
        cols.append(A.dense(out))
    return LinearMap(C, A, Matrix.from_columns(C.field, cols, A.dim))


def _is_coalgebra_map(f):
    S, T = f.source, f.target
    for i in range(S.dim):
        if T._eps(f._cols[i]) != S.counit[i]:
            return False
        lhs = T._delta(f._cols[i])
        rhs = {}
        for (j, k), c in S.comult[i].items():
            for a, x in f._cols[j].items():
                for b, y in f._cols[k].items():
                    sp.add_term(rhs, (a, b), c * x * y)
        if lhs != rhs:
            return False
    return True


def _is_algebra_map(f):
    S, T = f.source, f.target
    if f._apply(S.unit) != T.unit:
        return False
    for i in range(S.dim):
        for j in range(S.dim):
            if f._apply(S.mult[i][j]) != T._mul(f._cols[i], f._cols[j]):
                return False
    return True


def check_map_properties(f):
    """Coalgebra-map, algebra-map, unitarity and Hopf-map flags of ``f``."""
    S, T = f.source, f.target
    if f.matrix.shape != (T.dim, S.dim):
        raise ShapeMismatch("map matrix does not match source/target")
    coalg = _is_coalgebra_map(f)
    unitary = f._apply(S.unit) == T.unit
    alg = unitary and _is_algebra_map(f)
    anti = all(T._S(f._cols[i]) == f._apply(S.antipode[i]) for i in range(S.dim))
    hopf = coalg and alg
    if hopf and not anti:
        raise HopfError("bialgebra map fails antipode compatibility; an antipode is wrong")
    return MapProperties(coalg, alg, unitary, hopf, anti)


# -- perturbations ------------------------------------------------------------------------


def structure_entries(H):
    """Every structure-constant position ``(kind, index-tuple)`` of ``H``."""
    n = H.dim
    out = [("mult", (i, j, k)) for i in range(n) for j in range(n) for k in range(n)]
    out += [("unit", (k,)) for k in range(n)]
    out += [("comult", (i, j, k)) for i in range(n) for j in range(n) for k in range(n)]
    out += [("counit", (i,)) for i in range(n)]
    out += [("antipode", (i, j)) for i in range(n) for j in range(n)]
    return out


def perturb(H, kind, index, delta):
    """Copy of ``H`` with one structure constant shifted by ``delta``."""
    F = H.field
    delta = F(delta)
    mult = [[dict(v) for v in row] for row in H.mult]
    unit = dict(H.unit)
    comult = [dict(d) for d in H.comult]
    counit = list(H.counit)
    antipode = [dict(v) for v in H.antipode]
    if kind == "mult":
        i, j, k = index
        sp.add_term(mult[i][j], k, delta)
    elif kind == "unit":
        sp.add_term(unit, index[0], delta)
    elif kind == "comult":
        i, j, k = index
        sp.add_term(comult[i], (j, k), delta)
    elif kind == "counit":
        counit[index[0]] = counit[index[0]] + delta
    elif kind == "antipode":
        i, j = index
        sp.add_term(antipode[i], j, delta)
    else:
        raise ValueError(f"unknown structure kind {kind!r}")
    return HopfAlgebra(F, H.labels, mult, unit, comult, counit, antipode, H.meta)
