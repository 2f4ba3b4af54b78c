"""Polynomials in indexed unknowns, used to turn axiom defects into equations.

A :class:`Poly` is a sparse map from sorted variable-index tuples to field
coefficients.  It mixes with plain field elements, so the structure-constant
kernels can run unchanged on symbolic coefficients.
"""

from __future__ import annotations

import numpy as np

from .linalg import Matrix, solve_linear

__all__ = ["Poly", "unknown", "equations_of", "solve_by_propagation", "Propagation", "evaluate_many"]


class Poly:
    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, int) or self.field.contains(other):
            c = self.field(other)
            return Poly(self.field, {(): c})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(sorted(m1 + m2))
                s = out.get(m)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return not (self - o).terms

    __hash__ = None

    @property
    def degree(self):
        return max((len(m) for m in self.terms), default=-1)

    def variables(self):
        return sorted({v for m in self.terms for v in m})

    def substitute(self, images):
        """Replace variable ``i`` by ``images[i]`` (a Poly or scalar)."""
        out = Poly(self.field, {})
        for m, c in self.terms.items():
            t = Poly(self.field, {(): c})
            for v in m:
                t = t * images[v]
            out = out + t
        return out

    def linear_row(self, nvars):
        """``(row, rhs)`` for a degree <= 1 polynomial ``row . z + c = 0``."""
        F = self.field
        row = [F.zero] * nvars
        rhs = F.zero
        for m, c in self.terms.items():
            if len(m) == 0:
                rhs = -c
            elif len(m) == 1:
                row[m[0]] = c
            else:
                raise ValueError("not linear")
        return row, rhs

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(f"z{v}" for v in m)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def unknown(field, index):
    return Poly(field, {(index,): field.one})


def equations_of(defects, field):
    """Collect every coefficient of every defect vector as a Poly equation ``= 0``."""
    eqs = []
    for d in defects:
        for c in d.values():
            eqs.append(c if isinstance(c, Poly) else Poly(field, {(): field(c)}))
    return eqs


class Propagation:
    """Outcome of :func:`solve_by_propagation`.

    The solution set found so far is ``z0 + K t``; ``residual`` lists the
    equations (in ``t``) that are still nonlinear, and ``consistent`` is False
    when a linear stage had no solution.
    """

    def __init__(self, z0, K, residual, consistent, rounds):
        self.z0 = z0
        self.K = K
        self.residual = residual
        self.consistent = consistent
        self.rounds = rounds

    @property
    def dimension(self):
        return len(self.K)

    @property
    def resolved(self):
        return self.consistent and not self.residual


def _affine_images(field, z0, K):
    nparams = len(K)
    out = []
    for i in range(len(z0)):
        terms = {(): z0[i]} if z0[i] else {}
        for j in range(nparams):
            if K[j][i]:
                terms[(j,)] = K[j][i]
        out.append(Poly(field, terms))
    return out


def _solve(field, rows, rhs, n):
    if not rows:
        return [field.zero] * n, [[field.one if j == i else field.zero for j in range(n)] for i in range(n)]
    sol = solve_linear(Matrix(field, rows, n), rhs)
    if sol is None:
        return None, None
    return sol.particular, sol.kernel


def solve_by_propagation(field, equations, nvars, max_rounds=50, linear_only=False):
    """Solve the linear equations, substitute, and repeat while new linear ones appear.

    With ``linear_only`` a single linear stage is run and everything nonlinear is
    left in ``residual``.
    """
    z0 = [field.zero] * nvars
    K = [[field.one if j == i else field.zero for j in range(nvars)] for i in range(nvars)]
    current = [e for e in equations if e]
    rounds = 0
    while True:
        rounds += 1
        n = len(K)
        linear = [e for e in current if e.degree <= 1]
        nonlinear = [e for e in current if e.degree > 1]
        if not linear:
            return Propagation(z0, K, nonlinear, True, rounds)
        rows, rhs = zip(*(e.linear_row(n) for e in linear))
        t0, K2 = _solve(field, list(rows), list(rhs), n)
        if t0 is None:
            return Propagation(z0, K, nonlinear, False, rounds)
        # compose z = z0 + K (t0 + K2 s)
        newz0 = [z0[i] + sum((K[j][i] * t0[j] for j in range(n) if t0[j] and K[j][i]), field.zero)
                 for i in range(nvars)]
        newK = [[sum((K[j][i] * k2[j] for j in range(n) if k2[j] and K[j][i]), field.zero)
                 for i in range(nvars)] for k2 in K2]
        images = _affine_images(field, t0, K2)
        current = [q for q in (e.substitute(images) for e in nonlinear) if q]
        z0, K = newz0, newK
        if linear_only or rounds >= max_rounds:
            return Propagation(z0, K, current, True, rounds)


def evaluate_many(equations, points, p):
    """Boolean mask of integer points (rows) over ``F_p`` where every equation vanishes."""
    ok = np.ones(len(points), dtype=bool)
    for e in equations:
        val = np.zeros(len(points), dtype=np.int64)
        for m, c in e.terms.items():
            term = np.full(len(points), int(c), dtype=np.int64)
            for v in m:
                term = (term * points[:, v]) % p
            val = (val + term) % p
        ok &= val == 0
        if not ok.any():
            break
    return ok
