"""Exact scalars: the rationals, prime fields F_p (p odd) and F_p(X1, ..., Xn).

Elements are plain Python objects with arithmetic operators:

* rationals are :class:`fractions.Fraction`,
* residues mod p are :class:`ModP`,
* rational functions are :class:`RationalFunction`, a (numerator,
  denominator) pair of :class:`Polynomial` that is *not* reduced by a gcd.
  Equality is decided by cross-multiplication.

A :class:`FieldSpec` names the field and converts, parses and prints its
elements.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import DivisionByZero, FieldMismatch, ParseError

__all__ = [
    "FieldSpec",
    "ModP",
    "Polynomial",
    "RationalFunction",
    "QQ",
    "GF",
    "field_of",
    "parse_scalar",
    "format_scalar",
    "scalar_arith",
    "scalar_eq",
]


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


class ModP:
    """A residue class modulo an odd prime ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.value
        if _is_int(other):
            return other
        if isinstance(other, (Fraction, RationalFunction, float)):
            raise FieldMismatch(f"cannot mix F_{self.p} with {type(other).__name__}")
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.value, self.p)

    def inverse(self):
        if self.value == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        return ModP(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * ModP(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.inverse() * o

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return ModP(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if _is_int(other):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Polynomial:
    """Sparse multivariate polynomial over F_p.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    residues in ``[0, p)``.
    """

    __slots__ = ("p", "variables", "terms")

    def __init__(self, p, variables, terms=None):
        self.p = p
        self.variables = tuple(variables)
        clean = {}
        for mono, c in (terms or {}).items():
            c %= p
            if c:
                clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def constant(cls, p, variables, c):
        return cls(p, variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, p, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise FieldMismatch(f"unknown variable {name!r}")
        mono = tuple(1 if v == name else 0 for v in variables)
        return cls(p, variables, {mono: 1})

    def _check(self, other):
        if self.p != other.p or self.variables != other.variables:
            raise FieldMismatch("polynomials over different rings")

    def _new(self, terms):
        out = Polynomial.__new__(Polynomial)
        out.p, out.variables, out.terms = self.p, self.variables, terms
        return out

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        zero = (0,) * len(self.variables)
        return all(m == zero for m in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.variables), 0)

    def is_monomial(self):
        return len(self.terms) == 1

    def __add__(self, other):
        self._check(other)
        p = self.p
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = (terms.get(m, 0) + c) % p
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return self._new(terms)

    def __neg__(self):
        p = self.p
        return self._new({m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if _is_int(other):
            return self.scale(other)
        self._check(other)
        p = self.p
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = (terms.get(m, 0) + c1 * c2) % p
        return self._new({m: c for m, c in terms.items() if c})

    def scale(self, c):
        c %= self.p
        if not c:
            return self._new({})
        return self._new({m: (v * c) % self.p for m, v in self.terms.items()})

    def __pow__(self, n):
        out = Polynomial.constant(self.p, self.variables, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.p, self.variables, self.terms) == (other.p, other.variables, other.terms)
        return NotImplemented

    __hash__ = None

    def degree_in(self, var):
        """Largest exponent of ``var``; ``-inf`` for the zero polynomial."""
        i = self.variables.index(var) if isinstance(var, str) else var
        if not self.terms:
            return -math.inf
        return max(m[i] for m in self.terms)

    def leading(self):
        m = max(self.terms)
        return m, self.terms[m]

    def monomial_gcd(self):
        ms = list(self.terms)
        return tuple(min(col) for col in zip(*ms))

    def shift(self, mono, sign=-1):
        return self._new({tuple(a + sign * b for a, b in zip(m, mono)): c for m, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            factors = []
            for name, e in zip(self.variables, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if c != 1 or not factors:
                factors.insert(0, str(c))
            parts.append("*".join(factors))
        return "+".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


class RationalFunction:
    """Element ``num/den`` of F_p(X1..Xn), kept unreduced.

    Construction applies cheap normalisations (common monomial factor,
    monic denominator, ``x/x -> 1``) that never change the value.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = Polynomial.constant(num.p, num.variables, 1)
        num._check(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            den = Polynomial.constant(num.p, num.variables, 1)
        else:
            g = tuple(min(a, b) for a, b in zip(num.monomial_gcd(), den.monomial_gcd()))
            if any(g):
                num, den = num.shift(g), den.shift(g)
            _, lc = den.leading()
            if lc != 1:
                inv = pow(lc, -1, num.p)
                num, den = num.scale(inv), den.scale(inv)
            if num.terms == den.terms:
                num = den = Polynomial.constant(num.p, num.variables, 1)
        self.num = num
        self.den = den

    @property
    def p(self):
        return self.num.p

    @property
    def variables(self):
        return self.num.variables

    def _other(self, other):
        if isinstance(other, RationalFunction):
            self.num._check(other.num)
            return other
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatch("different characteristic")
            other = other.value
        if _is_int(other):
            return RationalFunction(Polynomial.constant(self.p, self.variables, other))
        if isinstance(other, (Fraction, float)):
            raise FieldMismatch(f"cannot mix F_p(X) with {type(other).__name__}")
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den.terms == o.den.terms:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.is_constant():
            c = o.num.constant_term()
            return RationalFunction(self.num.scale(c), self.den)
        if self.is_constant():
            c = self.num.constant_term()
            return RationalFunction(o.num.scale(c), o.den)
        if self.num.terms == o.den.terms:
            return RationalFunction(o.num, self.den)
        if self.den.terms == o.num.terms:
            return RationalFunction(self.num, o.den)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero("inverse of 0 in F_p(X)")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def __eq__(self, other):
        try:
            o = self._other(other)
        except FieldMismatch:
            return NotImplemented
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def __bool__(self):
        return not self.num.is_zero()

    def laurent_monomial(self):
        """``(constant, exponents)`` if the value is ``c * X^e`` with integer e, else None."""
        if not (self.num.is_monomial() and self.den.is_monomial()):
            return None
        (mn, cn), = self.num.terms.items()
        (md, cd), = self.den.terms.items()
        c = (cn * pow(cd, -1, self.p)) % self.p
        return c, tuple(a - b for a, b in zip(mn, md))

    def __str__(self):
        if self.den.is_constant() and self.den.constant_term() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


@dataclass(frozen=True)
class FieldSpec:
    """One of ``Q``, ``F_p`` or ``F_p(X1..Xn)`` with p an odd prime."""

    kind: str
    p: int | None = None
    variables: tuple = ()

    def __post_init__(self):
        if self.kind not in ("Q", "Fp", "Fp(X)"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "Q":
            if self.p is not None or self.variables:
                raise ValueError("the rationals take no parameters")
            return
        if self.p is None or not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p == 2:
            raise ValueError("characteristic 2 is not supported")
        object.__setattr__(self, "variables", tuple(self.variables))
        if self.kind == "Fp" and self.variables:
            raise ValueError("prime fields take no variables")
        if self.kind == "Fp(X)":
            if not self.variables:
                raise ValueError("need at least one variable")
            if len(set(self.variables)) != len(self.variables):
                raise ValueError("variable names must be distinct")
            for v in self.variables:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                    raise ValueError(f"bad variable name {v!r}")

    @classmethod
    def rationals(cls):
        return cls("Q")

    @classmethod
    def prime(cls, p):
        return cls("Fp", p)

    @classmethod
    def rational_functions(cls, p, variables):
        return cls("Fp(X)", p, tuple(variables))

    @classmethod
    def from_flag(cls, text):
        """Parse the flag grammar ``q``, ``fP`` or ``fP(V1,...,Vn)``."""
        t = text.strip()
        if t.lower() in ("q", "qq"):
            return cls.rationals()
        m = re.fullmatch(r"[fF](\d+)(?:\((.*)\))?", t)
        if not m:
            raise ParseError("bad field flag", text, 0)
        p = int(m.group(1))
        try:
            if m.group(2) is None:
                return cls.prime(p)
            names = [v.strip() for v in m.group(2).split(",")]
            return cls.rational_functions(p, names)
        except ValueError as exc:
            raise ParseError(str(exc), text, 0) from None

    def __str__(self):
        if self.kind == "Q":
            return "q"
        if self.kind == "Fp":
            return f"f{self.p}"
        return f"f{self.p}({','.join(self.variables)})"

    @property
    def characteristic(self):
        return 0 if self.kind == "Q" else self.p

    @property
    def is_finite(self):
        return self.kind == "Fp"

    @property
    def order(self):
        return self.p if self.kind == "Fp" else None

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        """Coerce an int, Fraction, string or element of this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.kind == "Q":
            if _is_int(value) or isinstance(value, Fraction):
                return Fraction(value)
        elif self.kind == "Fp":
            if _is_int(value):
                return ModP(value, self.p)
            if isinstance(value, Fraction):
                return ModP(value.numerator, self.p) / value.denominator
            if isinstance(value, ModP) and value.p == self.p:
                return value
        else:
            if _is_int(value):
                return RationalFunction(Polynomial.constant(self.p, self.variables, value))
            if isinstance(value, Fraction):
                return self(value.numerator) / self(value.denominator)
            if isinstance(value, ModP) and value.p == self.p:
                return self(value.value)
            if isinstance(value, RationalFunction) and value.p == self.p and value.variables == self.variables:
                return value
        raise FieldMismatch(f"{value!r} is not an element of {self}")

    def contains(self, x):
        if self.kind == "Q":
            return isinstance(x, Fraction)
        if self.kind == "Fp":
            return isinstance(x, ModP) and x.p == self.p
        return isinstance(x, RationalFunction) and x.p == self.p and x.variables == self.variables

    def check(self, x):
        if not self.contains(x):
            raise FieldMismatch(f"{x!r} is not an element of {self}")
        return x

    def variable(self, name):
        if self.kind != "Fp(X)":
            raise FieldMismatch(f"{self} has no variables")
        return RationalFunction(Polynomial.variable(self.p, self.variables, name))

    def elements(self):
        """All elements of a finite field, in residue order."""
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return [ModP(i, self.p) for i in range(self.p)]

    def units(self):
        return self.elements()[1:]

    def vectors(self, n):
        """All length-n vectors over a finite field in lexicographic order."""
        els = self.elements()
        return (list(v) for v in product(els, repeat=n))

    def random_element(self, rng, bound=5):
        if self.kind == "Q":
            return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if self.kind == "Fp":
            return ModP(rng.randrange(self.p), self.p)
        n = len(self.variables)
        num = Polynomial(self.p, self.variables,
                         {tuple(rng.randint(0, 2) for _ in range(n)): rng.randrange(self.p) for _ in range(2)})
        den_terms = {tuple(rng.randint(0, 1) for _ in range(n)): rng.randrange(1, self.p)}
        return RationalFunction(num, Polynomial(self.p, self.variables, den_terms))

    def parse(self, text):
        return _Parser(text, self).parse()

    def format(self, x):
        return format_scalar(self.check(x) if not _is_int(x) else self(x))


QQ = FieldSpec.rationals()


def GF(p):
    return FieldSpec.prime(p)


def field_of(x):
    """The field an element lives in."""
    if isinstance(x, Fraction):
        return QQ
    if isinstance(x, ModP):
        return FieldSpec.prime(x.p)
    if isinstance(x, RationalFunction):
        return FieldSpec.rational_functions(x.p, x.variables)
    raise FieldMismatch(f"{x!r} is not a field element")


def format_scalar(x):
    return str(x)


def parse_scalar(text, spec):
    return spec.parse(text)


def scalar_eq(a, b):
    if field_of(a) != field_of(b):
        raise FieldMismatch(f"{field_of(a)} vs {field_of(b)}")
    return a == b


def scalar_arith(op, a, b=None):
    """Apply ``add``, ``mul``, ``neg`` or ``inv``; both operands must share a field."""
    fa = field_of(a)
    if b is not None and field_of(b) != fa:
        raise FieldMismatch(f"{fa} vs {field_of(b)}")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        if not a:
            raise DivisionByZero("inverse of zero")
        return fa.one / a
    raise ValueError(f"unknown operation {op!r}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class _Parser:
    """Recursive descent over ``+ - * / ^`` and parentheses."""

    def __init__(self, text, field):
        self.text = text
        self.field = field
        self.tokens = []
        for m in _TOKEN.finditer(text):
            if m.group(0).strip() == "":
                continue
            num, name, sym = m.groups()
            pos = m.start(m.lastindex)
            if num is not None:
                self.tokens.append(("num", num, pos))
            elif name is not None:
                self.tokens.append(("var", name, pos))
            else:
                self.tokens.append(("sym", sym, pos))
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def parse(self):
        if not self.tokens:
            raise ParseError("empty scalar", self.text, 0)
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[:2] in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[:2] in (("sym", "*"), ("sym", "/")):
            tok = self.take()
            rhs = self.factor()
            if tok[1] == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise ParseError("division by zero", self.text, tok[2])
                value = value / rhs
        return value

    def factor(self):
        if self.peek()[:2] == ("sym", "-"):
            self.take()
            return -self.factor()
        if self.peek()[:2] == ("sym", "+"):
            self.take()
            return self.factor()
        base = self.atom()
        if self.peek()[:2] == ("sym", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.fail("expected exponent", tok)
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            return self.field(int(val))
        if kind == "var":
            if self.field.kind != "Fp(X)" or val not in self.field.variables:
                raise FieldMismatch(f"variable {val!r} at position {pos} is not in {self.field}")
            return self.field.variable(val)
        if val == "(":
            value = self.expr()
            if self.take()[:2] != ("sym", ")"):
                raise ParseError("expected ')'", self.text, pos)
            return value
        self.fail("unexpected token", tok)
