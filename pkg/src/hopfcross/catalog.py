"""Concrete Hopf algebras by structure constants.

Basis label conventions: ``1, g, x, gx`` for Sweedler's algebra,
``1, y, y^2, ...`` for the line algebras and ``1, g, g^2, ...`` for group
algebras of cyclic groups.
"""

from __future__ import annotations

from .errors import CharMismatch, MalformedData, ParseError
from .fields import FieldSpec
from .hopf import HopfAlgebra, tensor_hopf

__all__ = [
    "sweedler4",
    "line_nilpotent",
    "line_semisimple",
    "cyclic_group_algebra",
    "trivial_hopf",
    "resolve",
]


def sweedler4(field):
    """Sweedler's 4-dimensional algebra: ``g^2 = 1, x^2 = 0, xg = -gx``."""
    one, neg = field.one, -field.one
    e = lambda k, c=one: {k: c}  # noqa: E731
    # basis 0=1, 1=g, 2=x, 3=gx
    mult = {
        (0, 0): e(0), (0, 1): e(1), (0, 2): e(2), (0, 3): e(3),
        (1, 0): e(1), (1, 1): e(0), (1, 2): e(3), (1, 3): e(2),
        (2, 0): e(2), (2, 1): e(3, neg),
        (3, 0): e(3), (3, 1): e(2, neg),
    }
    comult = [
        {(0, 0): one},
        {(1, 1): one},
        {(2, 0): one, (1, 2): one},
        {(3, 1): one, (0, 3): one},
    ]
    counit = [one, one, field.zero, field.zero]
    antipode = [e(0), e(1), e(3, neg), e(2)]
    # every Hopf automorphism is g -> g, x -> alpha x with alpha in k*
    meta = {"name": "H4", "group_likes": [[one, field.zero, field.zero, field.zero],
                                          [field.zero, one, field.zero, field.zero]],
            "aut_scaling": ((0, 0, 1, 1), "full")}
    return HopfAlgebra(field, ["1", "g", "x", "gx"], mult, {0: one}, comult, counit, antipode, meta)


def _binomial_rows(field, n):
    """Pascal's triangle rows 0..n-1 with entries in ``field``."""
    rows = [[field.one]]
    for _ in range(1, n):
        prev = rows[-1]
        rows.append([field.one] + [prev[i - 1] + prev[i] for i in range(1, len(prev))] + [field.one])
    return rows


def _line(p, field, idempotent_top):
    if field.characteristic != p:
        raise CharMismatch(f"line algebra with p={p} needs characteristic {p}, got {field}")
    one = field.one
    labels = ["1", "y"] + [f"y^{j}" for j in range(2, p)]
    mult = {}
    for i in range(p):
        for j in range(p):
            k = i + j
            if k < p:
                mult[(i, j)] = {k: one}
            elif idempotent_top:
                mult[(i, j)] = {k - (p - 1): one}
    binom = _binomial_rows(field, p)
    comult = [{(i, j - i): binom[j][i] for i in range(j + 1) if binom[j][i]} for j in range(p)]
    counit = [one] + [field.zero] * (p - 1)
    antipode = [{j: one if j % 2 == 0 else -one} for j in range(p)]
    name = f"line{1 if idempotent_top else 0}({p})"
    # y -> alpha y is a Hopf automorphism for alpha in k* (y^p = 0) or alpha in F_p* (y^p = y)
    units = "prime" if idempotent_top else "full"
    meta = {"name": name, "group_likes": [[one] + [field.zero] * (p - 1)],
            "aut_scaling": (tuple(range(p)), units)}
    return HopfAlgebra(field, labels, mult, {0: one}, comult, counit, antipode, meta)


def line_nilpotent(p, field):
    """``k<y | y^p = 0>`` with ``y`` primitive; needs characteristic ``p``."""
    return _line(p, field, False)


def line_semisimple(p, field):
    """``k<y | y^p = y>`` with ``y`` primitive; needs characteristic ``p``."""
    return _line(p, field, True)


def cyclic_group_algebra(n, field):
    """The group algebra of the cyclic group of order ``n``."""
    if n < 1:
        raise MalformedData("cyclic group order must be positive")
    one = field.one
    labels = ["1"] + (["g"] if n > 1 else []) + [f"g^{j}" for j in range(2, n)]
    mult = {(i, j): {(i + j) % n: one} for i in range(n) for j in range(n)}
    comult = [{(i, i): one} for i in range(n)]
    antipode = [{(-i) % n: one} for i in range(n)]
    gl = [[one if k == i else field.zero for k in range(n)] for i in range(n)]
    meta = {"name": f"k[C{n}]", "group_likes": gl}
    return HopfAlgebra(field, labels, mult, {0: one}, comult, [one] * n, antipode, meta)


def trivial_hopf(field):
    """The one-dimensional Hopf algebra ``k``."""
    return cyclic_group_algebra(1, field)


def _split_args(text):
    depth = 0
    parts, cur = [], []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [s.strip() for s in parts]


def resolve(name, field):
    """Build a catalog algebra from a name such as ``sweedler4``, ``line0:3``,
    ``line1:3``, ``cyclic:4`` or ``tensor(line1:3,sweedler4)``.  A leading
    ``catalog:`` is accepted and ignored."""
    if not isinstance(field, FieldSpec):
        raise TypeError("field must be a FieldSpec")
    text = name.strip()
    if text.startswith("catalog:"):
        text = text[len("catalog:"):]
    if text.startswith("tensor(") and text.endswith(")"):
        args = _split_args(text[len("tensor("):-1])
        if len(args) != 2:
            raise ParseError("tensor takes two arguments", name, 0)
        return tensor_hopf(resolve(args[0], field), resolve(args[1], field))
    head, _, param = text.partition(":")
    if head == "sweedler4" and not param:
        return sweedler4(field)
    if head == "trivial" and not param:
        return trivial_hopf(field)
    builders = {"line0": line_nilpotent, "line1": line_semisimple, "cyclic": cyclic_group_algebra}
    if head in builders:
        try:
            n = int(param)
        except ValueError:
            raise ParseError(f"{head} needs an integer parameter", name, len(head) + 1) from None
        return builders[head](n, field)
    raise ParseError(f"unknown catalog algebra {text!r}", name, 0)
