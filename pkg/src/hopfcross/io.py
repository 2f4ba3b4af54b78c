"""JSON interchange for algebras, crossed systems and linear maps.

Algebra schema::

    {"field": "f3", "dim": n, "basis": [...], "unit": [...], "counit": [...],
     "mult": [[i, j, k, "c"], ...], "comult": [[i, j, k, "c"], ...],
     "antipode": [[i, j, "c"], ...]}

``mult`` entries mean ``e_i e_j`` has coefficient ``c`` at ``e_k``; ``comult``
entries mean ``Delta(e_i)`` has coefficient ``c`` at ``e_j (x) e_k``; and
``antipode`` entries mean ``S(e_i)`` has coefficient ``c`` at ``e_j``.
Indices are 0-based, omitted entries are zero and coefficients are strings in
the scalar grammar of the field.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import sparse as sp
from .catalog import resolve
from .crossed import CrossedSystem
from .errors import FieldMismatch, MalformedData, ParseError
from .fields import FieldSpec, format_scalar
from .hopf import HopfAlgebra, LinearMap
from .linalg import Matrix

__all__ = [
    "parse_json",
    "field_to_json",
    "field_from_json",
    "algebra_to_json",
    "algebra_from_json",
    "load_algebra",
    "dump_algebra",
    "system_to_json",
    "system_from_json",
    "map_to_json",
    "map_from_json",
    "read_json_file",
    "parse_element",
]


def parse_json(text):
    """``json.loads`` with failures reported as ParseError carrying the character position."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", text[max(0, exc.pos - 20):exc.pos + 20], exc.pos) from None


def read_json_file(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MalformedData(f"cannot read {path}: {exc.strerror}") from None
    return parse_json(text)


def field_to_json(spec):
    return str(spec)


def field_from_json(data):
    if isinstance(data, str):
        return FieldSpec.from_flag(data)
    if isinstance(data, dict) and "flag" in data:
        return FieldSpec.from_flag(data["flag"])
    raise MalformedData("field must be a flag string such as 'q', 'f3' or 'f3(X1)'")


def _scalar(spec, c, where):
    if isinstance(c, bool) or not isinstance(c, (str, int)):
        raise MalformedData(f"{where}: coefficient must be a string or integer")
    return spec.parse(c) if isinstance(c, str) else spec(c)


def _index(v, n, where):
    if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
        raise MalformedData(f"{where}: index {v!r} out of range 0..{n - 1}")
    return v


def _entries(data, key, arity, n, spec):
    rows = data.get(key, [])
    if not isinstance(rows, list):
        raise MalformedData(f"{key} must be a list")
    for pos, row in enumerate(rows):
        where = f"{key}[{pos}]"
        if not isinstance(row, list) or len(row) != arity + 1:
            raise MalformedData(f"{where}: expected {arity} indices and a coefficient")
        idx = tuple(_index(v, n, where) for v in row[:arity])
        yield idx, _scalar(spec, row[arity], where)


def _vector(data, key, n, spec):
    v = data.get(key)
    if not isinstance(v, list) or len(v) != n:
        raise MalformedData(f"{key} must list {n} coefficients")
    return [_scalar(spec, c, key) for c in v]


def algebra_to_json(H):
    F = H.field
    n = H.dim
    mult = [[i, j, k, format_scalar(c)] for i in range(n) for j in range(n)
            for k, c in sorted(H.mult[i][j].items())]
    comult = [[i, j, k, format_scalar(c)] for i in range(n) for (j, k), c in sorted(H.comult[i].items())]
    antipode = [[i, j, format_scalar(c)] for i in range(n) for j, c in sorted(H.antipode[i].items())]
    out = {
        "field": field_to_json(F),
        "dim": n,
        "basis": list(H.labels),
        "unit": [format_scalar(c) for c in H.dense(H.unit)],
        "counit": [format_scalar(c) for c in H.counit],
        "mult": mult,
        "comult": comult,
        "antipode": antipode,
    }
    if "name" in H.meta:
        out["name"] = H.meta["name"]
    return out


def algebra_from_json(data, field=None):
    """Build a HopfAlgebra from parsed JSON; ``field`` must agree with the file when given."""
    if not isinstance(data, dict):
        raise MalformedData("algebra JSON must be an object")
    for key in ("field", "dim", "unit", "counit"):
        if key not in data:
            raise MalformedData(f"missing key {key!r}")
    spec = field_from_json(data["field"])
    if field is not None and field != spec:
        raise FieldMismatch(f"file is over {spec}, requested {field}")
    n = data["dim"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise MalformedData("dim must be a positive integer")
    labels = data.get("basis") or [f"e{i}" for i in range(n)]
    if len(labels) != n or not all(isinstance(s, str) for s in labels):
        raise MalformedData(f"basis must list {n} labels")
    mult = {}
    for (i, j, k), c in _entries(data, "mult", 3, n, spec):
        sp.add_term(mult.setdefault((i, j), {}), k, c)
    comult = [{} for _ in range(n)]
    for (i, j, k), c in _entries(data, "comult", 3, n, spec):
        sp.add_term(comult[i], (j, k), c)
    antipode = [{} for _ in range(n)]
    for (i, j), c in _entries(data, "antipode", 2, n, spec):
        sp.add_term(antipode[i], j, c)
    unit = sp.to_sparse(_vector(data, "unit", n, spec))
    counit = _vector(data, "counit", n, spec)
    meta = {"name": data["name"]} if isinstance(data.get("name"), str) else {}
    return HopfAlgebra(spec, labels, mult, unit, comult, counit, antipode, meta)


def load_algebra(ref, field=None):
    """Resolve ``catalog:NAME`` (needs ``field``) or a path to an algebra JSON file."""
    if isinstance(ref, dict):
        return algebra_from_json(ref, field)
    if ref.startswith("catalog:"):
        if field is None:
            raise MalformedData("catalog algebras need a field")
        return resolve(ref, field)
    return algebra_from_json(read_json_file(ref), field)


def dump_algebra(H, path=None):
    text = json.dumps(algebra_to_json(H), indent=1)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


def _table_to_json(table):
    return [[i, j, k, format_scalar(c)] for i, row in enumerate(table) for j, vec in enumerate(row)
            for k, c in sorted(vec.items())]


def system_to_json(sys, A_ref=None, H_ref=None):
    """Crossed system JSON; algebras are embedded unless references are given."""
    F = sys.field
    triv = CrossedSystem(sys.A, sys.H)
    return {
        "field": field_to_json(F),
        "A": A_ref if A_ref is not None else algebra_to_json(sys.A),
        "H": H_ref if H_ref is not None else algebra_to_json(sys.H),
        "action": "trivial" if sys.action == triv.action else _table_to_json(sys.action),
        "cocycle": "trivial" if sys.cocycle == triv.cocycle else _table_to_json(sys.cocycle),
    }


def _table_from_json(data, key, rows, cols, n, spec):
    value = data.get(key, "trivial")
    if value == "trivial":
        return "trivial"
    if not isinstance(value, list):
        raise MalformedData(f"{key} must be 'trivial' or a list of [i, j, k, c]")
    out = {}
    for pos, row in enumerate(value):
        where = f"{key}[{pos}]"
        if not isinstance(row, list) or len(row) != 4:
            raise MalformedData(f"{where}: expected [i, j, k, c]")
        i = _index(row[0], rows, where)
        j = _index(row[1], cols, where)
        k = _index(row[2], n, where)
        sp.add_term(out.setdefault((i, j), {}), k, _scalar(spec, row[3], where))
    return out


def system_from_json(data, field=None):
    if not isinstance(data, dict) or "A" not in data or "H" not in data:
        raise MalformedData("crossed system JSON needs keys 'A' and 'H'")
    if field is None and "field" in data:
        field = field_from_json(data["field"])
    A = load_algebra(data["A"], field)
    H = load_algebra(data["H"], field)
    if A.field != H.field:
        raise FieldMismatch(f"A over {A.field}, H over {H.field}")
    spec = A.field
    action = _table_from_json(data, "action", H.dim, A.dim, A.dim, spec)
    cocycle = _table_from_json(data, "cocycle", H.dim, H.dim, A.dim, spec)
    return CrossedSystem(A, H, action, cocycle)


def map_to_json(f):
    rows, cols = f.matrix.shape
    return {"rows": rows, "cols": cols,
            "entries": [[i, j, format_scalar(c)] for i, row in enumerate(f.matrix.data)
                        for j, c in enumerate(row) if c]}


def map_from_json(data, source, target):
    """A map given as ``{"entries": [[row, col, "c"], ...]}`` (matrix entries, target x source)."""
    if not isinstance(data, dict) or "entries" not in data:
        raise MalformedData("map JSON needs 'entries'")
    F = source.field
    m = [[F.zero] * source.dim for _ in range(target.dim)]
    for pos, row in enumerate(data["entries"]):
        where = f"entries[{pos}]"
        if not isinstance(row, list) or len(row) != 3:
            raise MalformedData(f"{where}: expected [row, col, c]")
        i = _index(row[0], target.dim, where)
        j = _index(row[1], source.dim, where)
        m[i][j] = m[i][j] + _scalar(F, row[2], where)
    return LinearMap(source, target, Matrix(F, m, source.dim))


def _split_terms(text):
    """Split at top-level ``+``/``-`` signs, returning ``(sign, term)`` pairs."""
    out, cur, depth, sign = [], [], 0, 1
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and (cur and "".join(cur).strip() and not "".join(cur).rstrip().endswith("^")):
            out.append((sign, "".join(cur).strip()))
            cur, sign = [], (1 if ch == "+" else -1)
            continue
        if ch in "+-" and depth == 0 and not "".join(cur).strip():
            sign = sign * (1 if ch == "+" else -1)
            continue
        cur.append(ch)
    if depth != 0:
        raise ParseError("unbalanced parentheses", text, len(text))
    if not "".join(cur).strip():
        raise ParseError("empty term", text, len(text))
    out.append((sign, "".join(cur).strip()))
    return out


def parse_element(A, text):
    """Parse ``"y"``, ``"2*y^2 - X1*y"``, ``"(X1+1)*g"`` ... into a dense vector of ``A``.

    A term is ``coefficient*label``, a bare basis label, or a bare coefficient
    (a multiple of the unit).  Coefficients use the scalar grammar of the field.
    """
    F = A.field
    vec = [F.zero] * A.dim
    for sign, term in _split_terms(text):
        coeff, label = None, None
        if term in A.index:
            coeff, label = F.one, term
        else:
            depth = 0
            cut = -1
            for pos, ch in enumerate(term):
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    depth -= 1
                elif ch == "*" and depth == 0:
                    cut = pos
            if cut >= 0 and term[cut + 1:].strip() in A.index:
                coeff, label = F.parse(term[:cut].strip()), term[cut + 1:].strip()
            else:
                coeff = F.parse(term)
        if sign < 0:
            coeff = -coeff
        if label is None:
            for k, c in A.unit.items():
                vec[k] = vec[k] + coeff * c
        else:
            k = A.index[label]
            vec[k] = vec[k] + coeff
    return vec
