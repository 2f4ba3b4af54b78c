"""Sparse vectors and tensors as ``dict`` keyed by basis index (or index tuple).

Zero coefficients are never stored, so dict equality is vector equality.
"""


def axpy(acc, c, v):
    """``acc += c * v`` in place; returns ``acc``."""
    if not c:
        return acc
    for k, x in v.items():
        y = acc.get(k)
        s = c * x if y is None else y + c * x
        if s:
            acc[k] = s
        elif y is not None:
            del acc[k]
    return acc


def add_term(acc, key, c):
    if not c:
        return acc
    y = acc.get(key)
    s = c if y is None else y + c
    if s:
        acc[key] = s
    elif y is not None:
        del acc[key]
    return acc


def scale(c, v):
    if not c:
        return {}
    out = {}
    for k, x in v.items():
        y = c * x
        if y:
            out[k] = y
    return out


def sub(u, v):
    out = dict(u)
    for k, x in v.items():
        add_term(out, k, -x)
    return out


def to_sparse(vec):
    return {i: x for i, x in enumerate(vec) if x}


def to_dense(v, n, zero):
    out = [zero] * n
    for i, x in v.items():
        out[i] = x
    return out


def tensor(u, v):
    """Elementary tensor of two sparse vectors, keys concatenated into tuples."""
    out = {}
    for i, x in u.items():
        ki = i if isinstance(i, tuple) else (i,)
        for j, y in v.items():
            kj = j if isinstance(j, tuple) else (j,)
            out[ki + kj] = x * y
    return out


def first_difference(u, v):
    """Some key where ``u`` and ``v`` differ, or None."""
    for k in sorted(set(u) | set(v)):
        if not u.get(k, 0) == v.get(k, 0):
            return k
    return None
