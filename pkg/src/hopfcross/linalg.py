"""Dense exact linear algebra over a :class:`~hopfcross.fields.FieldSpec`.

Pivoting takes the first nonzero entry of a column scanning downwards, so
results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatch, ShapeMismatch, SingularMatrix

__all__ = ["Matrix", "LinearSolution", "rref", "solve_linear", "nullspace", "rank", "invert_matrix"]


class Matrix:
    """A rows x cols matrix with entries in ``field``; row-major lists."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data, cols=None):
        self.field = field
        self.data = [[field(x) if not field.contains(x) else x for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else (cols or 0)
        if any(len(r) != self.cols for r in self.data):
            raise ShapeMismatch("ragged matrix")

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, field, columns, rows):
        z = field.zero
        data = [[z] * len(columns) for _ in range(rows)]
        for j, col in enumerate(columns):
            for i, x in enumerate(col):
                data[i][j] = x
        return cls(field, data, len(columns))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j):
        return [row[j] for row in self.data]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return Matrix.from_columns(self.field, self.data, self.cols) if self.rows else Matrix.zeros(self.field, self.cols, 0)

    T = property(transpose)

    def apply(self, vec):
        if len(vec) != self.cols:
            raise ShapeMismatch(f"vector of length {len(vec)} for {self.rows}x{self.cols} matrix")
        z = self.field.zero
        out = []
        for row in self.data:
            s = z
            for a, x in zip(row, vec):
                if a and x:
                    s = s + a * x
            out.append(s)
        return out

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return self.apply(other)
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        cols = [self.apply(c) for c in other.columns()]
        return Matrix.from_columns(self.field, cols, self.rows) if cols else Matrix.zeros(self.field, self.rows, 0)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and all(
            a == b for r1, r2 in zip(self.data, other.data) for a, b in zip(r1, r2))

    __hash__ = None

    def key(self):
        """Hashable entry tuple (finite fields only)."""
        return tuple(int(x) for row in self.data for x in row)

    def is_zero(self):
        return not any(x for row in self.data for x in row)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix<{self.field}>[{body}]"


@dataclass
class LinearSolution:
    particular: list
    kernel: list

    @property
    def dimension(self):
        return len(self.kernel)


def rref(rows, field, ncols=None):
    """Reduced row echelon form of a list of rows (copied). Returns (rows, pivot_columns)."""
    m = [list(r) for r in rows]
    ncols = len(m[0]) if m else (ncols or 0)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv if x else x for x in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def _kernel_from_rref(m, pivots, ncols, field):
    z, one = field.zero, field.one
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [z] * ncols
        v[fcol] = one
        for row, pc in zip(m, pivots):
            if row[fcol]:
                v[pc] = -row[fcol]
        basis.append(v)
    return basis


def solve_linear(M, b=None):
    """Solve ``M x = b`` exactly.

    Returns a :class:`LinearSolution` (particular solution plus a kernel basis
    whose free coordinates are unit vectors), or ``None`` when the system is
    inconsistent.  ``b=None`` means the homogeneous system.
    """
    field = M.field
    if b is None:
        b = [field.zero] * M.rows
    if len(b) != M.rows:
        raise ShapeMismatch(f"right-hand side of length {len(b)} for {M.rows} rows")
    for x in b:
        field.check(x)
    n = M.cols
    aug = [row + [bi] for row, bi in zip(M.data, b)]
    m, pivots = rref(aug, field, n + 1)
    if n in pivots:
        return None
    z = field.zero
    particular = [z] * n
    for row, pc in zip(m, pivots):
        particular[pc] = row[n]
    kernel = _kernel_from_rref([row[:n] for row in m], pivots, n, field)
    return LinearSolution(particular, kernel)


def nullspace(M):
    return solve_linear(M).kernel


def rank(M):
    return len(rref(M.data, M.field, M.cols)[1])


def invert_matrix(M):
    """Inverse of a square matrix; raises :class:`SingularMatrix` when rank < n."""
    if M.rows != M.cols:
        raise ShapeMismatch("only square matrices can be inverted")
    n = M.rows
    field = M.field
    ident = Matrix.identity(field, n).data
    aug = [row + irow for row, irow in zip(M.data, ident)]
    m, pivots = rref(aug, field, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n or any(p >= n for p in pivots[:n]):
        raise SingularMatrix(f"rank {sum(p < n for p in pivots)} < {n}")
    return Matrix(field, [row[n:] for row in m], n)


def span_rank(vectors, field):
    if not vectors:
        return 0
    return len(rref(vectors, field)[1])


def coordinates(basis, vec, field):
    """Coordinates of ``vec`` in the span of ``basis`` (list of vectors), or None."""
    if not basis:
        return [] if not any(vec) else None
    M = Matrix.from_columns(field, basis, len(vec))
    sol = solve_linear(M, list(vec))
    return None if sol is None else sol.particular
