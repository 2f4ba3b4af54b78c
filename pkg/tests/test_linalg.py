from itertools import product

import pytest
from hypothesis import given, strategies as st

from hopfcross.errors import SingularMatrix
from hopfcross.fields import GF, QQ
from hopfcross.linalg import Matrix, invert_matrix, nullspace, rank, solve_linear

F3 = GF(3)


def test_identity_system():
    sol = solve_linear(Matrix(QQ, [[1, 0], [0, 1]]), [QQ(3), QQ(4)])
    assert sol.particular == [3, 4]
    assert sol.kernel == []


def test_single_equation_kernel():
    M = Matrix(F3, [[1, 1]])
    sol = solve_linear(M, [F3(0)])
    assert len(sol.kernel) == 1
    k = sol.kernel[0]
    assert M.apply(k) == [0]
    assert k[1] == 2 * k[0] and k[0]


def test_inconsistent_system():
    assert solve_linear(Matrix(QQ, [[1], [1]]), [QQ(0), QQ(1)]) is None


def test_inverse_examples():
    assert invert_matrix(Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 3)
    assert invert_matrix(Matrix(F3, [[2]])) == Matrix(F3, [[2]])
    with pytest.raises(SingularMatrix):
        invert_matrix(Matrix(QQ, [[1, 1], [1, 1]]))


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, 2), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices, st.data())
def test_solutions_satisfy_the_system(rows, data):
    M = Matrix(F3, rows)
    x = [F3(v) for v in data.draw(st.lists(st.integers(0, 2), min_size=M.cols, max_size=M.cols))]
    b = M.apply(x)
    sol = solve_linear(M, b)
    assert sol is not None
    assert M.apply(sol.particular) == b
    for k in sol.kernel:
        assert M.apply(k) == [0] * M.rows
    assert rank(M) + len(sol.kernel) == M.cols


@given(matrices)
def test_kernel_size_matches_brute_force(rows):
    # oracle: count all vectors of F_3^n in the kernel
    M = Matrix(F3, rows)
    count = sum(1 for v in product(range(3), repeat=M.cols) if M.apply([F3(x) for x in v]) == [0] * M.rows)
    assert count == 3 ** len(nullspace(M))


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inverse_is_two_sided(rows):
    M = Matrix(QQ, rows)
    try:
        Mi = invert_matrix(M)
    except SingularMatrix:
        assert rank(M) < M.rows
        return
    n = M.rows
    assert Mi @ M == Matrix.identity(QQ, n)
    assert M @ Mi == Matrix.identity(QQ, n)
