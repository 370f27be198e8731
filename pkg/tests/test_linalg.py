import itertools
import random
from fractions import Fraction

import pytest

from wreathdet.errors import ShapeError
from wreathdet.linalg import (
    Matrix,
    det,
    leading_principal_minors,
    solve_exact,
    symbolic_matrix,
)
from wreathdet.perm import Permutation
from wreathdet.verify import rand_matrix


def leibniz_det(A):
    n = A.nrows
    total = Fraction(0)
    for w in itertools.permutations(range(n)):
        sign = 1
        for i, j in itertools.combinations(range(n), 2):
            if w[i] > w[j]:
                sign = -sign
        prod = Fraction(1)
        for i in range(n):
            prod *= A[w[i], i]
        total += sign * prod
    return total


def test_det_against_leibniz():
    rng = random.Random(5)
    for n in range(1, 6):
        A = rand_matrix(rng, n, n)
        assert det(A) == leibniz_det(A)
    assert det(Matrix([])) == 1


def test_det_singular_and_pivoting():
    A = Matrix([[0, 1, 2], [0, 2, 4], [1, 1, 1]])
    assert det(A) == 0
    B = Matrix([[0, 1], [1, 0]])
    assert det(B) == -1


def test_det_symbolic():
    X = symbolic_matrix(3, 3)
    rng = random.Random(9)
    A = rand_matrix(rng, 3, 3)
    assignment = {("x", i + 1, j + 1): A[i, j] for i in range(3) for j in range(3)}
    assert det(X).subs(assignment).as_rational() == det(A)


def test_row_and_column_actions():
    A = Matrix([[1, 2], [3, 4], [5, 6]])
    sigma = Permutation((2, 3, 1))  # row i of result at position sigma(i)
    assert A.perm_rows(sigma) == Matrix([[5, 6], [1, 2], [3, 4]])
    tau = Permutation((2, 1))
    assert A.perm_cols(tau) == Matrix([[2, 1], [4, 3], [6, 5]])
    # P_sigma A and A P_tau realisations
    P = Matrix.identity(3).perm_rows(sigma)
    assert P @ A == A.perm_rows(sigma)
    Q = Matrix.identity(2).perm_cols(tau)
    assert A @ Q == A.perm_cols(tau)


def test_action_composition():
    rng = random.Random(11)
    A = rand_matrix(rng, 4, 4)
    s = Permutation((2, 3, 4, 1))
    t = Permutation((2, 1, 4, 3))
    assert A.perm_rows(s).perm_rows(t) == A.perm_rows(t * s)
    assert A.perm_cols(s).perm_cols(t) == A.perm_cols(s * t)


def test_blocks_and_shapes():
    A = Matrix([[1, 2], [3, 4]])
    B = Matrix([[5], [6]])
    M = Matrix.from_blocks([[A, B]])
    assert M == Matrix([[1, 2, 5], [3, 4, 6]])
    with pytest.raises(ShapeError):
        Matrix.from_blocks([[A, Matrix([[1]])]])
    with pytest.raises(ShapeError):
        Matrix([[1, 2], [3]])


def test_leading_principal_minors():
    A = Matrix([[2, 1, 0], [1, 2, 1], [0, 1, 2]])
    assert leading_principal_minors(A) == [2, 3, 4]
    # zero middle minor does not break the later ones
    B = Matrix([[0, 1], [1, 0]])
    assert leading_principal_minors(B) == [0, -1]


def test_solve_exact():
    rng = random.Random(3)
    A = rand_matrix(rng, 4, 4)
    while det(A) == 0:
        A = rand_matrix(rng, 4, 4)
    xs = [rand_matrix(rng, 1, 1)[0, 0] for _ in range(4)]
    rhs = [sum(A[i, j] * xs[j] for j in range(4)) for i in range(4)]
    assert solve_exact([list(r) for r in A.rows], rhs) == xs
    with pytest.raises(ShapeError):
        solve_exact([[1, 1], [2, 2]], [1, 1])
