import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from wreathdet.errors import ShapeError
from wreathdet.rings import ALPHA
from wreathdet.tableaux import (
    Partition,
    StandardTableau,
    class_size,
    content_polynomial,
    count_semistandard,
    g_of_T,
    hook_f,
    kostka,
    mn_character,
    partitions,
    row_reading_tableau,
    standard_tableaux,
)


@st.composite
def partition_strategy(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    parts = []
    while n > 0:
        p = draw(st.integers(min_value=1, max_value=n))
        if parts and p > parts[-1]:
            p = parts[-1]
        parts.append(p)
        n -= p
    return Partition(parts)


def test_partition_basics():
    lam = Partition((3, 1))
    assert lam.size == 4 and lam.depth == 2
    assert lam.conjugate() == Partition((2, 1, 1))
    with pytest.raises(ValueError):
        Partition((1, 2))


@given(partition_strategy())
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


def test_partitions_of_small_n():
    assert len(list(partitions(5))) == 7
    assert len(list(partitions(8))) == 22
    assert [p.parts for p in partitions(3)] == [(3,), (2, 1), (1, 1, 1)]


def test_standard_tableaux_counts():
    assert len(standard_tableaux(Partition((2, 2, 2)))) == 5
    assert len(standard_tableaux(Partition((2, 2, 2, 2)))) == 14
    assert len(standard_tableaux(Partition((4, 4)))) == 14
    assert len(standard_tableaux(Partition((3,)))) == 1


def test_hook_f_values():
    assert hook_f(Partition((2, 2))) == 2
    assert hook_f(Partition((2, 2, 2))) == 5
    assert hook_f(Partition((3, 3))) == 5
    assert hook_f(Partition((5,))) == 1


@given(partition_strategy())
def test_hook_f_matches_enumeration(lam):
    assert hook_f(lam) == len(standard_tableaux(lam))


def test_square_sum_identity():
    for n in range(1, 9):
        assert sum(hook_f(lam) ** 2 for lam in partitions(n)) == factorial(n)


def test_kostka_examples():
    for n, k in ((2, 2), (3, 2), (2, 3)):
        assert kostka(Partition((k,) * n), (k,) * n) == 1
    for n in range(1, 7):
        for lam in partitions(n):
            assert kostka(lam, (1,) * n) == hook_f(lam)
    assert kostka(Partition((2, 1)), (1, 1, 1)) == 2
    with pytest.raises(ShapeError):
        kostka(Partition((2,)), (1, 1, 1))


def test_kostka_weight_permutation_invariance():
    for n in range(2, 7):
        for lam in partitions(n):
            for mu in partitions(n):
                base = kostka(lam, mu.parts)
                padded = mu.padded(len(mu) + 1)
                for w in set(itertools.permutations(padded)):
                    assert kostka(lam, w) == base


def test_count_semistandard_hook_content():
    # oracle: the hook-content product counts SSYT with entries <= N
    for lam in (Partition((2, 2)), Partition((3, 1)), Partition((4, 4))):
        for N in (2, 3, 4):
            expect = 1
            for i, j in lam.cells():
                expect = expect * Fraction(N + j - i, lam.hook_length(i, j))
            assert count_semistandard(lam, N) == expect


def test_content_polynomial():
    assert content_polynomial(Partition((1,)), ALPHA) == 1
    n = 4
    expect = 1 * ALPHA**0
    for c in range(1, n):
        expect = expect * (1 + c * ALPHA)
    assert content_polynomial(Partition((n,)), ALPHA) == expect


def test_content_polynomial_tableau_identity():
    for N in range(1, 9):
        for k in (1, 2, 3, 4):
            for lam in partitions(N):
                val = content_polynomial(lam, Fraction(-1, k))
                expect = Fraction(
                    factorial(N) * count_semistandard(lam.conjugate(), k),
                    hook_f(lam) * k**N,
                )
                assert val == expect


def test_mn_character_trivial_and_sign():
    for N in range(1, 7):
        for cls in partitions(N):
            assert mn_character(Partition((N,)), cls) == 1
            assert mn_character(Partition((1,) * N), cls) == (-1) ** (N - cls.depth)


def test_mn_character_orthogonality():
    for N in range(1, 7):
        lams = list(partitions(N))
        classes = list(partitions(N))
        assert sum(class_size(c) for c in classes) == factorial(N)
        for lam, mu in itertools.product(lams, lams):
            total = sum(
                class_size(c) * mn_character(lam, c) * mn_character(mu, c)
                for c in classes
            )
            assert total == (factorial(N) if lam == mu else 0)


def test_mn_character_known_table():
    # S_3: chi^{(2,1)} takes values 2, 0, -1 on classes (1^3), (2,1), (3)
    lam = Partition((2, 1))
    assert mn_character(lam, Partition((1, 1, 1))) == 2
    assert mn_character(lam, Partition((2, 1))) == 0
    assert mn_character(lam, Partition((3,))) == -1


def test_standard_tableau_validation():
    with pytest.raises(ValueError):
        StandardTableau(((1, 3), (2, 2)))
    with pytest.raises(ValueError):
        StandardTableau(((2, 1), (3, 4)))


def test_g_of_T():
    T0 = row_reading_tableau(3, 2)
    assert g_of_T(T0).is_identity()
    tabs = standard_tableaux(Partition((2, 2, 2)))
    assert g_of_T(tabs[1]).images == (1, 2, 3, 5, 4, 6)
    for T in tabs:
        g = g_of_T(T)
        rebuilt = [
            tuple(g((i - 1) * 2 + j) for j in (1, 2)) for i in (1, 2, 3)
        ]
        assert tuple(rebuilt) == T.rows
    with pytest.raises(ShapeError):
        g_of_T(StandardTableau(((1, 2), (3,))))
