import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from degsl.errors import InvalidInput
from degsl.exactlin import SpanBasis, determinant, permutation_sign, rank, sylvester_check, sylvester_terms

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def square(size):
    return st.lists(st.lists(fracs, min_size=size, max_size=size), min_size=size, max_size=size)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(square))
def test_determinant_matches_sympy(M):
    assert determinant(M) == Fraction(str(sympy.Matrix(M).det()))


def test_determinant_edge_cases():
    assert determinant([]) == 1
    assert determinant([[0, 1], [1, 0]]) == -1
    with pytest.raises(InvalidInput):
        determinant([[1, 2, 3], [4, 5, 6]])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-2, 2), min_size=5, max_size=5), min_size=1, max_size=7))
def test_rank_matches_sympy(rows):
    vecs = [{k: Fraction(x) for k, x in enumerate(r) if x} for r in rows]
    assert rank(vecs) == sympy.Matrix(rows).rank()


def test_spanbasis_membership():
    b = SpanBasis()
    _, grew = b.reduce_into({0: Fraction(1), 1: Fraction(2)})
    assert grew
    _, grew = b.reduce_into({0: Fraction(2), 1: Fraction(4)})
    assert not grew
    assert {0: Fraction(-3), 1: Fraction(-6)} in b
    assert {1: Fraction(1)} not in b
    b.extend([{1: Fraction(1)}])
    assert len(b.pivots()) == 2


def test_permutation_sign():
    assert permutation_sign([1, 2, 3]) == 1
    assert permutation_sign([2, 1, 3]) == -1
    assert permutation_sign([3, 1, 2]) == 1


@pytest.mark.parametrize("size,k", [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3)])
def test_sylvester_identity(size, k):
    rng = random.Random(size * 10 + k)
    for _ in range(10):
        M = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(size)] for _ in range(size)]
        N = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(size)] for _ in range(size)]
        assert sylvester_check(M, N, k)


def test_sylvester_detects_wrong_sign():
    M = [[1, 2], [3, 5]]
    N = [[2, 0], [1, 1]]
    lhs, rhs = sylvester_terms(M, N, 1)
    assert lhs == rhs != 0 and lhs != -rhs
