from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import ballot, expanded_count, partial_words
from weighted_motzkin import (
    NonIntegralEntryError,
    PathClass,
    RiordanArray,
    TriangularMatrix,
    WeightSpec,
    count_weighted,
    matrix_vector_product,
    recurrence_matrix,
    riordan_matrix,
    solve_motzkin_gf,
)
from weighted_motzkin.errors import ParameterError
from weighted_motzkin.matrices import weighted_riordan_array
from weighted_motzkin.series import TruncatedSeries

CATALAN_ROWS = [[1], [2, 1], [5, 4, 1], [14, 14, 6, 1], [42, 48, 27, 8, 1]]
SCHROEDER_ROWS = [[1], [3, 1], [11, 6, 1], [45, 31, 9, 1], [197, 156, 60, 12, 1]]
KT_GRID = [(k, t) for t in range(1, 5) for k in range(t + 1, t + 6) if k >= 2]


def rows(M):
    return [list(r) for r in M.rows]


def riordan(alpha, beta, n):
    g = solve_motzkin_gf(alpha, beta, n)
    return riordan_matrix(RiordanArray(g, g.shift(1)), n)


def test_riordan_catalan():
    M = riordan(2, 1, 5)
    assert rows(M) == CATALAN_ROWS
    assert M.entry(5, 2) == 48


def test_riordan_schroeder():
    assert rows(riordan(3, 2, 5)) == SCHROEDER_ROWS


def test_recurrence_examples():
    assert rows(recurrence_matrix(4, 1, 3)) == CATALAN_ROWS[:3]
    assert list(recurrence_matrix(5, 1, 5).rows[-1]) == [137, 132, 57, 12, 1]
    assert rows(recurrence_matrix(6, 2, 4)) == SCHROEDER_ROWS[:4]


@pytest.mark.parametrize("k,t", KT_GRID)
def test_recurrence_equals_riordan(k, t):
    assert recurrence_matrix(k, t, 12) == riordan(k - t - 1, t, 12)


@pytest.mark.parametrize("k,t", [(3, 1), (4, 1), (5, 1), (6, 2), (5, 2), (4, 2)])
def test_entries_count_partial_paths(k, t):
    w = WeightSpec.from_kt(k, t)
    M = recurrence_matrix(k, t, 8)
    for i in range(1, 9):
        for j in range(1, i + 1):
            assert M.entry(i, j) == count_weighted(PathClass.partial_motzkin(), i - 1, j - 1, w)
            if i <= 7:
                assert M.entry(i, j) == expanded_count(partial_words(i - 1, j - 1), w.a, w.b)


def test_ballot_closed_form():
    M = recurrence_matrix(4, 1, 12)
    for i in range(1, 13):
        for j in range(1, i + 1):
            assert M.entry(i, j) == ballot(i, j)


@pytest.mark.parametrize("k,t", [(2, 2), (1, 1), (3, 3), (4, 0)])
def test_bad_parameters(k, t):
    with pytest.raises(ParameterError):
        recurrence_matrix(k, t, 3)


def test_smallest_parameters():
    # k = 2, t = 1 has no horizontal steps: the matrix counts ballot-type Dyck prefixes
    assert rows(recurrence_matrix(2, 1, 4)) == [[1], [0, 1], [1, 0, 1], [0, 2, 0, 1]]


def test_riordan_rejects_bad_pair():
    g = solve_motzkin_gf(2, 1, 4)
    with pytest.raises(ValueError):
        RiordanArray(g, g)


def test_non_integral_entries_fail_loudly():
    half = TruncatedSeries.from_coefficients([1, Fraction(1, 2)], 4)
    x = TruncatedSeries.x(4)
    with pytest.raises(NonIntegralEntryError):
        riordan_matrix(RiordanArray(half, x), 3)


def test_products():
    assert matrix_vector_product(recurrence_matrix(3, 1, 5), [1, 2, 3, 4, 5]) == [1, 3, 9, 27, 81]
    assert matrix_vector_product(recurrence_matrix(6, 2, 5), [1, 3, 7, 15, 31]) == [1, 6, 36, 216, 1296]
    eye = TriangularMatrix(tuple(tuple(int(i == j) for j in range(i + 1)) for i in range(4)))
    assert matrix_vector_product(eye, [5, 6, 7, 8]) == [5, 6, 7, 8]


def test_serialization():
    M = recurrence_matrix(6, 2, 5)
    assert M.to_json() == {"rows": SCHROEDER_ROWS}
    assert TriangularMatrix.from_json(M.to_json()) == M
    assert M.to_csv().splitlines()[-1] == "197,156,60,12,1"


def test_generating_function_identity():
    for k, t in [(4, 1), (6, 2), (3, 1), (5, 1)]:
        R = weighted_riordan_array(k, t, 30)
        from weighted_motzkin.series import polynomial_product, rational_series

        a = rational_series([1], polynomial_product([1, -1], [1, -t]), 30)
        assert (R.g * a(R.f)).integer_coefficients() == [k**n for n in range(31)]


@given(st.integers(1, 5), st.integers(0, 6), st.integers(1, 10))
def test_columns_shift(t, extra, n):
    k = t + 1 + extra
    M = recurrence_matrix(k, t, n)
    assert all(M.entry(i, i) == 1 for i in range(1, n + 1))
    w = WeightSpec.from_kt(k, t)
    assert all(M.entry(i, 1) == M.entry(i - 1, 1) * w.a + M.entry(i - 1, 2) * w.b for i in range(2, n + 1))
    assert M.size == n
