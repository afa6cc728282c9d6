"""Exact linear algebra tests.  The sparse fraction-free elimination is
checked against two independent oracles: dense Bareiss elimination and
plain rational Gaussian elimination."""

import random
from fractions import Fraction

import pytest

from planartl.coeff import LaurentPoly
from planartl.linalg import (
    PolyMatrix,
    rank_at,
    rank_dense_bareiss,
    rank_of_int_columns,
)


def rank_fraction_gauss(rows: list[list[int]]) -> int:
    """Oracle: textbook Gaussian elimination over the rationals."""
    if not rows:
        return 0
    m = [[Fraction(x) for x in row] for row in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def columns_to_dense(cols, nrows):
    dense = [[0] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, val in col.items():
            dense[i][j] = val
    return dense


def random_int_columns(rng, nrows, ncols, density=0.4, bound=6):
    return [
        {
            i: rng.randint(-bound, bound)
            for i in range(nrows)
            if rng.random() < density
        }
        for _ in range(ncols)
    ]


def test_rank_trivial_cases():
    assert rank_of_int_columns([], 0) == 0
    assert rank_of_int_columns([{}, {}], 3) == 0
    identity_cols = [{i: 1} for i in range(4)]
    assert rank_of_int_columns(identity_cols, 4) == 4


def test_rank_pinned_small():
    cols = [{0: 1, 1: 2}, {0: 2, 1: 4}, {0: 1, 1: 1}]
    assert rank_of_int_columns(cols, 2) == 2
    cols = [{0: 1, 1: 2}, {0: 2, 1: 4}]
    assert rank_of_int_columns(cols, 2) == 1


def test_rank_routes_agree_on_random_matrices():
    rng = random.Random(424242)
    for _ in range(120):
        nrows = rng.randint(1, 8)
        ncols = rng.randint(1, 8)
        cols = random_int_columns(rng, nrows, ncols)
        dense = columns_to_dense(cols, nrows)
        sparse_rank = rank_of_int_columns([dict(c) for c in cols], nrows)
        assert sparse_rank == rank_dense_bareiss(dense)
        assert sparse_rank == rank_fraction_gauss(dense)


def test_rank_routes_agree_on_low_rank_products():
    # products of thin matrices have controlled rank, a sharper exercise
    rng = random.Random(99)
    for _ in range(40):
        n, k = rng.randint(2, 7), rng.randint(1, 3)
        a = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(n)]
        b = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(k)]
        prod = [
            [sum(a[i][t] * b[t][j] for t in range(k)) for j in range(n)]
            for i in range(n)
        ]
        cols = [
            {i: prod[i][j] for i in range(n) if prod[i][j]} for j in range(n)
        ]
        r = rank_of_int_columns(cols, n)
        assert r <= k
        assert r == rank_fraction_gauss(prod)


V = LaurentPoly.v_power(1)
ONE = LaurentPoly.one()


def poly_matrix_from_lists(entries):
    nrows = len(entries)
    ncols = len(entries[0]) if entries else 0
    cols = [
        {i: entries[i][j] for i in range(nrows) if entries[i][j]}
        for j in range(ncols)
    ]
    return PolyMatrix(nrows, ncols, cols)


def test_rank_at_specializes_exactly():
    # [[v, v^-1], [v^2, 1]] has determinant 0, so rank 1 at every point
    mat = poly_matrix_from_lists(
        [[V, LaurentPoly.v_power(-1)], [LaurentPoly.v_power(2), ONE]]
    )
    for point in (Fraction(2), Fraction(3), Fraction(-5, 7)):
        assert rank_at(mat, point) == 1
    # while [[v, v^-1], [1, 1]] drops rank only at v^2 = 1
    mat2 = poly_matrix_from_lists([[V, LaurentPoly.v_power(-1)], [ONE, ONE]])
    assert rank_at(mat2, Fraction(2)) == 2
    assert rank_at(mat2, Fraction(1)) == 1


def test_rank_at_rejects_zero():
    mat = poly_matrix_from_lists([[V]])
    with pytest.raises(ValueError, match="v must be a unit"):
        rank_at(mat, Fraction(0))


def test_rank_at_clears_denominators():
    mat = poly_matrix_from_lists([[LaurentPoly.v_power(-3)], [LaurentPoly.v_power(-1, 2)]])
    assert rank_at(mat, Fraction(1, 2)) == 1


def test_compose_matches_naive_product():
    rng = random.Random(7)

    def random_poly():
        return LaurentPoly({rng.randint(-2, 2): rng.randint(-2, 2)})

    for _ in range(25):
        p, q, r = rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 4)
        a = [[random_poly() for _ in range(q)] for _ in range(p)]
        b = [[random_poly() for _ in range(r)] for _ in range(q)]
        mat_a = poly_matrix_from_lists(a)
        mat_b = poly_matrix_from_lists(b)
        product = mat_a.compose(mat_b)
        for i in range(p):
            for j in range(r):
                expected = LaurentPoly.zero()
                for t in range(q):
                    expected = expected + a[i][t] * b[t][j]
                assert product.entry(i, j) == expected


def test_compose_dimension_mismatch():
    a = PolyMatrix(2, 3)
    b = PolyMatrix(2, 2)
    with pytest.raises(ValueError):
        a.compose(b)


def test_first_difference():
    a = poly_matrix_from_lists([[ONE, V], [ONE, ONE]])
    b = poly_matrix_from_lists([[ONE, V], [ONE, V]])
    assert a.first_difference(a.compose(PolyMatrix(2, 2, [{0: ONE}, {1: ONE}]))) is None
    diff = a.first_difference(b)
    assert diff is not None
    row, col, left, right = diff
    assert (row, col) == (1, 1)
    assert left == ONE and right == V


def test_entries_list_sorted_and_textual():
    mat = poly_matrix_from_lists([[ONE, V], [LaurentPoly.zero(), V + ONE]])
    assert mat.entries_list() == [
        (0, 0, "1"),
        (0, 1, "v^1"),
        (1, 1, "v^1+1"),
    ]
