"""Chain complex tests: basis ranks, the boundary maps, d o d = 0, the
Euler characteristic, and homology ranks at specializations."""

from fractions import Fraction

import pytest

from planartl.algebra import AlgebraElement, braiding_s, elt_mul
from planartl.chains import (
    boundary_element,
    build_complex,
    euler_characteristic,
    homology_ranks,
    right_mult_matrix,
    theorem_B_rank_identity,
)
from planartl.coeff import CONVENTION_A, CONVENTION_B, LaurentPoly, mu_over_lambda
from planartl.combin import fine, fine_by_enumeration, first_peak_count_B
from planartl.diagram import identity

CONVENTIONS = (CONVENTION_A, CONVENTION_B)


def test_chain_ranks_match_first_peak_counts():
    for conv in CONVENTIONS:
        for n in range(1, 8):
            cx = build_complex(n, conv)
            for i in range(-1, n):
                assert cx.chain_rank(i) == first_peak_count_B(n, n - i - 1)


def test_chain_ranks_pinned_n3():
    cx = build_complex(3, CONVENTION_A)
    assert [cx.chain_rank(i) for i in range(-1, 3)] == [1, 3, 5, 5]


def test_boundary_element_small_cases():
    # degree 0: the empty product alone
    for conv in CONVENTIONS:
        assert boundary_element(4, 0, conv) == AlgebraElement.one(4)
        # degree 1: 1 - lam^-1 s_{n-1}
        n = 4
        expected = AlgebraElement.one(n) - braiding_s(n, n - 1, conv).scale(
            conv.lam.inverse()
        )
        assert boundary_element(n, 1, conv) == expected


def test_degree_one_boundary_is_ratio_weighted_cup():
    # d^1 equals right multiplication by -(mu/lam) U_{n-1} then projection
    for conv in CONVENTIONS:
        for n in range(2, 7):
            cx = build_complex(n, conv)
            ratio = mu_over_lambda(conv)
            elt = AlgebraElement.generator(n, n - 1).scale(-ratio)
            expected = right_mult_matrix(elt, cx.bases[1], cx.bases[0])
            assert cx.differential(1) == expected


def test_degree_two_boundary_expansion():
    # expanding the three-term alternating sum collapses to
    # 1 + (mu/lam) U_{n-1} + (mu/lam)^2 U_{n-1} U_{n-2}, then projection
    for conv in CONVENTIONS:
        for n in range(3, 7):
            cx = build_complex(n, conv)
            ratio = mu_over_lambda(conv)
            u_top = AlgebraElement.generator(n, n - 1)
            u_next = AlgebraElement.generator(n, n - 2)
            elt = (
                AlgebraElement.one(n)
                + u_top.scale(ratio)
                + elt_mul(u_top, u_next).scale(ratio * ratio)
            )
            expected = right_mult_matrix(elt, cx.bases[2], cx.bases[1])
            assert cx.differential(2) == expected


def test_degree_zero_boundary_is_identity_coefficient():
    for conv in CONVENTIONS:
        for n in range(1, 7):
            cx = build_complex(n, conv)
            mat = cx.differential(0)
            assert mat.nrows == 1
            basis = cx.bases[0]
            for col, diagram in enumerate(basis.diagrams):
                entry = mat.entry(0, col)
                if diagram == identity(n):
                    assert entry == LaurentPoly.one()
                else:
                    assert entry.is_zero


def test_dd_zero_symbolically():
    for conv in CONVENTIONS:
        for n in range(1, 7):
            cx = build_complex(n, conv)
            for i in range(n - 1):
                assert cx.differential(i).compose(cx.differential(i + 1)).is_zero


def test_euler_characteristic_small():
    for n in range(1, 10):
        cx = build_complex(n, CONVENTION_A)
        assert euler_characteristic(cx) == (-1) ** (n - 1) * fine(n)
    cx3 = build_complex(3, CONVENTION_A)
    assert euler_characteristic(cx3) == -1 + 3 - 5 + 5 == 2


def test_homology_ranks_small():
    for conv in CONVENTIONS:
        for n in range(1, 6):
            report = homology_ranks(build_complex(n, conv))
            assert report.low_degrees_vanish
            assert report.fineberg_rank == fine(n)
            assert report.hopf_trace_holds
            assert report.euler_characteristic == (-1) ** (n - 1) * fine(n)


def test_homology_pinned_n3():
    report = homology_ranks(build_complex(3, CONVENTION_A), (Fraction(2), Fraction(3)))
    assert report.boundary_ranks == {0: 1, 1: 2, 2: 3}
    assert report.homology_ranks == {-1: 0, 0: 0, 1: 0, 2: 2}
    assert report.fineberg_rank == 2 == fine_by_enumeration(3)


def test_homology_alternative_points():
    report = homology_ranks(
        build_complex(4, CONVENTION_B), (Fraction(5), Fraction(-7, 3))
    )
    assert report.low_degrees_vanish
    assert report.fineberg_rank == fine(4) == 6


def test_homology_requires_two_nonzero_points():
    cx = build_complex(3, CONVENTION_A)
    with pytest.raises(ValueError):
        homology_ranks(cx, (Fraction(2),))
    with pytest.raises(ValueError):
        homology_ranks(cx, (Fraction(2), Fraction(2)))
    with pytest.raises(ValueError):
        homology_ranks(cx, (Fraction(0), Fraction(2)))


def test_build_complex_validation_and_cache():
    with pytest.raises(ValueError):
        build_complex(0, CONVENTION_A)
    assert build_complex(3, CONVENTION_A) is build_complex(3, CONVENTION_A)
    assert build_complex(3, CONVENTION_A) is not build_complex(3, CONVENTION_B)


def test_theorem_B_rank_identity():
    for n in range(1, 13):
        assert theorem_B_rank_identity(n)
    assert sum((-1) ** m * first_peak_count_B(3, m) for m in range(4)) == 2
    assert sum((-1) ** m * first_peak_count_B(1, m) for m in range(2)) == 0
