"""Algebra tests: relations as element identities, braiding elements,
the augmentation, and generator word products."""

import random

import pytest

from planartl.algebra import (
    AlgebraElement,
    augment,
    braiding_s,
    braiding_s_inv,
    elt_mul,
    word_product,
)
from planartl.coeff import (
    CONVENTION_A,
    CONVENTION_B,
    LOOP_FACTOR,
    LaurentPoly,
)
from planartl.diagram import enumerate_diagrams

CONVENTIONS = (CONVENTION_A, CONVENTION_B)
V = LaurentPoly.v_power(1)


def random_element(rng: random.Random, n: int) -> AlgebraElement:
    diagrams = enumerate_diagrams(n)
    terms = {}
    for _ in range(rng.randint(0, 3)):
        d = rng.choice(diagrams)
        coeff = LaurentPoly(
            {rng.randint(-2, 2): rng.randint(-3, 3) for _ in range(rng.randint(1, 2))}
        )
        terms[d] = terms.get(d, LaurentPoly.zero()) + coeff
    return AlgebraElement(n, terms)


def test_u_squared_scales_by_loop_weight():
    u1 = AlgebraElement.generator(2, 1)
    assert elt_mul(u1, u1) == u1.scale(LOOP_FACTOR)
    assert elt_mul(u1, u1).to_text() == "(v^1+v^-1) * udud"


def test_u_relations_symbolically():
    for n in range(2, 9):
        for i in range(1, n):
            u_i = AlgebraElement.generator(n, i)
            assert elt_mul(u_i, u_i) == u_i.scale(LOOP_FACTOR)
            for j in range(1, n):
                u_j = AlgebraElement.generator(n, j)
                if abs(i - j) >= 2:
                    assert elt_mul(u_i, u_j) == elt_mul(u_j, u_i)
                elif abs(i - j) == 1:
                    assert elt_mul(elt_mul(u_i, u_j), u_i) == u_i


def test_braiding_elements_pinned():
    # s_i = v*U_i - 1 under convention A, v^2 - v*U_i under convention B
    n = 3
    for i in (1, 2):
        u_i = AlgebraElement.generator(n, i)
        one = AlgebraElement.one(n)
        s_a = braiding_s(n, i, CONVENTION_A)
        assert s_a == u_i.scale(V) - one
        s_b = braiding_s(n, i, CONVENTION_B)
        assert s_b == one.scale(LaurentPoly.v_power(2)) - u_i.scale(V)


def test_braid_relations_both_conventions():
    for conv in CONVENTIONS:
        for n in range(2, 8):
            for i in range(1, n):
                s_i = braiding_s(n, i, conv)
                for j in range(1, n):
                    s_j = braiding_s(n, j, conv)
                    if abs(i - j) == 1:
                        assert elt_mul(elt_mul(s_i, s_j), s_i) == elt_mul(
                            elt_mul(s_j, s_i), s_j
                        )
                    elif i != j:
                        assert elt_mul(s_i, s_j) == elt_mul(s_j, s_i)


def test_braiding_inverses():
    for conv in CONVENTIONS:
        for n in range(2, 9):
            one = AlgebraElement.one(n)
            for i in range(1, n):
                s_i = braiding_s(n, i, conv)
                s_inv = braiding_s_inv(n, i, conv)
                assert elt_mul(s_i, s_inv) == one
                assert elt_mul(s_inv, s_i) == one


def test_braiding_index_validation():
    with pytest.raises(ValueError):
        braiding_s(3, 3, CONVENTION_A)
    with pytest.raises(ValueError):
        braiding_s_inv(3, 0, CONVENTION_A)


def test_unit_law_on_random_elements():
    rng = random.Random(7)
    for n in range(1, 7):
        one = AlgebraElement.one(n)
        for _ in range(20):
            x = random_element(rng, n)
            assert elt_mul(one, x) == x
            assert elt_mul(x, one) == x


def test_algebra_axioms_on_random_elements():
    rng = random.Random(99)
    for n in range(1, 7):
        for _ in range(12):
            x = random_element(rng, n)
            y = random_element(rng, n)
            z = random_element(rng, n)
            assert elt_mul(elt_mul(x, y), z) == elt_mul(x, elt_mul(y, z))
            assert elt_mul(x, y + z) == elt_mul(x, y) + elt_mul(x, z)
            assert elt_mul(x + y, z) == elt_mul(x, z) + elt_mul(y, z)


def test_strand_mismatch_raises():
    with pytest.raises(ValueError):
        elt_mul(AlgebraElement.one(2), AlgebraElement.one(3))


def test_augment_values():
    for n in range(2, 7):
        for i in range(1, n):
            assert augment(AlgebraElement.generator(n, i)).is_zero
        assert augment(AlgebraElement.one(n)) == LaurentPoly.one()
        for conv in CONVENTIONS:
            for i in range(1, n):
                assert augment(braiding_s(n, i, conv)) == conv.lam


def test_augment_is_multiplicative_on_basis_pairs():
    for n in range(1, 6):
        diagrams = enumerate_diagrams(n)
        for x in diagrams:
            ex = AlgebraElement.from_diagram(x)
            for y in diagrams:
                ey = AlgebraElement.from_diagram(y)
                assert augment(elt_mul(ex, ey)) == augment(ex) * augment(ey)


def test_word_product_examples():
    # the empty word gives the identity element
    assert word_product(4, [], "U") == AlgebraElement.one(4)
    # a repeated cup generator picks up the loop weight
    u2 = AlgebraElement.generator(4, 2)
    assert word_product(4, [2, 2], "U") == u2.scale(LOOP_FACTOR)
    # descending braiding product, indices decreasing left to right
    expected = elt_mul(braiding_s(5, 4, CONVENTION_A), braiding_s(5, 3, CONVENTION_A))
    assert word_product(5, [4, 3], "s", CONVENTION_A) == expected
    inv = word_product(5, [4, 3], "s_inv", CONVENTION_A)
    assert elt_mul(expected, word_product(5, [3, 4], "s_inv", CONVENTION_A)) == AlgebraElement.one(5)
    assert elt_mul(
        word_product(5, [4, 3], "s", CONVENTION_A), inv
    ) != AlgebraElement.one(5)  # wrong cancellation order


def test_word_product_validation():
    with pytest.raises(ValueError):
        word_product(4, [4], "U")
    with pytest.raises(ValueError):
        word_product(4, [1], "s")  # convention required
    with pytest.raises(ValueError):
        word_product(4, [1], "t")


def test_element_text_zero_and_order():
    assert AlgebraElement.zero(3).to_text() == "0"
    x = AlgebraElement.one(2) + AlgebraElement.generator(2, 1)
    # identity word uudd precedes udud in the u < d order
    assert x.to_text() == "(1) * uudd + (1) * udud"
