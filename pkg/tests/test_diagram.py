"""Diagram calculus tests: the fixed boundary numbering, the gluing
product with loop counting, and the Dyck bijection."""

import random

import pytest

from planartl.combin import catalan, dyck_words
from planartl.diagram import (
    Diagram,
    enumerate_diagrams,
    from_dyck,
    generator_u,
    identity,
    multiply,
    to_dyck,
)


def test_identity_pairs():
    assert identity(0).pairs() == ()
    assert identity(3).pairs() == ((1, 6), (2, 5), (3, 4))
    for n in range(9):
        assert to_dyck(identity(n)) == "u" * n + "d" * n


def test_generator_pinned():
    u1 = generator_u(2, 1)
    assert u1.pairs() == ((1, 2), (3, 4))
    assert u1.word == "udud"


def test_generator_validation():
    for n in range(2, 11):
        for i in range(1, n):
            g = generator_u(n, i)
            assert g != identity(n)
            Diagram(g.pairing)  # revalidates noncrossingness
    with pytest.raises(ValueError):
        generator_u(3, 0)
    with pytest.raises(ValueError):
        generator_u(3, 3)
    with pytest.raises(ValueError):
        generator_u(1, 1)


def test_diagram_validation_rejects_bad_pairings():
    with pytest.raises(ValueError):
        Diagram((1, 0, 3))  # odd length
    with pytest.raises(ValueError):
        Diagram((0, 1, 3, 2))  # fixed points
    with pytest.raises(ValueError):
        Diagram((2, 3, 0, 1))  # crossing arcs
    with pytest.raises(ValueError):
        Diagram((1, 2, 0, 3))  # not an involution


def test_u_squared_has_one_loop():
    u1 = generator_u(2, 1)
    result = multiply(u1, u1)
    assert result.diagram == u1
    assert result.loops == 1


def test_u_relations_on_diagrams():
    for n in range(2, 9):
        for i in range(1, n):
            u_i = generator_u(n, i)
            result = multiply(u_i, u_i)
            assert result.diagram == u_i and result.loops == 1
            for j in range(1, n):
                u_j = generator_u(n, j)
                if abs(i - j) >= 2:
                    left = multiply(u_i, u_j)
                    right = multiply(u_j, u_i)
                    assert left.diagram == right.diagram
                    assert left.loops == right.loops == 0
                elif abs(i - j) == 1:
                    first = multiply(u_i, u_j)
                    second = multiply(first.diagram, u_i)
                    assert second.diagram == u_i
                    assert first.loops + second.loops == 0


def test_identity_law():
    for n in range(9):
        e = identity(n)
        for x in enumerate_diagrams(n):
            left = multiply(e, x)
            right = multiply(x, e)
            assert left.diagram == x and left.loops == 0
            assert right.diagram == x and right.loops == 0


def test_strand_count_mismatch():
    with pytest.raises(ValueError, match="strand-count mismatch"):
        multiply(identity(2), identity(3))


def test_worked_example_word():
    # four-strand diagram with arcs {1,8},{2,5},{3,4},{6,7}: right cup on
    # dots 3,4, left cup on dots 2,3, and strands left1-right1, left4-right2
    sample = Diagram.from_pairs(4, [(1, 8), (2, 5), (3, 4), (6, 7)])
    assert sample.word == "uuuddudd"
    assert from_dyck("uuuddudd") == sample


def test_intro_product_example():
    # the five-strand pair whose product erases one loop and reproduces
    # the left factor
    x = Diagram.from_pairs(5, [(9, 10), (6, 7), (2, 3), (4, 5), (1, 8)])
    y = Diagram.from_pairs(5, [(8, 9), (2, 3), (4, 5), (7, 10), (1, 6)])
    result = multiply(x, y)
    assert result.diagram == x
    assert result.loops == 1


def test_bijection_round_trip_exhaustive():
    for n in range(9):
        for diagram in enumerate_diagrams(n):
            assert from_dyck(to_dyck(diagram)) == diagram
        for word in dyck_words(n):
            assert to_dyck(from_dyck(word)) == word


def test_from_dyck_rejects_non_dyck():
    for bad in ("du", "uudu", "uu", "uxud"):
        with pytest.raises(ValueError):
            from_dyck(bad)


def test_enumeration_counts_and_uniqueness():
    for n in range(9):
        diagrams = enumerate_diagrams(n)
        assert len(diagrams) == catalan(n)
        assert len(set(diagrams)) == len(diagrams)
    assert len(enumerate_diagrams(10)) == 16796


def test_enumeration_is_dyck_lex_ordered():
    for n in range(7):
        words = [d.word for d in enumerate_diagrams(n)]
        assert words == list(dyck_words(n))


def test_multiplication_associative_with_loops():
    rng = random.Random(20260810)
    for n in range(1, 9):
        diagrams = enumerate_diagrams(n)
        for _ in range(60):
            x, y, z = (rng.choice(diagrams) for _ in range(3))
            xy = multiply(x, y)
            xy_z = multiply(xy.diagram, z)
            yz = multiply(y, z)
            x_yz = multiply(x, yz.diagram)
            assert xy_z.diagram == x_yz.diagram
            assert xy.loops + xy_z.loops == yz.loops + x_yz.loops
