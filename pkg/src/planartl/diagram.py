"""Planar diagrams on n strands: noncrossing perfect matchings of the 2n
boundary dots, the gluing product with closed-loop counting, the cup
generators U_i, and the canonical bijection with Dyck words.

Boundary numbering is fixed once: points 1..n are the right dots read
bottom to top, and points n+1..2n are the left dots read top to bottom.
One sweep of the boundary therefore visits the points in order 1..2n,
and the right dot i sits opposite the left dot i, which is point
2n+1-i.  Under that sweep every diagram spells a Dyck word: a u the
first time an arc is met, a d the second time.  Internally points are
stored 0-indexed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .combin import dyck_words, is_dyck_word

__all__ = [
    "Diagram",
    "MulResult",
    "identity",
    "generator_u",
    "multiply",
    "to_dyck",
    "from_dyck",
    "enumerate_diagrams",
]


class Diagram:
    """A planar diagram: a fixed-point-free noncrossing involution on
    the 2n boundary points.

    Immutable and hashable; ``pairing[p]`` is the 0-indexed partner of
    the 0-indexed point p, and ``word`` is the diagram's Dyck word.
    """

    __slots__ = ("n", "pairing", "word", "_hash")

    def __init__(self, pairing: tuple[int, ...]):
        size = len(pairing)
        if size % 2:
            raise ValueError("pairing must have even length")
        # One stack sweep checks everything at once: the involution
        # property, freeness from fixed points, and noncrossingness.
        letters = []
        stack: list[int] = []
        for p, q in enumerate(pairing):
            if q == p or not 0 <= q < size:
                raise ValueError("pairing must be a fixed-point-free involution")
            if q > p:
                stack.append(p)
                letters.append("u")
            else:
                if not stack or stack[-1] != q or pairing[q] != p:
                    raise ValueError("pairing is crossing or not an involution")
                stack.pop()
                letters.append("d")
        self.n = size // 2
        self.pairing = tuple(pairing)
        self.word = "".join(letters)
        self._hash = hash(self.pairing)

    @classmethod
    def _trusted(cls, n: int, pairing: tuple[int, ...], word: str | None = None) -> "Diagram":
        """Construction bypass for pairings already known to be valid."""
        self = cls.__new__(cls)
        self.n = n
        self.pairing = pairing
        if word is None:
            word = "".join("u" if q > p else "d" for p, q in enumerate(pairing))
        self.word = word
        self._hash = hash(pairing)
        return self

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "Diagram":
        """Build a diagram from 1-based matched point pairs."""
        pairing = [-1] * (2 * n)
        for a, b in pairs:
            pairing[a - 1] = b - 1
            pairing[b - 1] = a - 1
        if any(q < 0 for q in pairing):
            raise ValueError("pairs do not cover all boundary points")
        return cls(tuple(pairing))

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """The matched point pairs, 1-based, each (low, high), sorted."""
        return tuple(
            (p + 1, q + 1) for p, q in enumerate(self.pairing) if q > p
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.pairing == other.pairing

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return self.word

    def __repr__(self) -> str:
        return f"Diagram.from_dyck({self.word!r})"

    @staticmethod
    def from_dyck(word: str) -> "Diagram":
        return from_dyck(word)


@dataclass(frozen=True)
class MulResult:
    """A diagram product: the resulting diagram and the number of closed
    loops that were erased."""

    diagram: Diagram
    loops: int


@cache
def identity(n: int) -> Diagram:
    """The diagram joining right dot i to left dot i for every i."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    size = 2 * n
    pairing = tuple(size - 1 - p for p in range(size))
    return Diagram._trusted(n, pairing, "u" * n + "d" * n)


def generator_u(n: int, i: int) -> Diagram:
    """The cup generator U_i: cups joining dots i, i+1 on both sides,
    all other strands horizontal."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index must lie in 1..{n - 1}, got {i}")
    size = 2 * n
    pairing = list(size - 1 - p for p in range(size))
    a, b = i - 1, i                    # right dots i, i+1
    c, d = size - i, size - i - 1      # left dots i, i+1
    pairing[a], pairing[b] = b, a
    pairing[c], pairing[d] = d, c
    return Diagram._trusted(n, tuple(pairing))


def multiply(x: Diagram, y: Diagram) -> MulResult:
    """Glue x's right dots to y's left dots (x drawn on the left) and
    trace the strands through the wall.

    Closed components that live entirely in the wall are erased and
    counted.  The result keeps x's left dots as its left boundary and
    y's right dots as its right boundary, in the same numbering.
    """
    if x.n != y.n:
        raise ValueError(f"strand-count mismatch: {x.n} != {y.n}")
    n = x.n
    size = 2 * n
    xp, yp = x.pairing, y.pairing
    res = [0] * size
    seen_x = [False] * size
    seen_y = [False] * size
    # Outer points of the product: y points 0..n-1 become the product's
    # right dots, x points n..2n-1 its left dots.  Wall rule: x right
    # dot p (0-indexed) meets y left dot at point 2n-1-p and vice versa.
    for side0, start in [(1, p) for p in range(n)] + [(0, p) for p in range(n, size)]:
        if seen_y[start] if side0 else seen_x[start]:
            continue
        side, p = side0, start
        while True:
            if side:
                seen_y[p] = True
                q = yp[p]
                seen_y[q] = True
                if q < n:
                    end = q
                    break
                side, p = 0, size - 1 - q
            else:
                seen_x[p] = True
                q = xp[p]
                seen_x[q] = True
                if q >= n:
                    end = q
                    break
                side, p = 1, size - 1 - q
        res[start] = end
        res[end] = start
    loops = 0
    for p0 in range(n):
        if seen_x[p0]:
            continue
        loops += 1
        side, p = 0, p0
        while not (seen_y[p] if side else seen_x[p]):
            if side:
                seen_y[p] = True
                q = yp[p]
                seen_y[q] = True
                side, p = 0, size - 1 - q
            else:
                seen_x[p] = True
                q = xp[p]
                seen_x[q] = True
                side, p = 1, size - 1 - q
    return MulResult(Diagram._trusted(n, tuple(res)), loops)


def to_dyck(x: Diagram) -> str:
    """The Dyck word of a diagram (u at first visits, d at second)."""
    return x.word


def from_dyck(word: str) -> Diagram:
    """The diagram whose arcs match each d with its unmatched u."""
    if not is_dyck_word(word):
        raise ValueError(f"not a Dyck word: {word!r}")
    size = len(word)
    pairing = [0] * size
    stack: list[int] = []
    for p, ch in enumerate(word):
        if ch == "u":
            stack.append(p)
        else:
            q = stack.pop()
            pairing[p] = q
            pairing[q] = p
    return Diagram._trusted(size // 2, tuple(pairing), word)


@cache
def enumerate_diagrams(n: int) -> tuple[Diagram, ...]:
    """All diagrams on n strands in Dyck-lex order (u < d)."""
    return tuple(from_dyck(w) for w in dyck_words(n))
