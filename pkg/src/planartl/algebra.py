"""The diagram algebra on n strands over Z[v, v^-1]: sparse Laurent
weighted combinations of planar diagrams, with a = v + v^-1 as the
weight of every erased loop.

The diagram basis is the source of truth; the familiar presentation by
the U_i and their relations is exercised by the test suite rather than
used as a rewriting system.
"""

from __future__ import annotations

from .coeff import Convention, LaurentPoly, loop_factor_power
from .combin import dyck_lex_key
from .diagram import Diagram, generator_u, identity, multiply

__all__ = [
    "AlgebraElement",
    "elt_mul",
    "augment",
    "braiding_s",
    "braiding_s_inv",
    "word_product",
]

_ONE = LaurentPoly.one()


class AlgebraElement:
    """A finite Laurent-weighted combination of diagrams on n strands.

    Canonical form: no zero coefficients are stored.  Elements are
    immutable values; arithmetic returns new elements.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Diagram, LaurentPoly] | None = None):
        clean: dict[Diagram, LaurentPoly] = {}
        if terms:
            for d, c in terms.items():
                if d.n != n:
                    raise ValueError(f"diagram on {d.n} strands in an element on {n}")
                if c:
                    clean[d] = c
        self.n = n
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls(n, {identity(n): _ONE})

    @classmethod
    def from_diagram(cls, d: Diagram, coeff: LaurentPoly = _ONE) -> "AlgebraElement":
        return cls(d.n, {d: coeff})

    @classmethod
    def generator(cls, n: int, i: int) -> "AlgebraElement":
        return cls(n, {generator_u(n, i): _ONE})

    # -- linear structure ---------------------------------------------

    def _check(self, other: "AlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError(f"strand-count mismatch: {self.n} != {other.n}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            w = terms.get(d)
            w = c if w is None else w + c
            if w:
                terms[d] = w
            elif d in terms:
                del terms[d]
        out = AlgebraElement.__new__(AlgebraElement)
        out.n = self.n
        out.terms = terms
        return out

    def __neg__(self) -> "AlgebraElement":
        out = AlgebraElement.__new__(AlgebraElement)
        out.n = self.n
        out.terms = {d: -c for d, c in self.terms.items()}
        return out

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        """Multiply every coefficient by the scalar c (LaurentPoly or int)."""
        if isinstance(c, int):
            c = LaurentPoly.constant(c)
        if not c:
            return AlgebraElement(self.n)
        out = AlgebraElement.__new__(AlgebraElement)
        out.n = self.n
        out.terms = {d: c * w for d, w in self.terms.items()}
        return out

    def __rmul__(self, c):
        if isinstance(c, (int, LaurentPoly)):
            return self.scale(c)
        return NotImplemented

    # -- multiplication ------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return elt_mul(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    # -- comparisons and inspection -------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(((d.word, c) for d, c in self.terms.items())))))

    def coefficient(self, d: Diagram) -> LaurentPoly:
        return self.terms.get(d, LaurentPoly.zero())

    def to_text(self) -> str:
        """Terms as '(coeff) * dyckword', in Dyck-lex order of the word."""
        if not self.terms:
            return "0"
        return " + ".join(
            f"({self.terms[d].to_text(compact=True)}) * {d.word}"
            for d in sorted(self.terms, key=lambda d: dyck_lex_key(d.word))
        )

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, {self.to_text()})"


def elt_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the diagram product; every erased loop
    contributes a factor v + v^-1."""
    x._check(y)
    terms: dict[Diagram, LaurentPoly] = {}
    for dx, cx in x.terms.items():
        for dy, cy in y.terms.items():
            prod = multiply(dx, dy)
            c = cx * cy
            if prod.loops:
                c = c * loop_factor_power(prod.loops)
            d = prod.diagram
            w = terms.get(d)
            w = c if w is None else w + c
            if w:
                terms[d] = w
            elif d in terms:
                del terms[d]
    out = AlgebraElement.__new__(AlgebraElement)
    out.n = x.n
    out.terms = terms
    return out


def augment(x: AlgebraElement) -> LaurentPoly:
    """The coefficient of the identity diagram: the action of x on the
    rank-one trivial module, where every other diagram acts as 0."""
    return x.terms.get(identity(x.n), LaurentPoly.zero())


def braiding_s(n: int, i: int, c: Convention) -> AlgebraElement:
    """The braiding element s_i = lam + mu * U_i."""
    return AlgebraElement(n, {identity(n): c.lam, generator_u(n, i): c.mu})


def braiding_s_inv(n: int, i: int, c: Convention) -> AlgebraElement:
    """The inverse braiding element s_i^-1 = lam^-1 + mu^-1 * U_i."""
    return AlgebraElement(
        n, {identity(n): c.lam.inverse(), generator_u(n, i): c.mu.inverse()}
    )


def word_product(
    n: int,
    indices,
    kind: str = "U",
    c: Convention | None = None,
) -> AlgebraElement:
    """Left-to-right product of the named generators at the given
    indices; the empty word gives the identity element.

    kind is one of 'U', 's', 's_inv'; the convention is required for the
    braiding kinds.
    """
    if kind == "U":
        factory = lambda i: AlgebraElement.generator(n, i)
    elif kind == "s":
        if c is None:
            raise ValueError("braiding products need a convention")
        factory = lambda i: braiding_s(n, i, c)
    elif kind == "s_inv":
        if c is None:
            raise ValueError("braiding products need a convention")
        factory = lambda i: braiding_s_inv(n, i, c)
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    out = AlgebraElement.one(n)
    for i in indices:
        out = elt_mul(out, factory(i))
    return out
