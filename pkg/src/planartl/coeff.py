"""Exact coefficient arithmetic.

Everything symbolic in this package is linear algebra over the ring of
integer Laurent polynomials Z[v, v^-1].  Rank computations specialize v
to a nonzero rational and continue with exact fractions, so no floating
point is ever involved.

The two weight conventions for the braiding elements s_i = lam + mu*U_i
are packaged as :class:`Convention`:

* convention ``A``: (lam, mu) = (-1, v), so s_i = v*U_i - 1
* convention ``B``: (lam, mu) = (v^2, -v), so s_i = v^2 - v*U_i

In both cases mu/lam is a unit monomial (-v and -v^-1 respectively).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "LaurentPoly",
    "Rational",
    "Convention",
    "CONVENTION_A",
    "CONVENTION_B",
    "convention",
    "mu_over_lambda",
    "poly_add",
    "poly_mul",
    "specialize",
    "parse_rational",
    "LOOP_FACTOR",
    "loop_factor_power",
]

Rational = Fraction

_TERM_RE = re.compile(r"([+-]?)((?:\d+\*)?v(?:\^(-?\d+))?|\d+)")


class LaurentPoly:
    """An integer-coefficient Laurent polynomial in one variable v.

    Instances are immutable, hashable and kept in canonical form: the
    internal exponent-to-coefficient map never stores a zero.  The zero
    polynomial has empty support.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[int, int] | None = None):
        clean: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPoly":
        return _ONE

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def v_power(cls, e: int, coeff: int = 1) -> "LaurentPoly":
        """The monomial coeff * v^e."""
        return cls({e: coeff})

    # -- inspection --------------------------------------------------

    def coefficients(self) -> dict[int, int]:
        """A copy of the exponent -> coefficient map (canonical form)."""
        return dict(self._terms)

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_unit_monomial(self) -> bool:
        """True when the polynomial is +-v^e, hence invertible in Z[v, v^-1]."""
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1)

    # -- ring operations ---------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in q._terms.items():
            w = terms.get(e, 0) + c
            if w:
                terms[e] = w
            elif e in terms:
                del terms[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = terms
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {e: -c for e, c in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self._terms, q._terms
        if not a or not b:
            return _ZERO
        if len(a) == 1:
            ((ea, ca),) = a.items()
            out = LaurentPoly.__new__(LaurentPoly)
            out._terms = {ea + e: ca * c for e, c in b.items()}
            out._hash = None
            return out
        if len(b) == 1:
            ((eb, cb),) = b.items()
            out = LaurentPoly.__new__(LaurentPoly)
            out._terms = {e + eb: c * cb for e, c in a.items()}
            out._hash = None
            return out
        terms: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                w = terms.get(e, 0) + ca * cb
                if w:
                    terms[e] = w
                elif e in terms:
                    del terms[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = terms
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            return self.inverse() ** (-k)
        out = _ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit monomial +-v^e; raises otherwise."""
        if not self.is_unit_monomial():
            raise ValueError(f"{self} is not a unit in Z[v, v^-1]")
        ((e, c),) = self._terms.items()
        return LaurentPoly({-e: c})

    # -- comparisons & hashing ---------------------------------------

    def __eq__(self, other) -> bool:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    # -- evaluation --------------------------------------------------

    def specialize(self, x: Fraction) -> Fraction:
        """Evaluate at v = x exactly; x must be a nonzero rational."""
        x = Fraction(x)
        if x == 0:
            raise ValueError("v must be a unit")
        return sum((c * x**e for e, c in self._terms.items()), Fraction(0))

    # -- text form ---------------------------------------------------

    def to_text(self, compact: bool = False) -> str:
        """Canonical text: terms c*v^e sorted by descending exponent.

        Coefficient +-1 on a nonconstant term is suppressed, so the loop
        weight renders as ``v^1 + v^-1``.
        """
        if not self._terms:
            return "0"
        plus, minus = ("+", "-") if compact else (" + ", " - ")
        pieces: list[str] = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = f"v^{e}"
            else:
                body = f"{abs(c)}*v^{e}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((minus if c < 0 else plus) + body)
        return "".join(pieces)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of :meth:`to_text` (whitespace-insensitive)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return _ZERO
        terms: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if not m or (pos > 0 and not m.group(1)):
                raise ValueError(f"bad polynomial text: {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            body = m.group(2)
            if "v" in body:
                coeff = int(body.split("*")[0]) if "*" in body else 1
                e = int(m.group(3)) if m.group(3) is not None else 1
            else:
                coeff = int(body)
                e = 0
            w = terms.get(e, 0) + sign * coeff
            if w:
                terms[e] = w
            elif e in terms:
                del terms[e]
            pos = m.end()
        return cls(terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._terms.items()))!r})"


_ZERO = LaurentPoly()
_ONE = LaurentPoly({0: 1})

#: The weight of an erased closed loop: a = v + v^-1.
LOOP_FACTOR = LaurentPoly({1: 1, -1: 1})

_loop_powers: list[LaurentPoly] = [_ONE]


def loop_factor_power(k: int) -> LaurentPoly:
    """(v + v^-1)^k, cached."""
    while len(_loop_powers) <= k:
        _loop_powers.append(_loop_powers[-1] * LOOP_FACTOR)
    return _loop_powers[k]


@dataclass(frozen=True)
class Convention:
    """One of the two (lam, mu) weight choices for s_i = lam + mu*U_i."""

    tag: str
    lam: LaurentPoly
    mu: LaurentPoly

    def __post_init__(self):
        expected = {
            "A": (LaurentPoly.constant(-1), LaurentPoly.v_power(1)),
            "B": (LaurentPoly.v_power(2), LaurentPoly.v_power(1, -1)),
        }
        if self.tag not in expected:
            raise ValueError(f"unknown convention tag {self.tag!r}")
        lam, mu = expected[self.tag]
        if self.lam != lam or self.mu != mu:
            raise ValueError(f"convention {self.tag} requires (lam, mu) = ({lam}, {mu})")


CONVENTION_A = Convention("A", LaurentPoly.constant(-1), LaurentPoly.v_power(1))
CONVENTION_B = Convention("B", LaurentPoly.v_power(2), LaurentPoly.v_power(1, -1))

_CONVENTIONS = {"A": CONVENTION_A, "B": CONVENTION_B}


def convention(tag: str) -> Convention:
    try:
        return _CONVENTIONS[tag]
    except KeyError:
        raise ValueError(f"unknown convention tag {tag!r}") from None


def mu_over_lambda(c: Convention) -> LaurentPoly:
    """The unit mu * lam^-1: -v for convention A, -v^-1 for convention B."""
    return c.mu * c.lam.inverse()


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def specialize(p: LaurentPoly, x: Fraction) -> Fraction:
    """Evaluate p at v = x; rejects x = 0 since v must be invertible."""
    return p.specialize(x)


def parse_rational(text: str) -> Fraction:
    """Parse 'a/b' or 'a' into an exact rational."""
    return Fraction(text)
