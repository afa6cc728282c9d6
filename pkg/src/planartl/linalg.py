"""Sparse matrices over Z[v, v^-1] and exact rank at rational points.

Matrices are stored column-major as dicts, which matches how boundary
matrices are built (one column per basis diagram).  Rank is computed by
specializing v exactly, clearing denominators columnwise, and running a
fraction-free sparse elimination over the integers: rows are combined by
cross-multiplication only, with a gcd content reduction after each
update, so no division ever leaves the integers.

A dense Bareiss elimination is provided as an independent cross-check;
the test suite keeps the two routes in agreement.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .coeff import LaurentPoly

__all__ = [
    "PolyMatrix",
    "rank_at",
    "rank_of_int_columns",
    "rank_dense_bareiss",
]


class PolyMatrix:
    """A rows x cols matrix over Z[v, v^-1], column-major sparse."""

    __slots__ = ("nrows", "ncols", "columns")

    def __init__(self, nrows: int, ncols: int, columns: list[dict[int, LaurentPoly]] | None = None):
        if columns is None:
            columns = [{} for _ in range(ncols)]
        if len(columns) != ncols:
            raise ValueError("column count mismatch")
        self.nrows = nrows
        self.ncols = ncols
        self.columns = [
            {r: c for r, c in col.items() if c} for col in columns
        ]
        for col in self.columns:
            for r in col:
                if not 0 <= r < nrows:
                    raise ValueError(f"row index {r} out of range")

    def entry(self, r: int, c: int) -> LaurentPoly:
        return self.columns[c].get(r, LaurentPoly.zero())

    @property
    def is_zero(self) -> bool:
        return all(not col for col in self.columns)

    def nnz(self) -> int:
        return sum(len(col) for col in self.columns)

    def compose(self, other: "PolyMatrix") -> "PolyMatrix":
        """Matrix product self * other (apply other first)."""
        if self.ncols != other.nrows:
            raise ValueError(
                f"dimension mismatch: {self.nrows}x{self.ncols} * {other.nrows}x{other.ncols}"
            )
        cols: list[dict[int, LaurentPoly]] = []
        mycols = self.columns
        for bcol in other.columns:
            acc: dict[int, LaurentPoly] = {}
            for j, c in bcol.items():
                for r, w in mycols[j].items():
                    prod = c * w
                    cur = acc.get(r)
                    cur = prod if cur is None else cur + prod
                    if cur:
                        acc[r] = cur
                    elif r in acc:
                        del acc[r]
            cols.append(acc)
        out = PolyMatrix.__new__(PolyMatrix)
        out.nrows = self.nrows
        out.ncols = other.ncols
        out.columns = cols
        return out

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self.compose(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.columns == other.columns
        )

    def first_difference(self, other: "PolyMatrix"):
        """The smallest (row, col) where the two matrices differ, with
        both entries, or None when equal.  Dimensions must agree."""
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("dimension mismatch")
        best = None
        for c in range(self.ncols):
            rows = set(self.columns[c]) | set(other.columns[c])
            for r in sorted(rows):
                a = self.entry(r, c)
                b = other.entry(r, c)
                if a != b:
                    if best is None or (r, c) < best[:2]:
                        best = (r, c, a, b)
                    break
        return best

    def specialize_int_columns(self, x: Fraction) -> list[dict[int, int]]:
        """Evaluate at v = x and clear denominators per column.

        Column scaling by a nonzero rational preserves rank, so the
        integer matrix returned has the same rank as the specialized
        rational one.
        """
        x = Fraction(x)
        if x == 0:
            raise ValueError("v must be a unit")
        out: list[dict[int, int]] = []
        for col in self.columns:
            vals = {r: c.specialize(x) for r, c in col.items()}
            vals = {r: q for r, q in vals.items() if q}
            if not vals:
                out.append({})
                continue
            denom_lcm = 1
            for q in vals.values():
                d = q.denominator
                denom_lcm = denom_lcm // gcd(denom_lcm, d) * d
            out.append({r: int(q * denom_lcm) for r, q in vals.items()})
        return out

    def entries_list(self) -> list[tuple[int, int, str]]:
        """All nonzero entries as (row, col, text), sorted by (row, col)."""
        items = [
            (r, c, poly.to_text(compact=True))
            for c, col in enumerate(self.columns)
            for r, poly in col.items()
        ]
        items.sort(key=lambda t: (t[0], t[1]))
        return items


def rank_of_int_columns(columns: list[dict[int, int]], nrows: int) -> int:
    """Rank of an integer matrix given as sparse columns, by fraction-free
    sparse elimination.

    Pivots are chosen to keep fill-in low (shortest row, then the column
    with fewest occupants).  Row updates use cross-multiplication
    pv*row - f*pivot_row followed by a content gcd reduction, which stays
    in the integers and leaves the row space unchanged.
    """
    rows: dict[int, dict[int, int]] = {}
    for j, col in enumerate(columns):
        for i, val in col.items():
            if val:
                rows.setdefault(i, {})[j] = val
    col_rows: dict[int, set[int]] = {}
    for i, row in rows.items():
        for j in row:
            col_rows.setdefault(j, set()).add(i)
    rank = 0
    while rows:
        pr = min(rows, key=lambda i: (len(rows[i]), i))
        prow = rows.pop(pr)
        pc = min(prow, key=lambda j: (len(col_rows[j]), j))
        pv = prow[pc]
        rank += 1
        for j in prow:
            occ = col_rows[j]
            occ.discard(pr)
            if not occ:
                del col_rows[j]
        for i in list(col_rows.get(pc, ())):
            row = rows[i]
            f = row[pc]
            new: dict[int, int] = {j: pv * v for j, v in row.items()}
            for j, v in prow.items():
                w = new.get(j, 0) - f * v
                if w:
                    new[j] = w
                elif j in new:
                    del new[j]
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    new = {j: v // g for j, v in new.items()}
            for j in row:
                if j not in new:
                    occ = col_rows.get(j)
                    if occ is not None:
                        occ.discard(i)
                        if not occ:
                            del col_rows[j]
            for j in new:
                if j not in row:
                    col_rows.setdefault(j, set()).add(i)
            if new:
                rows[i] = new
            else:
                del rows[i]
    return rank


def rank_at(matrix: PolyMatrix, x: Fraction) -> int:
    """Exact rank of the matrix specialized at v = x (x nonzero)."""
    cols = matrix.specialize_int_columns(x)
    return rank_of_int_columns(cols, matrix.nrows)


def rank_dense_bareiss(rows: list[list[int]]) -> int:
    """Dense single-step Bareiss elimination over the integers.

    Every intermediate entry is a minor of the input, so the divisions
    by the previous pivot are exact.  Used as the independent oracle for
    the sparse elimination.
    """
    if not rows:
        return 0
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0])
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        for i in range(r + 1, nrows):
            fi = m[i][c]
            rowi = m[i]
            rowr = m[r]
            for j in range(c, ncols):
                rowi[j] = (pv * rowi[j] - fi * rowr[j]) // prev
        prev = pv
        r += 1
        if r == nrows:
            break
    return r
