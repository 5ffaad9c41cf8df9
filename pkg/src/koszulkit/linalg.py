"""Exact sparse linear algebra over the rationals and prime fields.

Rows are eliminated one at a time into an echelon basis keyed by pivot
column (leftmost nonzero entry).  Over the rationals the rows are kept as
primitive integer vectors and combined fraction-free; over a prime field the
pivot rows are normalized to a leading one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import InvalidParameterError, ShapeError

__all__ = [
    "Field",
    "QQ",
    "GF",
    "parse_field",
    "SparseMatrix",
    "Echelon",
    "rank",
    "kernel_basis",
    "intersect_subspaces",
    "span_basis",
]

DEFAULT_PRIME = 32003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class Field:
    kind: str = "rationals"
    p: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.p:
                raise InvalidParameterError("the rational field takes no modulus")
        elif self.kind == "prime_field":
            if not (2 <= self.p < 2 ** 31 and _is_prime(self.p)):
                raise InvalidParameterError("modulus must be a prime below 2^31, got %r" % (self.p,))
        else:
            raise InvalidParameterError("unknown field kind %r" % (self.kind,))

    @property
    def is_rational(self) -> bool:
        return self.kind == "rationals"

    def __str__(self):
        return "Q" if self.is_rational else "F_%d" % self.p

    @property
    def token(self) -> str:
        """The command line spelling: ``q`` or ``fp:<prime>``."""
        return "q" if self.is_rational else "fp:%d" % self.p

    def coerce(self, x):
        if self.is_rational:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator % self.p * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p


QQ = Field()


def GF(p: int = DEFAULT_PRIME) -> Field:
    return Field("prime_field", p)


def parse_field(text: str) -> Field:
    text = text.strip().lower()
    if text in ("q", "qq", "rationals"):
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise InvalidParameterError("bad prime in field spec %r" % text) from None
        return GF(p)
    raise InvalidParameterError("field must be 'q' or 'fp:<prime>', got %r" % text)


@dataclass(frozen=True)
class SparseMatrix:
    """A ``rows x cols`` matrix holding only its nonzero entries."""

    rows: int
    cols: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("negative matrix dimensions")
        clean = {}
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise ShapeError("entry (%d, %d) outside a %dx%d matrix" % (i, j, self.rows, self.cols))
            if v:
                clean[(i, j)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "SparseMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[dict]) -> "SparseMatrix":
        """Columns given as ``{row: value}`` dicts."""
        return cls(nrows, len(columns), {(i, j): v for j, col in enumerate(columns) for i, v in col.items() if v})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols, {})

    @property
    def shape(self):
        return (self.rows, self.cols)

    def to_dense(self) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def row_dicts(self) -> list:
        out = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def column_dicts(self) -> list:
        out = [dict() for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            out[j][i] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ShapeError("cannot multiply %dx%d by %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        rows = other.row_dicts()
        acc = {}
        for (i, k), a in self.entries.items():
            for j, b in rows[k].items():
                acc[(i, j)] = acc.get((i, j), 0) + a * b
        return SparseMatrix(self.rows, other.cols, acc)

    def apply(self, vector: Sequence) -> list:
        if len(vector) != self.cols:
            raise ShapeError("vector of length %d against %d columns" % (len(vector), self.cols))
        out = [0] * self.rows
        for (i, j), v in self.entries.items():
            if vector[j]:
                out[i] += v * vector[j]
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def dump(self) -> str:
        """Plain-text triplet format: ``rows cols`` header, then ``i j value`` lines."""
        lines = ["%d %d" % (self.rows, self.cols)]
        for (i, j) in sorted(self.entries):
            lines.append("%d %d %s" % (i, j, self.entries[(i, j)]))
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str) -> "SparseMatrix":
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not lines or len(lines[0]) != 2:
            raise ShapeError("missing 'rows cols' header")
        r, c = map(int, lines[0])
        entries = {}
        for parts in lines[1:]:
            if len(parts) != 3:
                raise ShapeError("bad triplet line %r" % " ".join(parts))
            v = Fraction(parts[2])
            entries[(int(parts[0]), int(parts[1]))] = int(v) if v.denominator == 1 else v
        return cls(r, c, entries)


# -- elimination ----------------------------------------------------------------


def _primitive(row: dict) -> dict:
    """Scale an integer row to coprime entries with a positive leading entry."""
    g = reduce(gcd, row.values())
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {j: v // g for j, v in row.items()}
    return row


def _to_integer_row(row: dict) -> dict:
    dens = [v.denominator for v in row.values() if isinstance(v, Fraction)]
    if dens:
        m = lcm(*dens)
        row = {j: int(v * m) for j, v in row.items()}
    return {j: int(v) for j, v in row.items() if v}


class Echelon:
    """An incrementally built echelon basis of a row space.

    ``add`` reduces a row against the current pivots and keeps the remainder
    if it is nonzero.  Pivot selection is purely structural: the leftmost
    nonzero column of the reduced row.
    """

    def __init__(self, field: Field = QQ):
        self.field = field
        self.pivots = {}  # pivot column -> row dict

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _prepare(self, row: dict) -> dict:
        if self.field.is_rational:
            return _to_integer_row(row)
        out = {}
        for j, v in row.items():
            v = self.field.coerce(v)
            if v:
                out[j] = v
        return out

    def reduce(self, row: dict) -> dict:
        """Remainder of ``row`` after elimination against the pivots (leftmost first)."""
        row = self._prepare(row)
        if self.field.is_rational:
            return self._reduce_q(row)
        return self._reduce_p(row)

    def _reduce_q(self, row: dict) -> dict:
        pivots = self.pivots
        while row:
            # walk pivots in increasing column order present in the row
            hits = [c for c in row if c in pivots]
            if not hits:
                return _primitive(row)
            c = min(hits)
            prow = pivots[c]
            a = prow[c]
            b = row[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {j: a * v for j, v in row.items()}
            for j, v in prow.items():
                w = new.get(j, 0) - b * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            row = _primitive(new) if new else new
        return row

    def _reduce_p(self, row: dict) -> dict:
        p = self.field.p
        pivots = self.pivots
        while row:
            hits = [c for c in row if c in pivots]
            if not hits:
                inv = pow(row[min(row)], -1, p)
                return {j: v * inv % p for j, v in row.items()}
            c = min(hits)
            b = row[c]
            new = dict(row)
            for j, v in pivots[c].items():
                w = (new.get(j, 0) - b * v) % p
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            row = new
        return row

    def add(self, row: dict) -> bool:
        """Insert ``row``; return True when it was independent of the current span."""
        rem = self.reduce(row)
        if not rem:
            return False
        self.pivots[min(rem)] = rem
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def reduced_rows(self) -> list:
        """Rows of the reduced echelon form, ordered by pivot column.

        Over the rationals entries are Fractions with pivot entry 1.
        """
        cols = sorted(self.pivots)
        if self.field.is_rational:
            rows = {c: {j: Fraction(v, self.pivots[c][c]) for j, v in self.pivots[c].items()} for c in cols}
            for c in reversed(cols):
                pc = rows[c]
                for c2 in cols:
                    if c2 < c and c in rows[c2]:
                        f = rows[c2][c]
                        r = rows[c2]
                        for j, v in pc.items():
                            w = r.get(j, 0) - f * v
                            if w:
                                r[j] = w
                            else:
                                r.pop(j, None)
            return [rows[c] for c in cols]
        p = self.field.p
        rows = {c: dict(self.pivots[c]) for c in cols}
        for c in reversed(cols):
            pc = rows[c]
            for c2 in cols:
                if c2 < c and c in rows[c2]:
                    f = rows[c2][c]
                    r = rows[c2]
                    for j, v in pc.items():
                        w = (r.get(j, 0) - f * v) % p
                        if w:
                            r[j] = w
                        else:
                            r.pop(j, None)
        return [rows[c] for c in cols]


def _dense(row: dict, n: int, field: Field) -> list:
    zero = Fraction(0) if field.is_rational else 0
    out = [zero] * n
    for j, v in row.items():
        out[j] = v
    return out


def _sparse(vec: Sequence) -> dict:
    return {j: v for j, v in enumerate(vec) if v}


def rank(m: SparseMatrix, field: Field = QQ) -> int:
    """Exact rank of ``m`` over ``field``."""
    # row rank == column rank; eliminate along the shorter side
    vectors = m.row_dicts() if m.rows <= m.cols else m.column_dicts()
    ech = Echelon(field)
    for v in vectors:
        if v:
            ech.add(v)
    return ech.rank


def kernel_basis(m: SparseMatrix, field: Field = QQ) -> list:
    """A basis of the null space, one vector per non-pivot column.

    The vector attached to free column ``f`` has a 1 at ``f``, zeros at the
    other free columns, and is read off the reduced row echelon form.
    """
    ech = Echelon(field)
    for r in m.row_dicts():
        if r:
            ech.add(r)
    reduced = ech.reduced_rows()
    pivot_cols = [min(r) for r in reduced]
    pivot_set = set(pivot_cols)
    one = Fraction(1) if field.is_rational else 1
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        vec = _dense({}, m.cols, field)
        vec[f] = one
        for c, r in zip(pivot_cols, reduced):
            v = r.get(f)
            if v:
                vec[c] = -v if field.is_rational else (-v) % field.p
        basis.append(vec)
    return basis


def span_basis(vectors: Iterable[Sequence], ambient_dim: int, field: Field = QQ) -> list:
    """Reduced row echelon basis of the span of ``vectors``."""
    ech = Echelon(field)
    for v in vectors:
        if len(v) != ambient_dim:
            raise ShapeError("vector of length %d in a space of dimension %d" % (len(v), ambient_dim))
        ech.add(_sparse(v))
    return [_dense(r, ambient_dim, field) for r in ech.reduced_rows()]


def intersect_subspaces(bases: Sequence[Sequence[Sequence]], ambient_dim: int, field: Field = QQ) -> list:
    """Basis (reduced echelon) of the intersection of the spans of ``bases``.

    An empty list of bases means the whole ambient space.
    """
    for basis in bases:
        for v in basis:
            if len(v) != ambient_dim:
                raise ShapeError("vector of length %d in a space of dimension %d" % (len(v), ambient_dim))
    if not bases:
        one = Fraction(1) if field.is_rational else 1
        return [[one if i == j else one * 0 for j in range(ambient_dim)] for i in range(ambient_dim)]
    current = span_basis(bases[0], ambient_dim, field)
    for other in bases[1:]:
        if not current:
            break
        other = span_basis(other, ambient_dim, field)
        current = _intersect_pair(current, other, ambient_dim, field)
    return current


def _intersect_pair(U, W, n, field):
    # x in U ∩ W  <=>  x = sum a_i U_i = sum b_j W_j ; solve [U^T | -W^T] (a, b) = 0
    k = len(U)
    cols = [_sparse(u) for u in U] + [{i: -v for i, v in _sparse(w).items()} for w in W]
    system = SparseMatrix.from_columns(n, cols)
    vecs = []
    for sol in kernel_basis(system, field):
        x = [sum((sol[i] * U[i][j] for i in range(k)), Fraction(0) if field.is_rational else 0) for j in range(n)]
        if not field.is_rational:
            x = [v % field.p for v in x]
        vecs.append(x)
    return span_basis(vecs, n, field)
