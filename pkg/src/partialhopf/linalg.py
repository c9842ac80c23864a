"""Exact dense linear algebra over a :class:`~partialhopf.field.Field`.

Vectors are plain tuples of scalars.  Subspaces are always carried in reduced
row-echelon form with leftmost-column, first-row pivoting, so bases and the
coordinates derived from them are reproducible bit for bit.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .errors import StructuralError
from .field import QQ, Field

Vector = tuple


# ---------------------------------------------------------------------------
# vectors


def zeros(field: Field, n: int) -> Vector:
    z = field.zero
    return (z,) * n


def unit(field: Field, n: int, i: int) -> Vector:
    z, o = field.zero, field.one
    return tuple(o if j == i else z for j in range(n))


def vadd(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise StructuralError(f"vector lengths differ: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise StructuralError(f"vector lengths differ: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def is_zero(v: Iterable) -> bool:
    return all(a == 0 for a in v)


def lincomb(field: Field, n: int, coeffs: Iterable, vectors: Iterable[Sequence]) -> Vector:
    """``sum(c * v)``; skips zero coefficients."""
    out = list(zeros(field, n))
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        for k, a in enumerate(v):
            if a != 0:
                out[k] += c * a
    return tuple(out)


def kron_vec(u: Sequence, v: Sequence) -> Vector:
    """Tensor product of coordinate vectors; index ``i * len(v) + j``."""
    return tuple(a * b for a in u for b in v)


def _field_of(vectors: Iterable[Sequence], default: Field = QQ) -> Field:
    from .field import GF, Mod

    for v in vectors:
        for a in v:
            if isinstance(a, Mod):
                return GF(a.p)
            return QQ
    return default


# ---------------------------------------------------------------------------
# echelon forms


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[Vector], list[int]]:
    """Reduced row-echelon form; returns the nonzero rows and their pivot columns."""
    m = [list(r) for r in rows]
    for r in m:
        if len(r) != ncols:
            raise StructuralError(f"row of length {len(r)} in a {ncols}-column matrix")
    nrows = len(m)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        row = m[r]
        if row[c] != 1:
            inv = 1 / row[c]
            row = [a * inv for a in row]
            m[r] = row
        nz = [j for j in range(c, ncols) if row[j] != 0]
        for i in range(nrows):
            if i == r:
                continue
            mi = m[i]
            f = mi[c]
            if f != 0:
                for j in nz:
                    mi[j] = mi[j] - f * row[j]
        pivots.append(c)
        r += 1
    return [tuple(x) for x in m[:r]], pivots


def image_basis(vectors: Sequence[Sequence]) -> list[Vector]:
    """Echelon basis of the span of ``vectors`` (empty input gives ``[]``)."""
    if not vectors:
        return []
    n = len(vectors[0])
    rows, _ = rref(vectors, n)
    return rows


def rank(vectors: Sequence[Sequence]) -> int:
    return len(image_basis(vectors))


class Subspace:
    """Subspace of ``field**n`` stored by its reduced echelon basis."""

    __slots__ = ("field", "n", "rows", "pivots")

    def __init__(self, field: Field, n: int, rows: Sequence[Vector] = (), pivots: Sequence[int] = ()):
        self.field = field
        self.n = n
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, field: Field, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != n:
                raise StructuralError(f"vector of length {len(v)} in a {n}-dimensional space")
        rows, piv = rref(vectors, n) if vectors else ([], [])
        return cls(field, n, rows, piv)

    @classmethod
    def whole(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, [unit(field, n, i) for i in range(n)], range(n))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> tuple:
        return self.rows

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of ``v`` after subtracting its pivot components."""
        out = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = out[p]
            if c != 0:
                for j, a in enumerate(row):
                    if a != 0:
                        out[j] -= c * a
        return tuple(out)

    def coords(self, v: Sequence):
        """Coordinates of ``v`` in the echelon basis, or ``None`` if ``v`` is outside."""
        if len(v) != self.n:
            raise StructuralError(f"vector of length {len(v)} tested against a subspace of {self.n}-space")
        c = tuple(v[p] for p in self.pivots)
        if not is_zero(self.reduce(v)):
            return None
        return c

    def contains(self, v: Sequence) -> bool:
        return self.coords(v) is not None

    def vector(self, coords: Sequence) -> Vector:
        return lincomb(self.field, self.n, coords, self.rows)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.n, list(self.rows) + list(other.rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.n != other.n:
            raise StructuralError("intersecting subspaces of different ambient spaces")
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.field, self.n)
        # a.S - b.T = 0
        cols = list(self.rows) + [tuple(-x for x in r) for r in other.rows]
        m = LinMap.from_columns(self.field, self.n, cols)
        vecs = [self.vector(k[: self.dim]) for k in kernel_basis(m)]
        return Subspace.span(self.field, self.n, vecs)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"


class Quotient:
    """Quotient ``field**n / sub`` with coordinates on the non-pivot columns."""

    def __init__(self, sub: Subspace):
        self.sub = sub
        piv = set(sub.pivots)
        self.free = tuple(j for j in range(sub.n) if j not in piv)

    @property
    def dim(self) -> int:
        return len(self.free)

    def coords(self, v: Sequence) -> Vector:
        r = self.sub.reduce(v)
        return tuple(r[j] for j in self.free)

    def lift(self, coords: Sequence) -> Vector:
        out = list(zeros(self.sub.field, self.sub.n))
        for j, c in zip(self.free, coords):
            out[j] = c
        return tuple(out)


# ---------------------------------------------------------------------------
# linear maps


class LinMap:
    """Dense matrix acting on column vectors: ``entries[r][c]``."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries: Sequence[Sequence], rows: int | None = None, cols: int | None = None):
        self.field = field
        ents = tuple(tuple(field(a) for a in row) for row in entries)
        if rows is None:
            rows = len(ents)
        if cols is None:
            cols = len(ents[0]) if ents else 0
        if len(ents) != rows or any(len(r) != cols for r in ents):
            raise StructuralError(f"entries do not form a {rows}x{cols} grid")
        self.rows = rows
        self.cols = cols
        self.entries = ents

    @classmethod
    def _raw(cls, field: Field, entries: tuple, rows: int, cols: int) -> "LinMap":
        m = object.__new__(cls)
        m.field, m.entries, m.rows, m.cols = field, entries, rows, cols
        return m

    @classmethod
    def identity(cls, field: Field, n: int) -> "LinMap":
        return cls._raw(field, tuple(unit(field, n, i) for i in range(n)), n, n)

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "LinMap":
        return cls._raw(field, tuple(zeros(field, cols) for _ in range(rows)), rows, cols)

    @classmethod
    def from_columns(cls, field: Field, rows: int, columns: Sequence[Sequence]) -> "LinMap":
        cols = len(columns)
        for c in columns:
            if len(c) != rows:
                raise StructuralError(f"column of length {len(c)} in a {rows}-row matrix")
        ents = tuple(tuple(columns[j][i] for j in range(cols)) for i in range(rows))
        return cls(field, ents, rows, cols)

    @classmethod
    def scalar(cls, field: Field, n: int, c) -> "LinMap":
        c = field(c)
        z = field.zero
        return cls._raw(field, tuple(tuple(c if i == j else z for j in range(n)) for i in range(n)), n, n)

    def __call__(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise StructuralError(f"applying a {self.rows}x{self.cols} map to a vector of length {len(v)}")
        nz = [(j, a) for j, a in enumerate(v) if a != 0]
        z = self.field.zero
        out = []
        for row in self.entries:
            s = z
            for j, a in nz:
                b = row[j]
                if b != 0:
                    s = s + b * a
            out.append(s)
        return tuple(out)

    def __matmul__(self, other: "LinMap") -> "LinMap":
        if not isinstance(other, LinMap):
            return NotImplemented
        if self.cols != other.rows:
            raise StructuralError(f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        ocols = other.columns()
        cols = [self(c) for c in ocols]
        return LinMap._raw(self.field, tuple(tuple(cols[j][i] for j in range(other.cols)) for i in range(self.rows)), self.rows, other.cols)

    def _same_shape(self, other: "LinMap"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise StructuralError("matrix shapes differ")

    def __add__(self, other: "LinMap") -> "LinMap":
        self._same_shape(other)
        return LinMap._raw(self.field, tuple(vadd(a, b) for a, b in zip(self.entries, other.entries)), self.rows, self.cols)

    def __sub__(self, other: "LinMap") -> "LinMap":
        self._same_shape(other)
        return LinMap._raw(self.field, tuple(vsub(a, b) for a, b in zip(self.entries, other.entries)), self.rows, self.cols)

    def __neg__(self) -> "LinMap":
        return self.scale(-1)

    def scale(self, c) -> "LinMap":
        c = self.field(c)
        return LinMap._raw(self.field, tuple(vscale(c, r) for r in self.entries), self.rows, self.cols)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "LinMap":
        return LinMap._raw(self.field, tuple(self.columns()), self.cols, self.rows)

    def kron(self, other: "LinMap") -> "LinMap":
        ents = []
        for ra in self.entries:
            for rb in other.entries:
                ents.append(tuple(a * b for a in ra for b in rb))
        return LinMap._raw(self.field, tuple(ents), self.rows * other.rows, self.cols * other.cols)

    def rank(self) -> int:
        return rank(self.entries) if self.rows else 0

    def is_injective(self) -> bool:
        return self.rank() == self.cols

    def is_surjective(self) -> bool:
        return self.rank() == self.rows

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.entries)

    def scalar_value(self):
        """The scalar ``c`` if this map is ``c * identity``, else ``None``.

        A 0x0 map counts as the scalar 0.
        """
        if self.rows != self.cols:
            return None
        if self.rows == 0:
            return self.field.zero
        c = self.entries[0][0]
        for i, r in enumerate(self.entries):
            for j, a in enumerate(r):
                if a != (c if i == j else 0):
                    return None
        return c

    def with_entry(self, r: int, c: int, value) -> "LinMap":
        ents = [list(row) for row in self.entries]
        ents[r][c] = self.field(value)
        return LinMap(self.field, ents, self.rows, self.cols)

    def image(self) -> Subspace:
        return Subspace.span(self.field, self.rows, self.columns())

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"LinMap({self.rows}x{self.cols})"


def block_diag(field: Field, blocks: Sequence[LinMap]) -> LinMap:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    ents = []
    c0 = 0
    z = field.zero
    for b in blocks:
        for r in b.entries:
            ents.append((z,) * c0 + tuple(r) + (z,) * (cols - c0 - b.cols))
        c0 += b.cols
    return LinMap._raw(field, tuple(ents), rows, cols)


def kernel_basis(m: LinMap) -> list[Vector]:
    """Basis of the null space, one vector per free column in increasing order."""
    field = m.field
    if m.cols == 0:
        return []
    rows, piv = rref(m.entries, m.cols) if m.rows else ([], [])
    pivset = set(piv)
    out = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = list(zeros(field, m.cols))
        v[f] = field.one
        for row, p in zip(rows, piv):
            v[p] = -row[f]
        out.append(tuple(v))
    return out


class SpanSolver:
    """Repeatedly express vectors as combinations of a fixed spanning list.

    Free coefficients are set to zero, so the answer is deterministic even
    when the spanning list is dependent.
    """

    def __init__(self, field: Field, n: int, span: Sequence[Sequence]):
        self.field = field
        self.n = n
        self.m = len(span)
        for v in span:
            if len(v) != n:
                raise StructuralError(f"span vector of length {len(v)} in {n}-space")
        # rows of [A | I], reduce only over the first m columns
        z, o = field.zero, field.one
        aug = []
        for i in range(n):
            aug.append([span[j][i] for j in range(self.m)] + [o if k == i else z for k in range(n)])
        r = 0
        pivots = []
        for c in range(self.m):
            if r == n:
                break
            pr = next((i for i in range(r, n) if aug[i][c] != 0), None)
            if pr is None:
                continue
            aug[r], aug[pr] = aug[pr], aug[r]
            row = aug[r]
            if row[c] != 1:
                inv = 1 / row[c]
                row = [a * inv for a in row]
                aug[r] = row
            nz = [j for j in range(len(row)) if row[j] != 0]
            for i in range(n):
                if i != r and aug[i][c] != 0:
                    f = aug[i][c]
                    ai = aug[i]
                    for j in nz:
                        ai[j] = ai[j] - f * row[j]
            pivots.append(c)
            r += 1
        self.rank = r
        self.pivots = pivots
        self.transform = LinMap._raw(field, tuple(tuple(row[self.m:]) for row in aug), n, n)

    def solve(self, v: Sequence):
        if len(v) != self.n:
            raise StructuralError(f"vector of length {len(v)} solved against {self.n}-space")
        w = self.transform(v)
        if not is_zero(w[self.rank:]):
            return None
        x = list(zeros(self.field, self.m))
        for i, p in enumerate(self.pivots):
            x[p] = w[i]
        return tuple(x)


def solve_membership(v: Sequence, span: Sequence[Sequence], field: Field | None = None):
    """Coefficients ``c`` with ``sum(c_i * span_i) == v``, or ``None`` if ``v`` is not in the span."""
    span = [tuple(s) for s in span]
    n = len(v)
    for s in span:
        if len(s) != n:
            raise StructuralError(f"span vector of length {len(s)} but target has length {n}")
    if field is None:
        field = _field_of([v, *span])
    return SpanSolver(field, n, span).solve(v)


def inverse(m: LinMap):
    """Inverse of a square map, or ``None`` if it is singular."""
    if m.rows != m.cols:
        return None
    n = m.rows
    solver = SpanSolver(m.field, n, m.columns())
    if solver.rank < n:
        return None
    return LinMap.from_columns(m.field, n, [solver.solve(unit(m.field, n, i)) for i in range(n)])


# ---------------------------------------------------------------------------
# bilinear maps / 3-tensors


class Bilinear:
    """Bilinear map ``U x V -> W`` stored sparsely by basis pairs.

    ``terms[(i, j)]`` lists the nonzero ``(k, c)`` with ``b_i * b_j = sum c * b_k``.
    """

    __slots__ = ("field", "m", "n", "p", "terms")

    def __init__(self, field: Field, m: int, n: int, p: int, terms: Mapping | None = None):
        self.field = field
        self.m, self.n, self.p = m, n, p
        clean = {}
        for (i, j), row in (terms or {}).items():
            if not (0 <= i < m and 0 <= j < n):
                raise StructuralError(f"bilinear index ({i},{j}) outside {m}x{n}")
            acc: dict[int, object] = {}
            for k, c in row:
                if not 0 <= k < p:
                    raise StructuralError(f"bilinear output index {k} outside {p}")
                c = field(c)
                acc[k] = acc[k] + c if k in acc else c
            kept = tuple(sorted((k, c) for k, c in acc.items() if c != 0))
            if kept:
                clean[(i, j)] = kept
        self.terms = clean

    @classmethod
    def zero(cls, field: Field, m: int, n: int, p: int) -> "Bilinear":
        return cls(field, m, n, p)

    @classmethod
    def from_dense(cls, field: Field, dense: Sequence, m: int | None = None, n: int | None = None, p: int | None = None) -> "Bilinear":
        m = len(dense) if m is None else m
        if len(dense) != m:
            raise StructuralError(f"tensor has {len(dense)} slices, expected {m}")
        terms = {}
        for i, plane in enumerate(dense):
            if n is None:
                n = len(plane)
            if len(plane) != n:
                raise StructuralError(f"tensor slice {i} has {len(plane)} rows, expected {n}")
            for j, vec in enumerate(plane):
                if p is None:
                    p = len(vec)
                if len(vec) != p:
                    raise StructuralError(f"tensor fibre ({i},{j}) has length {len(vec)}, expected {p}")
                row = [(k, c) for k, c in enumerate(vec) if field(c) != 0]
                if row:
                    terms[(i, j)] = row
        return cls(field, m, n or 0, p or 0, terms)

    @classmethod
    def from_function(cls, field: Field, m: int, n: int, p: int, fn: Callable[[int, int], Sequence]) -> "Bilinear":
        terms = {}
        for i in range(m):
            for j in range(n):
                vec = fn(i, j)
                row = [(k, c) for k, c in enumerate(vec) if c != 0]
                if row:
                    terms[(i, j)] = row
        return cls(field, m, n, p, terms)

    def to_dense(self) -> list:
        z = self.field.zero
        out = [[[z] * self.p for _ in range(self.n)] for _ in range(self.m)]
        for (i, j), row in self.terms.items():
            for k, c in row:
                out[i][j][k] = c
        return out

    def entry(self, i: int, j: int, k: int):
        for kk, c in self.terms.get((i, j), ()):
            if kk == k:
                return c
        return self.field.zero

    def basis_product(self, i: int, j: int) -> Vector:
        out = list(zeros(self.field, self.p))
        for k, c in self.terms.get((i, j), ()):
            out[k] = c
        return tuple(out)

    def apply(self, u: Sequence, v: Sequence) -> Vector:
        if len(u) != self.m or len(v) != self.n:
            raise StructuralError(f"bilinear {self.m}x{self.n}->{self.p} applied to lengths {len(u)}, {len(v)}")
        out = list(zeros(self.field, self.p))
        if not self.terms:
            return tuple(out)
        nzv = [(j, b) for j, b in enumerate(v) if b != 0]
        terms = self.terms
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in nzv:
                row = terms.get((i, j))
                if row:
                    ab = a * b
                    for k, c in row:
                        out[k] += ab * c
        return tuple(out)

    def with_entry(self, i: int, j: int, k: int, value) -> "Bilinear":
        terms = {key: list(row) for key, row in self.terms.items()}
        row = [(kk, c) for kk, c in terms.get((i, j), []) if kk != k]
        row.append((k, value))
        terms[(i, j)] = row
        return Bilinear(self.field, self.m, self.n, self.p, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Bilinear):
            return NotImplemented
        return (self.m, self.n, self.p) == (other.m, other.n, other.p) and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"Bilinear({self.m}x{self.n}->{self.p}, nnz={sum(len(r) for r in self.terms.values())})"
