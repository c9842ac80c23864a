"""Finite-dimensional associative algebras by structure constants."""

from __future__ import annotations

from .field import Field
from .linalg import Bilinear, LinMap, SpanSolver, unit
from .report import Report


def trilinear_diff(left_first: Bilinear, left_second: Bilinear, right_inner: Bilinear, right_outer: Bilinear):
    """First basis triple where ``L(L'(a,b),c)`` and ``R(a, R'(b,c))`` differ, else ``None``.

    ``left_first`` is ``(a,b) -> u``, ``left_second`` is ``(u,c) -> w``,
    ``right_inner`` is ``(b,c) -> v`` and ``right_outer`` is ``(a,v) -> w``.
    Only nonzero structure constants are visited.
    """
    by_first: dict = {}
    for (k, c), row in left_second.terms.items():
        by_first.setdefault(k, []).append((c, row))
    by_second: dict = {}
    for (a, k), row in right_outer.terms.items():
        by_second.setdefault(k, []).append((a, row))
    left: dict = {}
    for (a, b), row1 in left_first.terms.items():
        for k, c1 in row1:
            for c, row2 in by_first.get(k, ()):
                for out, c2 in row2:
                    key = (a, b, c, out)
                    left[key] = left.get(key, 0) + c1 * c2
    right: dict = {}
    for (b, c), row1 in right_inner.terms.items():
        for k, c1 in row1:
            for a, row2 in by_second.get(k, ()):
                for out, c2 in row2:
                    key = (a, b, c, out)
                    right[key] = right.get(key, 0) + c1 * c2
    bad = [key for key in set(left) | set(right) if left.get(key, 0) != right.get(key, 0)]
    if not bad:
        return None
    return list(min(bad)[:3])


class Algebra:
    """Associative algebra ``(V, mult)`` with an optional unit vector."""

    def __init__(self, field: Field, dim: int, mult: Bilinear, unit_vec=None, name: str = "algebra"):
        if (mult.m, mult.n, mult.p) != (dim, dim, dim):
            raise ValueError(f"product tensor {mult.m}x{mult.n}x{mult.p} does not match dim {dim}")
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = None if unit_vec is None else tuple(field(a) for a in unit_vec)
        self.name = name

    def mul(self, u, v):
        return self.mult.apply(u, v)

    def b(self, i):
        return unit(self.field, self.dim, i)

    def verify(self) -> Report:
        rep = Report(f"{self.name}[dim={self.dim}]")
        m = self.mult
        rep.add("associativity", (w := trilinear_diff(m, m, m, m)) is None, w)
        if self.unit is not None:
            w = None
            for i in range(self.dim):
                bi = self.b(i)
                if self.mul(self.unit, bi) != bi or self.mul(bi, self.unit) != bi:
                    w = [i]
                    break
            rep.add("unit", w is None, w)
        return rep

    def find_identity(self):
        """Two-sided identity, solved linearly; ``None`` if the algebra is not unital."""
        n = self.dim
        if n == 0:
            return ()
        cols = []
        for j in range(n):
            col = []
            for i in range(n):
                col.extend(self.mult.basis_product(j, i))
                col.extend(self.mult.basis_product(i, j))
            cols.append(tuple(col))
        target = []
        for i in range(n):
            bi = self.b(i)
            target.extend(bi)
            target.extend(bi)
        sol = SpanSolver(self.field, 2 * n * n, cols).solve(tuple(target))
        return sol

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.mult.basis_product(i, j) == self.mult.basis_product(j, i) for i in range(n) for j in range(i))

    def left_mult_map(self, u) -> LinMap:
        return LinMap.from_columns(self.field, self.dim, [self.mul(u, self.b(j)) for j in range(self.dim)])


def verify_algebra_morphism(phi: LinMap, a: Algebra, b: Algebra, unital: bool = True) -> Report:
    rep = Report("algebra morphism")
    w = None
    for i in range(a.dim):
        for j in range(a.dim):
            if phi(a.mult.basis_product(i, j)) != b.mul(phi(a.b(i)), phi(a.b(j))):
                w = [i, j]
                break
        if w:
            break
    rep.add("multiplicative", w is None, w)
    if unital and a.unit is not None and b.unit is not None:
        rep.add("unital", phi(a.unit) == b.unit, ["unit"])
    return rep
