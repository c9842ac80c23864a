"""Finite groups given by Cayley tables.

Elements are indices ``0..n-1``; ``table[i][j]`` is the index of ``g_i g_j``.
Names are kept only for input and output.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product

from .errors import StructuralError, VerificationError


class FiniteGroup:
    def __init__(self, table, names=None):
        table = [list(r) for r in table]
        n = len(table)
        if n == 0:
            raise StructuralError("a group needs at least one element")
        for i, row in enumerate(table):
            if len(row) != n:
                raise StructuralError(f"row {i} of the Cayley table has length {len(row)}, expected {n}")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise StructuralError(f"table entry {v!r} in row {i} is not an element index")
        self.order = n
        self.table = tuple(tuple(r) for r in table)
        self.names = tuple(str(x) for x in names) if names is not None else tuple(f"g{i}" for i in range(n))
        if len(self.names) != n or len(set(self.names)) != n:
            raise StructuralError("element names must be distinct and one per element")
        self._validate()

    def _validate(self):
        n, t = self.order, self.table
        full = set(range(n))
        for i in range(n):
            if set(t[i]) != full:
                raise VerificationError(f"row {i} is not a permutation; not a Latin square", {"row": i})
            if {t[j][i] for j in range(n)} != full:
                raise VerificationError(f"column {i} is not a permutation; not a Latin square", {"column": i})
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise VerificationError(
                    f"associativity fails at ({self.names[a]}, {self.names[b]}, {self.names[c]})",
                    {"triple": [a, b, c]},
                )
        ids = [e for e in range(n) if all(t[e][j] == j and t[j][e] == j for j in range(n))]
        if not ids:
            raise VerificationError("no identity element")
        self.identity = ids[0]
        self.inverse = tuple(next(j for j in range(n) if t[i][j] == self.identity) for i in range(n))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def index(self, name) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.order:
                raise StructuralError(f"element index {name} out of range")
            return name
        try:
            return self.names.index(str(name))
        except ValueError:
            raise StructuralError(f"unknown group element {name!r}") from None

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def to_json(self) -> dict:
        return {"order": self.order, "names": list(self.names), "table": [list(r) for r in self.table]}

    @classmethod
    def from_json(cls, data) -> "FiniteGroup":
        try:
            table = data["table"]
        except (KeyError, TypeError):
            raise StructuralError("group record needs a 'table'") from None
        if "order" in data and data["order"] != len(table):
            raise StructuralError(f"order {data['order']} does not match table size {len(table)}")
        names = data.get("names")
        # tables may be written with names instead of indices
        if names and table and isinstance(table[0][0], str):
            pos = {str(nm): i for i, nm in enumerate(names)}
            try:
                table = [[pos[str(v)] for v in row] for row in table]
            except KeyError as e:
                raise StructuralError(f"unknown element name {e} in table") from None
        return cls(table, names)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    @cached_property
    def subgroups(self) -> tuple:
        return tuple(enumerate_subgroups(self))


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    elements: tuple

    def __post_init__(self):
        els = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", els)
        g = self.parent
        s = set(els)
        if g.identity not in s:
            raise VerificationError("subgroup does not contain the identity", {"elements": list(els)})
        for a in els:
            if g.inv(a) not in s:
                raise VerificationError("subgroup not closed under inverses", {"element": a})
            for b in els:
                if g.mul(a, b) not in s:
                    raise VerificationError("subgroup not closed under products", {"pair": [a, b]})

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self.elements

    def __len__(self):
        return len(self.elements)

    def names(self) -> list:
        return [self.parent.names[i] for i in self.elements]

    def __repr__(self):
        return "Subgroup{" + ",".join(self.names()) + "}"


def _closure(g: FiniteGroup, gens) -> frozenset:
    out = {g.identity}
    frontier = list(gens)
    while frontier:
        a = frontier.pop()
        if a in out:
            continue
        new = [a]
        out.add(a)
        while new:
            x = new.pop()
            for y in list(out):
                for z in (g.mul(x, y), g.mul(y, x)):
                    if z not in out:
                        out.add(z)
                        new.append(z)
    return frozenset(out)


def enumerate_subgroups(g: FiniteGroup) -> list:
    """All subgroups, each once, sorted by (order, element tuple)."""
    found = {frozenset([g.identity])}
    layer = [frozenset([g.identity])]
    while layer:
        nxt = []
        for h in layer:
            for a in range(g.order):
                if a in h:
                    continue
                k = _closure(g, list(h) + [a])
                if k not in found:
                    found.add(k)
                    nxt.append(k)
        layer = nxt
    subs = sorted(found, key=lambda s: (len(s), tuple(sorted(s))))
    return [Subgroup(g, tuple(sorted(s))) for s in subs]


def subgroup(g: FiniteGroup, elements) -> Subgroup:
    return Subgroup(g, tuple(g.index(e) for e in elements))


def generated_subgroup(g: FiniteGroup, gens) -> Subgroup:
    return Subgroup(g, tuple(sorted(_closure(g, [g.index(x) for x in gens]))))


def left_cosets(h: Subgroup) -> list:
    """Left cosets ``gH`` in order of first appearance; each lists its representative first.

    The identity coset comes first.
    """
    g = h.parent
    seen = set()
    out = []
    for r in range(g.order):
        if r in seen:
            continue
        coset = [g.mul(r, x) for x in h.elements]
        rest = sorted(c for c in coset if c != r)
        out.append((r, *rest))
        seen.update(coset)
    return out


def conjugate_subgroup(h: Subgroup, t: int) -> Subgroup:
    """``t H t^-1``."""
    g = h.parent
    t = g.index(t)
    ti = g.inv(t)
    return Subgroup(g, tuple(g.mul(g.mul(t, x), ti) for x in h.elements))


def coset_action(h: Subgroup) -> list:
    """Permutation of the left cosets induced by each group element.

    ``result[g][i] = j`` means ``g * coset_i = coset_j``.
    """
    g = h.parent
    cosets = left_cosets(h)
    where = {}
    for i, c in enumerate(cosets):
        for x in c:
            where[x] = i
    return [tuple(where[g.mul(a, c[0])] for c in cosets) for a in range(g.order)]


def action_stabilizer(perms: list, point: int) -> tuple:
    return tuple(a for a, p in enumerate(perms) if p[point] == point)


def action_is_transitive(perms: list) -> bool:
    if not perms:
        return True
    npts = len(perms[0])
    orbit = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for p in perms:
            j = p[i]
            if j not in orbit:
                orbit.add(j)
                frontier.append(j)
    return len(orbit) == npts


# ---------------------------------------------------------------------------
# builders


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise StructuralError("cyclic group order must be positive")
    names = ["e"] + (["t"] if n > 1 else []) + [f"t^{i}" for i in range(2, n)]
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], names)


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    nb = b.order
    n = a.order * nb
    table = []
    for i in range(n):
        ia, ib = divmod(i, nb)
        table.append([a.mul(ia, ja) * nb + b.mul(ib, jb) for ja in range(a.order) for jb in range(nb)])
    names = [f"({x},{y})" for x in a.names for y in b.names]
    return FiniteGroup(table, names)


def klein_four() -> FiniteGroup:
    c2 = cyclic_group(2)
    g = direct_product(c2, c2)
    return FiniteGroup(g.table, ["e", "a", "b", "ab"])


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on points 1..n, ordered lexicographically; product is composition ``(pq)(i) = p(q(i))``."""
    perms = sorted(permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    names = [_cycle_name(p) for p in perms]
    return FiniteGroup(table, names)


def _cycle_name(p) -> str:
    seen = set()
    parts = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            seen.add(i)
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        parts.append("(" + "".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "e"


BUILTIN_GROUPS = {
    **{f"C{n}": (lambda n=n: cyclic_group(n)) for n in range(1, 7)},
    "C2xC2": klein_four,
    "V4": klein_four,
    "S3": lambda: symmetric_group(3),
}


def builtin_group(name: str) -> FiniteGroup:
    try:
        return BUILTIN_GROUPS[name]()
    except KeyError:
        raise StructuralError(f"unknown builtin group {name!r}; known: {sorted(BUILTIN_GROUPS)}") from None
