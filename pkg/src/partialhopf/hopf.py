"""Finite-dimensional Hopf algebras by structure constants.

Conventions, for a basis ``b_0..b_{n-1}``:

* ``mult``: :class:`Bilinear` with ``b_i b_j = sum_k m[i][j][k] b_k``;
* ``comult[i]``: dict ``{(j, k): c}`` with ``Delta(b_i) = sum c b_j (x) b_k``;
* ``antipode``: :class:`LinMap` whose column ``c`` is ``S(b_c)``.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping, Sequence

from .errors import StructuralError, UnsupportedFieldError
from .field import QQ, Field
from .group import FiniteGroup
from .linalg import Bilinear, LinMap, is_zero, lincomb, unit, zeros
from .report import Report


class HopfAlgebra:
    def __init__(
        self,
        field: Field,
        basis: Sequence[str],
        mult: Bilinear,
        unit_vec: Sequence,
        comult: Sequence[Mapping],
        counit: Sequence,
        antipode: LinMap,
        kind: str = "custom",
        group: FiniteGroup | None = None,
    ):
        n = len(basis)
        self.field = field
        self.dim = n
        self.basis = tuple(str(b) for b in basis)
        if (mult.m, mult.n, mult.p) != (n, n, n):
            raise StructuralError(f"mult tensor is {mult.m}x{mult.n}x{mult.p}, expected {n}^3")
        if len(unit_vec) != n or len(counit) != n or len(comult) != n:
            raise StructuralError("unit, counit and comult must have one entry per basis element")
        if (antipode.rows, antipode.cols) != (n, n):
            raise StructuralError(f"antipode is {antipode.rows}x{antipode.cols}, expected {n}x{n}")
        self.mult = mult
        self.unit = tuple(field(a) for a in unit_vec)
        cm = []
        for i, d in enumerate(comult):
            clean = {}
            for (j, k), c in d.items():
                if not (0 <= j < n and 0 <= k < n):
                    raise StructuralError(f"comult index ({j},{k}) of b_{i} out of range")
                c = field(c)
                if c != 0:
                    clean[(j, k)] = c
            cm.append(clean)
        self.comult = tuple(cm)
        self.counit = tuple(field(a) for a in counit)
        self.antipode = antipode
        self.kind = kind
        self.group = group

    # -- element arithmetic -------------------------------------------------

    def one(self):
        return self.unit

    def b(self, i: int):
        return unit(self.field, self.dim, i)

    def index(self, name) -> int:
        if isinstance(name, int):
            return name
        try:
            return self.basis.index(name)
        except ValueError:
            raise StructuralError(f"unknown basis element {name!r}") from None

    def mul(self, u, v):
        return self.mult.apply(u, v)

    def eps(self, u):
        z = self.field.zero
        for a, c in zip(u, self.counit):
            if a != 0 and c != 0:
                z = z + a * c
        return z

    def S(self, u):
        return self.antipode(u)

    def delta(self, u) -> dict:
        """Coproduct of a general element as a dict ``{(j, k): c}``."""
        out: dict = {}
        for i, a in enumerate(u):
            if a == 0:
                continue
            for jk, c in self.comult[i].items():
                out[jk] = out.get(jk, 0) + a * c
        return {k: v for k, v in out.items() if v != 0}

    def delta_vec(self, u):
        n = self.dim
        out = list(zeros(self.field, n * n))
        for (j, k), c in self.delta(u).items():
            out[j * n + k] = c
        return tuple(out)

    def comult_map(self) -> LinMap:
        n = self.dim
        return LinMap.from_columns(self.field, n * n, [self.delta_vec(self.b(i)) for i in range(n)])

    def basis_product(self, i: int, j: int):
        return self.mult.basis_product(i, j)

    # -- serialization ------------------------------------------------------

    def to_json(self, fmt=None) -> dict:
        fmt = fmt or self.field.format
        n = self.dim
        comult = [[[fmt(self.comult[i].get((j, k), 0)) for k in range(n)] for j in range(n)] for i in range(n)]
        return {
            "dim": n,
            "basis": list(self.basis),
            "mult": [[[fmt(c) for c in plane] for plane in mat] for mat in self.mult.to_dense()],
            "unit": [fmt(a) for a in self.unit],
            "comult": comult,
            "counit": [fmt(a) for a in self.counit],
            "antipode": [[fmt(a) for a in row] for row in self.antipode.entries],
        }

    @classmethod
    def from_json(cls, data, field: Field = QQ) -> "HopfAlgebra":
        try:
            n = int(data["dim"])
            basis = data.get("basis") or [f"b{i}" for i in range(n)]
            mult = Bilinear.from_dense(field, [[[field(c) for c in v] for v in p] for p in data["mult"]], n, n, n)
            comult_d = data["comult"]
            if len(comult_d) != n:
                raise StructuralError(f"comult has {len(comult_d)} slices, expected {n}")
            comult = []
            for i in range(n):
                if len(comult_d[i]) != n or any(len(r) != n for r in comult_d[i]):
                    raise StructuralError(f"comult slice {i} is not {n}x{n}")
                comult.append({(j, k): field(comult_d[i][j][k]) for j in range(n) for k in range(n)})
            antipode = LinMap(field, [[field(a) for a in r] for r in data["antipode"]], n, n)
            return cls(field, basis, mult, [field(a) for a in data["unit"]], comult, [field(a) for a in data["counit"]], antipode)
        except (KeyError, TypeError) as e:
            raise StructuralError(f"malformed Hopf algebra record: {e}") from None

    # -- mutation support ---------------------------------------------------

    def entries(self) -> list:
        """Addresses of every structure constant, for mutation testing."""
        n = self.dim
        out = [("mult", i, j, k) for i, j, k in product(range(n), repeat=3)]
        out += [("unit", i) for i in range(n)]
        out += [("comult", i, j, k) for i, j, k in product(range(n), repeat=3)]
        out += [("counit", i) for i in range(n)]
        out += [("antipode", r, c) for r, c in product(range(n), repeat=2)]
        return out

    def get_entry(self, addr):
        kind = addr[0]
        if kind == "mult":
            return self.mult.entry(*addr[1:])
        if kind == "unit":
            return self.unit[addr[1]]
        if kind == "comult":
            i, j, k = addr[1:]
            return self.comult[i].get((j, k), self.field.zero)
        if kind == "counit":
            return self.counit[addr[1]]
        if kind == "antipode":
            return self.antipode.entries[addr[1]][addr[2]]
        raise StructuralError(f"unknown structure tensor {kind!r}")

    def with_entry(self, addr, value) -> "HopfAlgebra":
        kind = addr[0]
        mult, unit_v, comult, counit, s = self.mult, list(self.unit), list(self.comult), list(self.counit), self.antipode
        if kind == "mult":
            mult = mult.with_entry(*addr[1:], value)
        elif kind == "unit":
            unit_v[addr[1]] = self.field(value)
        elif kind == "comult":
            i, j, k = addr[1:]
            d = dict(comult[i])
            d[(j, k)] = self.field(value)
            comult[i] = d
        elif kind == "counit":
            counit[addr[1]] = self.field(value)
        elif kind == "antipode":
            s = s.with_entry(addr[1], addr[2], value)
        else:
            raise StructuralError(f"unknown structure tensor {kind!r}")
        return HopfAlgebra(self.field, self.basis, mult, unit_v, comult, counit, s, "custom", self.group)

    def __repr__(self):
        return f"HopfAlgebra({self.kind}, dim={self.dim}, {self.field!r})"


# ---------------------------------------------------------------------------
# verification


def _tensor_mul(h: HopfAlgebra, a: dict, b: dict) -> dict:
    """Product in H (x) H of two elements given as ``{(j, k): c}``."""
    out: dict = {}
    for (j, k), c in a.items():
        for (j2, k2), c2 in b.items():
            left = h.basis_product(j, j2)
            right = h.basis_product(k, k2)
            cc = c * c2
            for p, x in enumerate(left):
                if x == 0:
                    continue
                for q, y in enumerate(right):
                    if y != 0:
                        out[(p, q)] = out.get((p, q), 0) + cc * x * y
    return {k: v for k, v in out.items() if v != 0}


def verify_hopf(h: HopfAlgebra) -> Report:
    """Check every Hopf axiom on basis elements, recording the first violating index."""
    rep = Report(f"hopf[{h.kind}, dim={h.dim}]")
    n = h.dim
    rng = range(n)
    b = [h.b(i) for i in rng]
    prod = [[h.basis_product(i, j) for j in rng] for i in rng]
    one = h.unit

    w = None
    for i, j, k in product(rng, repeat=3):
        if h.mul(prod[i][j], b[k]) != h.mul(b[i], prod[j][k]):
            w = [i, j, k]
            break
    rep.add("associativity", w is None, w)

    w = None
    for i in rng:
        if h.mul(one, b[i]) != b[i] or h.mul(b[i], one) != b[i]:
            w = [i]
            break
    rep.add("unit", w is None, w)

    w = None
    for i in rng:
        left: dict = {}
        right: dict = {}
        for (j, k), c in h.comult[i].items():
            for (a, bb), c2 in h.comult[j].items():
                key = (a, bb, k)
                left[key] = left.get(key, 0) + c * c2
            for (a, bb), c2 in h.comult[k].items():
                key = (j, a, bb)
                right[key] = right.get(key, 0) + c * c2
        left = {k: v for k, v in left.items() if v != 0}
        right = {k: v for k, v in right.items() if v != 0}
        if left != right:
            w = [i]
            break
    rep.add("coassociativity", w is None, w)

    w = None
    for i in rng:
        lft = list(zeros(h.field, n))
        rgt = list(zeros(h.field, n))
        for (j, k), c in h.comult[i].items():
            lft[k] += h.counit[j] * c
            rgt[j] += h.counit[k] * c
        if tuple(lft) != b[i] or tuple(rgt) != b[i]:
            w = [i]
            break
    rep.add("counit", w is None, w)

    w = None
    for i, j in product(rng, repeat=2):
        if h.delta(prod[i][j]) != _tensor_mul(h, h.comult[i], h.comult[j]):
            w = [i, j]
            break
    rep.add("comult_multiplicative", w is None, w)

    one_one = {}
    for j, a in enumerate(one):
        for k, c in enumerate(one):
            if a * c != 0:
                one_one[(j, k)] = a * c
    rep.add("comult_unit", h.delta(one) == one_one, ["unit"])

    w = None
    for i, j in product(rng, repeat=2):
        if h.eps(prod[i][j]) != h.counit[i] * h.counit[j]:
            w = [i, j]
            break
    rep.add("counit_multiplicative", w is None, w)
    rep.add("counit_unit", h.eps(one) == 1, ["unit"])

    wl = wr = None
    s_cols = [h.S(b[i]) for i in rng]
    for i in rng:
        target = tuple(h.counit[i] * a for a in one)
        left = list(zeros(h.field, n))
        right = list(zeros(h.field, n))
        for (j, k), c in h.comult[i].items():
            lv = h.mul(s_cols[j], b[k])
            rv = h.mul(b[j], s_cols[k])
            for p in rng:
                left[p] += c * lv[p]
                right[p] += c * rv[p]
        if wl is None and tuple(left) != target:
            wl = [i]
        if wr is None and tuple(right) != target:
            wr = [i]
    rep.add("antipode_left", wl is None, wl)
    rep.add("antipode_right", wr is None, wr)
    return rep


def is_cocommutative(h: HopfAlgebra) -> bool:
    return all(d.get((k, j), 0) == c for d in h.comult for (j, k), c in d.items())


def is_commutative(h: HopfAlgebra) -> bool:
    n = h.dim
    return all(h.basis_product(i, j) == h.basis_product(j, i) for i in range(n) for j in range(i))


# ---------------------------------------------------------------------------
# builders


def build_group_algebra(g: FiniteGroup, field: Field = QQ) -> HopfAlgebra:
    n = g.order
    one = field.one
    mult = Bilinear(field, n, n, n, {(i, j): ((g.mul(i, j), one),) for i in range(n) for j in range(n)})
    comult = [{(i, i): one} for i in range(n)]
    s = LinMap.from_columns(field, n, [unit(field, n, g.inv(i)) for i in range(n)])
    return HopfAlgebra(
        field, [f"d_{x}" for x in g.names], mult, unit(field, n, g.identity), comult,
        (one,) * n, s, "group_algebra", g,
    )


def build_dual_group_hopf(g: FiniteGroup, field: Field = QQ) -> HopfAlgebra:
    n = g.order
    one = field.one
    mult = Bilinear(field, n, n, n, {(i, i): ((i, one),) for i in range(n)})
    comult = []
    for a in range(n):
        # Delta(p_a) = sum_h p_{a h^-1} (x) p_h
        comult.append({(g.mul(a, g.inv(hh)), hh): one for hh in range(n)})
    counit = tuple(one if i == g.identity else field.zero for i in range(n))
    s = LinMap.from_columns(field, n, [unit(field, n, g.inv(i)) for i in range(n)])
    return HopfAlgebra(field, [f"p_{x}" for x in g.names], mult, (one,) * n, comult, counit, s, "dual_group", g)


def build_sweedler(field: Field = QQ) -> HopfAlgebra:
    """Sweedler's algebra on the basis ``e1, e2, h1, h2`` of orthogonal idempotents and radical."""
    if field.char == 2:
        raise UnsupportedFieldError("the Sweedler algebra basis e1=(1+g)/2 needs char != 2")
    one = field.one
    E1, E2, H1, H2 = range(4)
    terms = {
        (E1, E1): ((E1, one),),
        (E2, E2): ((E2, one),),
        (E1, H2): ((H2, one),),
        (H2, E2): ((H2, one),),
        (E2, H1): ((H1, one),),
        (H1, E1): ((H1, one),),
    }
    mult = Bilinear(field, 4, 4, 4, terms)
    comult = [
        {(E1, E1): one, (E2, E2): one},
        {(E1, E2): one, (E2, E1): one},
        {(E1, H1): one, (E2, H2): -one, (H1, E1): one, (H2, E2): one},
        {(E1, H2): one, (E2, H1): -one, (H1, E2): one, (H2, E1): one},
    ]
    z = field.zero
    s = LinMap.from_columns(field, 4, [
        (one, z, z, z),
        (z, one, z, z),
        (z, z, z, -one),
        (z, z, one, z),
    ])
    return HopfAlgebra(field, ["e1", "e2", "h1", "h2"], mult, (one, one, z, z), comult, (one, z, z, z), s, "sweedler")


def build_trivial_hopf(field: Field = QQ) -> HopfAlgebra:
    from .group import trivial_group

    return build_group_algebra(trivial_group(), field)


def dualize(h: HopfAlgebra) -> HopfAlgebra:
    """Dual Hopf algebra on the dual basis ``b^i``."""
    n = h.dim
    f = h.field
    terms: dict = {}
    for k in range(n):
        for (i, j), c in h.comult[k].items():
            terms.setdefault((i, j), []).append((k, c))
    mult = Bilinear(f, n, n, n, terms)
    comult = [dict() for _ in range(n)]
    for (j, k), row in h.mult.terms.items():
        for i, c in row:
            comult[i][(j, k)] = c
    kind = {"group_algebra": "dual_of_group_algebra", "dual_group": "dual_of_dual_group"}.get(h.kind, "dual")
    return HopfAlgebra(
        f, [f"{b}*" for b in h.basis], mult, h.counit, comult, h.unit, h.antipode.transpose(), kind, h.group
    )


# ---------------------------------------------------------------------------
# convolution


def convolution_compose(f: LinMap, g: LinMap, h: HopfAlgebra, target: Bilinear) -> LinMap:
    """``(f*g)(b_l) = sum Delta_l^{jk} target(f(b_j), g(b_k))`` as a map ``H -> U``."""
    if f.cols != h.dim or g.cols != h.dim:
        raise StructuralError("convolution factors must be maps out of H")
    if (target.m, target.n) != (f.rows, g.rows):
        raise StructuralError(f"target product is {target.m}x{target.n}, factors land in {f.rows} and {g.rows}")
    fc = f.columns()
    gc = g.columns()
    cols = []
    for l in range(h.dim):
        acc = list(zeros(h.field, target.p))
        for (j, k), c in h.comult[l].items():
            v = target.apply(fc[j], gc[k])
            for p, a in enumerate(v):
                if a != 0:
                    acc[p] += c * a
        cols.append(tuple(acc))
    return LinMap.from_columns(h.field, target.p, cols)


def counit_map(h: HopfAlgebra, one_vec: Sequence) -> LinMap:
    """``h -> eps(h) * one_vec``, the unit of a convolution algebra."""
    return LinMap.from_columns(h.field, len(one_vec), [tuple(c * a for a in one_vec) for c in h.counit])


def element(h: HopfAlgebra, coeffs: Mapping) -> tuple:
    """Element of ``h`` from ``{basis name or index: coefficient}``."""
    idx = [h.index(k) for k in coeffs]
    return lincomb(h.field, h.dim, [h.field(c) for c in coeffs.values()], [h.b(i) for i in idx])


def is_zero_element(u) -> bool:
    return is_zero(u)
