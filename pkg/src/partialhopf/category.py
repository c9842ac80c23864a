"""Finite k-linear categories and semicategories.

A :class:`LinSemicat` has a finite list of objects, a hom space ``_yC_x``
(morphisms ``x -> y``) of dimension ``homdim[(y, x)]`` for every ordered pair,
and for each triple a bilinear composition ``_zC_y x _yC_x -> _zC_x`` stored
under the key ``(z, y, x)``.  Missing compositions are zero.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping, Sequence

from .algebra import Algebra, trilinear_diff
from .errors import StructuralError, VerificationError
from .field import Field
from .linalg import Bilinear, LinMap, Subspace, image_basis, unit, zeros
from .report import Report


class LinSemicat:
    def __init__(
        self,
        field: Field,
        objects: Sequence,
        homdim: Mapping,
        comp: Mapping | None = None,
        identities: Mapping | None = None,
        basis_names: Mapping | None = None,
        name: str = "cat",
    ):
        self.field = field
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise StructuralError("object names must be distinct")
        objs = set(self.objects)
        hd = {}
        for (y, x), d in homdim.items():
            if y not in objs or x not in objs:
                raise StructuralError(f"hom space {y}|{x} mentions an unknown object")
            if d < 0:
                raise StructuralError(f"negative dimension for {y}|{x}")
            hd[(y, x)] = int(d)
        self.homdim = {(y, x): hd.get((y, x), 0) for y in self.objects for x in self.objects}
        self.comp = {}
        for (z, y, x), t in (comp or {}).items():
            if not {z, y, x} <= objs:
                raise StructuralError(f"composition {z}|{y}|{x} mentions an unknown object")
            want = (self.dim(z, y), self.dim(y, x), self.dim(z, x))
            if (t.m, t.n, t.p) != want:
                raise StructuralError(f"composition {z}|{y}|{x} has shape {(t.m, t.n, t.p)}, expected {want}")
            if t.terms:
                self.comp[(z, y, x)] = t
        if identities is not None:
            ids = {}
            for x in self.objects:
                if x not in identities:
                    raise StructuralError(f"identity for object {x} missing")
                v = tuple(field(a) for a in identities[x])
                if len(v) != self.dim(x, x):
                    raise StructuralError(f"identity of {x} has length {len(v)}, expected {self.dim(x, x)}")
                ids[x] = v
            self.identities = ids
        else:
            self.identities = None
        self.basis_names = dict(basis_names or {})
        self.name = name

    # -- access -------------------------------------------------------------

    def dim(self, y, x) -> int:
        return self.homdim[(y, x)]

    def pairs(self):
        return [(y, x) for y in self.objects for x in self.objects]

    def triples(self):
        return [(z, y, x) for z in self.objects for y in self.objects for x in self.objects]

    def tensor(self, z, y, x) -> Bilinear:
        t = self.comp.get((z, y, x))
        if t is None:
            return Bilinear(self.field, self.dim(z, y), self.dim(y, x), self.dim(z, x))
        return t

    def compose(self, z, y, x, g, f):
        """``g o f`` for ``g`` in ``_zC_y`` and ``f`` in ``_yC_x``."""
        return self.tensor(z, y, x).apply(g, f)

    def basis_vec(self, y, x, i):
        return unit(self.field, self.dim(y, x), i)

    def zero(self, y, x):
        return zeros(self.field, self.dim(y, x))

    @property
    def is_category(self) -> bool:
        return self.identities is not None

    def identity(self, x):
        if self.identities is None:
            raise VerificationError(f"{self.name} has no identities")
        return self.identities[x]

    def is_schurian(self) -> bool:
        return all(d <= 1 for d in self.homdim.values())

    def total_dim(self) -> int:
        return sum(self.homdim.values())

    def with_comp_entry(self, key, i, j, k, value) -> "LinSemicat":
        comp = dict(self.comp)
        comp[key] = self.tensor(*key).with_entry(i, j, k, value)
        return LinSemicat(self.field, self.objects, self.homdim, comp, self.identities, self.basis_names, self.name)

    def to_json(self) -> dict:
        fmt = self.field.format
        hom = {}
        for (y, x), d in self.homdim.items():
            rec = {"dim": d}
            names = self.basis_names.get((y, x))
            rec["basis"] = list(names) if names else [f"{y}<-{x}:{i}" for i in range(d)]
            hom[f"{y}|{x}"] = rec
        comp = {}
        for (z, y, x), t in sorted(self.comp.items(), key=lambda kv: [self.objects.index(o) for o in kv[0]]):
            comp[f"{z}|{y}|{x}"] = [[[fmt(c) for c in v] for v in p] for p in t.to_dense()]
        out = {"objects": [str(o) for o in self.objects], "hom": hom, "comp": comp}
        if self.identities is not None:
            out["identities"] = {str(x): [fmt(a) for a in v] for x, v in self.identities.items()}
        return out

    @classmethod
    def from_json(cls, data, field: Field, name: str = "cat") -> "LinSemicat":
        try:
            objects = [str(o) for o in data["objects"]]
            homdim = {}
            names = {}
            for key, rec in data.get("hom", {}).items():
                y, x = _split(key, 2)
                d = rec["dim"] if isinstance(rec, dict) else int(rec)
                homdim[(y, x)] = d
                if isinstance(rec, dict) and rec.get("basis"):
                    if len(rec["basis"]) != d:
                        raise StructuralError(f"hom {key} lists {len(rec['basis'])} basis names for dim {d}")
                    names[(y, x)] = tuple(rec["basis"])
            cat = cls(field, objects, homdim, {}, None, names, name)
            comp = {}
            for key, dense in data.get("comp", {}).items():
                z, y, x = _split(key, 3)
                for o in (z, y, x):
                    if o not in objects:
                        raise StructuralError(f"composition {key} mentions unknown object {o}")
                comp[(z, y, x)] = Bilinear.from_dense(
                    field, [[[field(c) for c in v] for v in p] for p in dense],
                    cat.dim(z, y), cat.dim(y, x), cat.dim(z, x),
                )
            ids = data.get("identities")
            if ids is not None:
                ids = {str(k): [field(a) for a in v] for k, v in ids.items()}
            return cls(field, objects, homdim, comp, ids, names, name)
        except (KeyError, TypeError) as e:
            raise StructuralError(f"malformed category record: {e}") from None

    def __repr__(self):
        kind = "category" if self.is_category else "semicategory"
        return f"LinSemicat({kind}, objects={list(self.objects)}, total_dim={self.total_dim()})"


def _split(key: str, n: int):
    parts = key.split("|")
    if len(parts) != n:
        raise StructuralError(f"key {key!r} should have {n} '|'-separated objects")
    return parts


# ---------------------------------------------------------------------------
# verification


def verify_semicat(c: LinSemicat) -> Report:
    rep = Report(f"{c.name}[{len(c.objects)} objects]")
    w = None
    for wq, z, y, x in product(c.objects, repeat=4):
        d = trilinear_diff(c.tensor(wq, z, y), c.tensor(wq, y, x), c.tensor(z, y, x), c.tensor(wq, z, x))
        if d is not None:
            w = {"objects": [wq, z, y, x], "basis": d}
            break
    rep.add("associativity", w is None, w)
    if c.identities is not None:
        w = None
        for y, x in c.pairs():
            for i in range(c.dim(y, x)):
                f = c.basis_vec(y, x, i)
                if c.compose(y, y, x, c.identity(y), f) != f:
                    w = {"side": "left", "pair": [y, x], "basis": i}
                elif c.compose(y, x, x, f, c.identity(x)) != f:
                    w = {"side": "right", "pair": [y, x], "basis": i}
                if w:
                    break
            if w:
                break
        rep.add("unit_laws", w is None, w)
    rep.info["category"] = c.is_category
    return rep


# ---------------------------------------------------------------------------
# semifunctors


class Semifunctor:
    """Object map plus one matrix per source hom space (target coords x source coords)."""

    def __init__(self, source: LinSemicat, target: LinSemicat, objmap: Mapping | None, maps: Mapping):
        self.source = source
        self.target = target
        self.objmap = dict(objmap) if objmap else {x: x for x in source.objects}
        self.maps = {}
        for y, x in source.pairs():
            fy, fx = self.objmap[y], self.objmap[x]
            m = maps.get((y, x))
            shape = (target.dim(fy, fx), source.dim(y, x))
            if m is None:
                m = LinMap.zero(source.field, *shape)
            if (m.rows, m.cols) != shape:
                raise StructuralError(f"semifunctor block {y}|{x} is {m.rows}x{m.cols}, expected {shape}")
            self.maps[(y, x)] = m

    def __call__(self, y, x, f):
        return self.maps[(y, x)](f)

    def is_faithful(self) -> bool:
        return all(m.is_injective() for m in self.maps.values())

    def is_bijective(self) -> bool:
        return all(m.rows == m.cols and m.is_injective() for m in self.maps.values())


def verify_semifunctor(F: Semifunctor, check_identities: bool = False) -> Report:
    rep = Report("semifunctor")
    s, t, om = F.source, F.target, F.objmap
    w = None
    for z, y, x in s.triples():
        comp = s.tensor(z, y, x)
        tcomp = t.tensor(om[z], om[y], om[x])
        if comp.m == 0 or comp.n == 0:
            continue
        gz = F.maps[(z, y)].columns()
        fy = F.maps[(y, x)].columns()
        Fzx = F.maps[(z, x)]
        for a in range(comp.m):
            for b in range(comp.n):
                if Fzx(comp.basis_product(a, b)) != tcomp.apply(gz[a], fy[b]):
                    w = {"objects": [z, y, x], "basis": [a, b]}
                    break
            if w:
                break
        if w:
            break
    rep.add("preserves_composition", w is None, w)
    if check_identities and s.identities is not None and t.identities is not None:
        bad = [x for x in s.objects if F(x, x, s.identity(x)) != t.identity(om[x])]
        rep.add("preserves_identities", not bad, bad[:1])
    rep.info["faithful"] = F.is_faithful()
    return rep


def identity_semifunctor(c: LinSemicat) -> Semifunctor:
    return Semifunctor(c, c, None, {(y, x): LinMap.identity(c.field, c.dim(y, x)) for y, x in c.pairs()})


# ---------------------------------------------------------------------------
# subobjects


def subsemicategory(c: LinSemicat, bases: Mapping, identities: Mapping | None = None, name: str | None = None):
    """Sub-semicategory on the spans of ``bases``; returns it with its inclusion.

    Hom spaces are re-based on echelon bases.  Raises :class:`VerificationError`
    if composition leaves the spans.
    """
    subs = {}
    for y, x in c.pairs():
        vecs = bases.get((y, x), [])
        subs[(y, x)] = Subspace.span(c.field, c.dim(y, x), vecs)
    return subsemicategory_from_subspaces(c, subs, identities, name)


def subsemicategory_from_subspaces(c: LinSemicat, subs: Mapping, identities: Mapping | None = None, name: str | None = None):
    field = c.field
    homdim = {k: s.dim for k, s in subs.items()}
    comp = {}
    for z, y, x in c.triples():
        A, B, C = subs[(z, y)], subs[(y, x)], subs[(z, x)]
        if A.dim == 0 or B.dim == 0:
            continue
        t = c.tensor(z, y, x)
        if not t.terms:
            continue

        def fn(i, j, A=A, B=B, C=C, t=t, key=(z, y, x)):
            v = t.apply(A.rows[i], B.rows[j])
            co = C.coords(v)
            if co is None:
                raise VerificationError(f"composition {key} leaves the subspaces", {"objects": list(key), "basis": [i, j]})
            return co

        comp[(z, y, x)] = Bilinear.from_function(field, A.dim, B.dim, C.dim, fn)
    ids = None
    if identities is not None:
        ids = {}
        for x in c.objects:
            co = subs[(x, x)].coords(identities[x])
            if co is None:
                raise VerificationError(f"proposed identity of {x} is not in the subspace", {"object": x})
            ids[x] = co
    sub = LinSemicat(field, c.objects, homdim, comp, ids, None, name or f"sub({c.name})")
    incl = Semifunctor(sub, c, None, {k: LinMap.from_columns(field, c.dim(*k), list(s.rows)) for k, s in subs.items()})
    return sub, incl


class CatIdeal:
    def __init__(self, cat: LinSemicat, subspaces: Mapping):
        self.cat = cat
        self.subspaces = {k: subspaces.get(k) or Subspace(cat.field, cat.dim(*k)) for k in cat.pairs()}

    def __getitem__(self, key) -> Subspace:
        return self.subspaces[key]

    def dims(self) -> dict:
        return {k: s.dim for k, s in self.subspaces.items()}


def verify_ideal(ideal: CatIdeal) -> Report:
    c = ideal.cat
    rep = Report("ideal")
    wl = wr = None
    for z, y, x in c.triples():
        t = c.tensor(z, y, x)
        if not t.terms:
            continue
        Izx = ideal[(z, x)]
        if wl is None:
            for i in range(c.dim(z, y)):
                g = c.basis_vec(z, y, i)
                bad = [j for j, f in enumerate(ideal[(y, x)].rows) if not Izx.contains(t.apply(g, f))]
                if bad:
                    wl = {"objects": [z, y, x], "basis": [i, bad[0]]}
                    break
        if wr is None:
            for j in range(c.dim(y, x)):
                f = c.basis_vec(y, x, j)
                bad = [i for i, g in enumerate(ideal[(z, y)].rows) if not Izx.contains(t.apply(g, f))]
                if bad:
                    wr = {"objects": [z, y, x], "basis": [bad[0], j]}
                    break
    rep.add("left_absorption", wl is None, wl)
    rep.add("right_absorption", wr is None, wr)
    return rep


def verify_central_idempotent(c: LinSemicat, e: Mapping, spanning: Mapping | None = None) -> Report:
    """Idempotence of each ``e_x`` and ``e_y f = f e_x`` on hom bases.

    ``spanning`` optionally replaces the standard hom bases by other spanning
    families, given as ``{(y, x): [vectors]}``.
    """
    rep = Report("central idempotent")
    w = None
    for x in c.objects:
        if c.compose(x, x, x, e[x], e[x]) != tuple(e[x]):
            w = {"object": x}
            break
    rep.add("idempotent", w is None, w)
    w = None
    for y, x in c.pairs():
        vecs = spanning.get((y, x), []) if spanning is not None else [c.basis_vec(y, x, i) for i in range(c.dim(y, x))]
        for i, f in enumerate(vecs):
            if c.compose(y, y, x, e[y], f) != c.compose(y, x, x, f, e[x]):
                w = {"pair": [y, x], "basis": i}
                break
        if w:
            break
    rep.add("central", w is None, w)
    return rep


def ideal_of_idempotent(c: LinSemicat, e: Mapping) -> CatIdeal:
    """``_yI_x = e_y _yC_x e_x`` as echelon bases."""
    subs = {}
    for y, x in c.pairs():
        vecs = []
        for i in range(c.dim(y, x)):
            f = c.basis_vec(y, x, i)
            vecs.append(c.compose(y, x, x, c.compose(y, y, x, e[y], f), e[x]))
        subs[(y, x)] = Subspace.span(c.field, c.dim(y, x), vecs)
    return CatIdeal(c, subs)


def ideal_category(c: LinSemicat, e: Mapping, name: str | None = None):
    """The ideal of ``e`` as a category with identities ``e_x``, plus its inclusion."""
    ideal = ideal_of_idempotent(c, e)
    return subsemicategory_from_subspaces(c, ideal.subspaces, {x: e[x] for x in c.objects}, name or f"ideal({c.name})")


def complement_idempotent(c: LinSemicat, e: Mapping) -> dict:
    return {x: tuple(a - b for a, b in zip(c.identity(x), e[x])) for x in c.objects}


# ---------------------------------------------------------------------------
# constructions


def from_algebra(a: Algebra, obj: str = "*") -> LinSemicat:
    ids = None if a.unit is None else {obj: a.unit}
    return LinSemicat(a.field, [obj], {(obj, obj): a.dim}, {(obj, obj, obj): a.mult}, ids, None, a.name)


def matrix_algebra(c: LinSemicat):
    """Flatten to ``a(C)``; returns ``(algebra, idempotents, offsets)``.

    Basis: hom bases of the pairs ``(y, x)`` in object order, ``y`` major.
    ``offsets[(y, x)]`` is where that block starts.  Idempotents ``1_x E_xx``
    are returned only when ``c`` has identities.
    """
    field = c.field
    offsets = {}
    pos = 0
    for y, x in c.pairs():
        offsets[(y, x)] = pos
        pos += c.dim(y, x)
    n = pos
    terms: dict = {}
    for (z, y, x), t in c.comp.items():
        oa, ob, oc = offsets[(z, y)], offsets[(y, x)], offsets[(z, x)]
        for (i, j), row in t.terms.items():
            terms[(oa + i, ob + j)] = tuple((oc + k, v) for k, v in row)
    mult = Bilinear(field, n, n, n, terms)
    idems = None
    unit_vec = None
    if c.identities is not None:
        idems = []
        unit_vec = list(zeros(field, n))
        for x in c.objects:
            v = list(zeros(field, n))
            o = offsets[(x, x)]
            for i, a in enumerate(c.identity(x)):
                v[o + i] = a
                unit_vec[o + i] = a
            idems.append(tuple(v))
    return Algebra(field, n, mult, unit_vec, f"a({c.name})"), idems, offsets


def embed_block(c: LinSemicat, offsets: Mapping, y, x, f):
    n = sum(c.homdim.values())
    v = list(zeros(c.field, n))
    o = offsets[(y, x)]
    for i, a in enumerate(f):
        v[o + i] = a
    return tuple(v)


def pair_name(x, y) -> str:
    return f"({x},{y})"


def tensor_categories(a: LinSemicat, b: LinSemicat, name: str | None = None) -> LinSemicat:
    """``A (x) B`` on object pairs; basis index ``i * dim_B + j`` for ``a_i (x) b_j``."""
    if a.field != b.field:
        raise StructuralError("tensoring categories over different fields")
    field = a.field
    objs = [(x, x2) for x in a.objects for x2 in b.objects]
    nm = {o: pair_name(*o) for o in objs}
    homdim = {(nm[(y, y2)], nm[(x, x2)]): a.dim(y, x) * b.dim(y2, x2) for (y, y2) in objs for (x, x2) in objs}
    comp = {}
    for (z, z2), (y, y2), (x, x2) in product(objs, repeat=3):
        ta, tb = a.tensor(z, y, x), b.tensor(z2, y2, x2)
        if not ta.terms or not tb.terms:
            continue
        nb1, nb2, nb3 = b.dim(z2, y2), b.dim(y2, x2), b.dim(z2, x2)
        terms = {}
        for (i, j), ra in ta.terms.items():
            for (i2, j2), rb in tb.terms.items():
                terms[(i * nb1 + i2, j * nb2 + j2)] = [(k * nb3 + k2, ca * cb) for k, ca in ra for k2, cb in rb]
        comp[(nm[(z, z2)], nm[(y, y2)], nm[(x, x2)])] = Bilinear(
            field, a.dim(z, y) * nb1, a.dim(y, x) * nb2, a.dim(z, x) * nb3, terms
        )
    ids = None
    if a.identities is not None and b.identities is not None:
        ids = {nm[(x, x2)]: tuple(p * q for p in a.identity(x) for q in b.identity(x2)) for (x, x2) in objs}
    return LinSemicat(field, [nm[o] for o in objs], homdim, comp, ids, None, name or f"{a.name}(x){b.name}")


def connected_components(c: LinSemicat) -> list:
    parent = {x: x for x in c.objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (y, x), d in c.homdim.items():
        if d > 0 and x != y:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry, key=c.objects.index)] = min(rx, ry, key=c.objects.index)
    blocks: dict = {}
    for x in c.objects:
        blocks.setdefault(find(x), []).append(x)
    return sorted(blocks.values(), key=lambda b: c.objects.index(b[0]))


def full_subcategory(c: LinSemicat, objs: Sequence) -> LinSemicat:
    objs = [o for o in c.objects if o in set(objs)]
    s = set(objs)
    homdim = {(y, x): c.dim(y, x) for y in objs for x in objs}
    comp = {k: t for k, t in c.comp.items() if set(k) <= s}
    ids = None if c.identities is None else {x: c.identity(x) for x in objs}
    return LinSemicat(c.field, objs, homdim, comp, ids, None, f"{c.name}|{','.join(map(str, objs))}")


def one_object_category(field: Field, dim: int = 1, obj: str = "*") -> LinSemicat:
    """The field ``k`` (``dim=1``) or ``k^dim`` with componentwise product, as a one-object category."""
    one = field.one
    mult = Bilinear(field, dim, dim, dim, {(i, i): ((i, one),) for i in range(dim)})
    return LinSemicat(field, [obj], {(obj, obj): dim}, {(obj, obj, obj): mult}, {obj: (one,) * dim}, None, "k" if dim == 1 else f"k^{dim}")


def cycle_category(field: Field) -> LinSemicat:
    """Three objects ``1, 2, 3`` with arrows ``a: 1->2``, ``b: 2->3``, ``c: 3->1``.

    Every composite of two arrows lands in a zero hom space, so ``ba = cb = ac = 0``.
    """
    one = field.one
    objs = ["1", "2", "3"]
    homdim = {(x, x): 1 for x in objs}
    homdim.update({("2", "1"): 1, ("3", "2"): 1, ("1", "3"): 1})
    comp = {}
    for x in objs:
        comp[(x, x, x)] = Bilinear(field, 1, 1, 1, {(0, 0): ((0, one),)})
    for y, x in [("2", "1"), ("3", "2"), ("1", "3")]:
        comp[(y, y, x)] = Bilinear(field, 1, 1, 1, {(0, 0): ((0, one),)})
        comp[(y, x, x)] = Bilinear(field, 1, 1, 1, {(0, 0): ((0, one),)})
    names = {(x, x): (f"1_{x}",) for x in objs}
    names.update({("2", "1"): ("alpha",), ("3", "2"): ("beta",), ("1", "3"): ("gamma",)})
    return LinSemicat(field, objs, homdim, comp, {x: (one,) for x in objs}, names, "cycle3")


def span_equal(a: Sequence, b: Sequence) -> bool:
    return image_basis(list(a)) == image_basis(list(b))
