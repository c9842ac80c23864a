"""Partial and global actions of a Hopf algebra on a linear (semi)category.

An action is stored as one matrix per Hopf basis element on every hom space:
``act[(y, x)][i]`` is ``pi_{b_i}`` acting on ``_yC_x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Mapping

from .category import (
    LinSemicat,
    ideal_category,
    ideal_of_idempotent,
    tensor_categories,
    pair_name,
    verify_central_idempotent,
)
from .errors import StructuralError, VerificationError
from .group import FiniteGroup
from .hopf import HopfAlgebra, convolution_compose, is_cocommutative
from .linalg import LinMap, Subspace, lincomb
from .report import Report


class HopfAction:
    """Linear action data of ``hopf`` on the hom spaces of ``cat``."""

    def __init__(self, cat: LinSemicat, hopf: HopfAlgebra, act: Mapping, meta: Mapping | None = None):
        if cat.field != hopf.field:
            raise StructuralError("category and Hopf algebra live over different fields")
        self.cat = cat
        self.hopf = hopf
        self.field = cat.field
        n = hopf.dim
        acts = {}
        for y, x in cat.pairs():
            d = cat.dim(y, x)
            ms = act.get((y, x))
            if ms is None:
                if d:
                    raise StructuralError(f"no action matrices for nonzero hom space {y}|{x}")
                ms = [LinMap.zero(cat.field, 0, 0)] * n
            if len(ms) != n:
                raise StructuralError(f"hom {y}|{x} has {len(ms)} action matrices, expected {n}")
            for m in ms:
                if (m.rows, m.cols) != (d, d):
                    raise StructuralError(f"action matrix on {y}|{x} is {m.rows}x{m.cols}, expected {d}x{d}")
            acts[(y, x)] = tuple(ms)
        self.act = acts
        self.meta = dict(meta or {})
        self._combo_cache: dict = {}

    def pi(self, y, x, h) -> LinMap:
        """Matrix of the element ``h`` (coordinate vector) on ``_yC_x``."""
        key = (y, x, tuple(h))
        m = self._combo_cache.get(key)
        if m is None:
            d = self.cat.dim(y, x)
            m = LinMap.zero(self.field, d, d)
            for c, mi in zip(h, self.act[(y, x)]):
                if c != 0:
                    m = m + mi.scale(c)
            self._combo_cache[key] = m
        return m

    def pi_basis(self, y, x, i) -> LinMap:
        return self.act[(y, x)][i]

    def apply(self, y, x, h, f):
        return self.pi(y, x, h)(f)

    def with_matrix(self, y, x, i, m: LinMap) -> "HopfAction":
        act = dict(self.act)
        ms = list(act[(y, x)])
        ms[i] = m
        act[(y, x)] = tuple(ms)
        return HopfAction(self.cat, self.hopf, act, self.meta)

    def lam(self, x):
        """``Lambda^x`` as a ``dim(_xC_x) x dim H`` matrix."""
        one = self.cat.identity(x)
        return LinMap.from_columns(self.field, len(one), [m(one) for m in self.act[(x, x)]])

    def to_json(self, hopf_ref="hopf", cat_ref="cat") -> dict:
        fmt = self.field.format
        act = {}
        for (y, x), ms in self.act.items():
            if self.cat.dim(y, x):
                act[f"{y}|{x}"] = [[[fmt(a) for a in row] for row in m.entries] for m in ms]
        return {"hopf": hopf_ref, "cat": cat_ref, "act": act}

    @classmethod
    def from_json(cls, data, cat: LinSemicat, hopf: HopfAlgebra) -> "HopfAction":
        f = cat.field
        act = {}
        try:
            for key, mats in data["act"].items():
                y, x = key.split("|")
                d = cat.dim(y, x)
                act[(y, x)] = [LinMap(f, [[f(a) for a in row] for row in m], d, d) for m in mats]
        except (KeyError, ValueError, TypeError) as e:
            raise StructuralError(f"malformed action record: {e}") from None
        return cls(cat, hopf, act)

    def __repr__(self):
        return f"HopfAction({self.hopf.kind} on {self.cat.name})"


PartialAction = HopfAction


# ---------------------------------------------------------------------------
# verification


class _Ctx:
    """Cached data shared by the axiom checks."""

    def __init__(self, pa: HopfAction):
        self.pa = pa
        self.h = pa.hopf
        self.c = pa.cat
        n = self.h.dim
        self.n = n
        self.prod = [[self.h.basis_product(i, j) for j in range(n)] for i in range(n)]
        self.cols: dict = {}

    def col(self, y, x, i, a):
        """``pi_{b_i}`` applied to the basis vector ``a`` of ``_yC_x``."""
        key = (y, x, i, a)
        v = self.cols.get(key)
        if v is None:
            v = self.pa.act[(y, x)][i].column(a)
            self.cols[key] = v
        return v

    def pi_prod(self, y, x, j, m):
        """Matrix of ``b_j b_m``."""
        return self.pa.pi(y, x, self.prod[j][m])


def _check_unit(ctx: _Ctx):
    u = ctx.h.unit
    for y, x in ctx.c.pairs():
        d = ctx.c.dim(y, x)
        if ctx.pa.pi(y, x, u) != LinMap.identity(ctx.c.field, d):
            return {"pair": [y, x]}
    return None


def _check_h2(ctx: _Ctx):
    c, h = ctx.c, ctx.h
    for z, y, x in c.triples():
        t = c.tensor(z, y, x)
        if not t.terms:
            continue
        for l in range(ctx.n):
            pl = ctx.pa.act[(z, x)][l]
            for a in range(t.m):
                for b in range(t.n):
                    lhs = pl(t.basis_product(a, b))
                    rhs = list(c.zero(z, x))
                    for (j, k), cc in h.comult[l].items():
                        v = t.apply(ctx.col(z, y, j, a), ctx.col(y, x, k, b))
                        for p, val in enumerate(v):
                            if val != 0:
                                rhs[p] += cc * val
                    if lhs != tuple(rhs):
                        return {"h": l, "objects": [z, y, x], "basis": [a, b]}
    return None


def _check_h3(ctx: _Ctx, side: str):
    c, h = ctx.c, ctx.h
    for y, x in c.pairs():
        d = c.dim(y, x)
        if d == 0:
            continue
        one_y, one_x = c.identity(y), c.identity(x)
        for l, m in product(range(ctx.n), repeat=2):
            lhs = ctx.pa.act[(y, x)][l] @ ctx.pa.act[(y, x)][m]
            rhs = LinMap.zero(c.field, d, d)
            for (j, k), cc in h.comult[l].items():
                if side == "left":
                    # (h1 . 1_y) o ((h2 k) . f)
                    e = ctx.pa.act[(y, y)][j](one_y)
                    left_mult = _left_mult(c, y, y, x, e)
                    term = left_mult @ ctx.pi_prod(y, x, k, m)
                else:
                    # ((h1 k) . f) o (h2 . 1_x)
                    e = ctx.pa.act[(x, x)][k](one_x)
                    right_mult = _right_mult(c, y, x, x, e)
                    term = right_mult @ ctx.pi_prod(y, x, j, m)
                rhs = rhs + term.scale(cc)
            if lhs != rhs:
                cols = [a for a in range(d) if lhs.column(a) != rhs.column(a)]
                return {"h": l, "k": m, "pair": [y, x], "basis": cols[0]}
    return None


def _check_h3_global(ctx: _Ctx):
    c = ctx.c
    for y, x in c.pairs():
        if c.dim(y, x) == 0:
            continue
        for l, m in product(range(ctx.n), repeat=2):
            lhs = ctx.pa.act[(y, x)][l] @ ctx.pa.act[(y, x)][m]
            if lhs != ctx.pi_prod(y, x, l, m):
                return {"h": l, "k": m, "pair": [y, x]}
    return None


def _check_derived(ctx: _Ctx):
    """``h.(g o (k.f)) = sum (h1.g) o ((h2 k).f)`` on bases."""
    c, h = ctx.c, ctx.h
    for z, y, x in c.triples():
        t = c.tensor(z, y, x)
        if not t.terms:
            continue
        for l, m in product(range(ctx.n), repeat=2):
            pl = ctx.pa.act[(z, x)][l]
            for a in range(t.m):
                for b in range(t.n):
                    kf = ctx.col(y, x, m, b)
                    lhs = pl(t.apply(c.basis_vec(z, y, a), kf))
                    rhs = list(c.zero(z, x))
                    for (j, k), cc in h.comult[l].items():
                        v = t.apply(ctx.col(z, y, j, a), ctx.pi_prod(y, x, k, m).column(b))
                        for p, val in enumerate(v):
                            if val != 0:
                                rhs[p] += cc * val
                    if lhs != tuple(rhs):
                        return {"h": l, "k": m, "objects": [z, y, x], "basis": [a, b]}
    return None


def _left_mult(c: LinSemicat, z, y, x, g) -> LinMap:
    """Matrix of ``f -> g o f`` on ``_yC_x`` for fixed ``g`` in ``_zC_y``."""
    t = c.tensor(z, y, x)
    return LinMap.from_columns(c.field, c.dim(z, x), [t.apply(g, c.basis_vec(y, x, b)) for b in range(c.dim(y, x))])


def _right_mult(c: LinSemicat, z, y, x, f) -> LinMap:
    """Matrix of ``g -> g o f`` on ``_zC_y`` for fixed ``f`` in ``_yC_x``."""
    t = c.tensor(z, y, x)
    return LinMap.from_columns(c.field, c.dim(z, x), [t.apply(c.basis_vec(z, y, a), f) for a in range(c.dim(z, y))])


def is_global(pa: HopfAction) -> bool:
    """``lambda_h^x = eps(h) 1_x`` for every basis element and object."""
    h = pa.hopf
    for x in pa.cat.objects:
        one = pa.cat.identity(x)
        for i, m in enumerate(pa.act[(x, x)]):
            if m(one) != tuple(h.counit[i] * a for a in one):
                return False
    return True


def verify_partial_action(pa: HopfAction, derived: bool = True) -> Report:
    """Check the partial action axioms on all bases.

    Reports ``unit``, ``composition``, ``iterated_left``, ``iterated_right`` and
    the derived composition identity; ``info['global']`` records whether the
    action is in fact global.
    """
    if not pa.cat.is_category:
        raise VerificationError("partial actions are defined on categories; this semicategory has no identities")
    rep = Report(f"partial action of {pa.hopf.kind} on {pa.cat.name}")
    ctx = _Ctx(pa)
    rep.add("unit", (w := _check_unit(ctx)) is None, w)
    rep.add("composition", (w := _check_h2(ctx)) is None, w)
    rep.add("iterated_left", (w := _check_h3(ctx, "left")) is None, w)
    rep.add("iterated_right", (w := _check_h3(ctx, "right")) is None, w)
    if derived:
        rep.add("derived", (w := _check_derived(ctx)) is None, w)
    rep.info["global"] = is_global(pa)
    return rep


def verify_global_action(pa: HopfAction) -> Report:
    """Axioms of an H-module (semi)category; the identity law only when identities exist."""
    rep = Report(f"global action of {pa.hopf.kind} on {pa.cat.name}")
    ctx = _Ctx(pa)
    rep.add("H1", (w := _check_unit(ctx)) is None, w)
    rep.add("H2", (w := _check_h2(ctx)) is None, w)
    rep.add("H3", (w := _check_h3_global(ctx)) is None, w)
    if pa.cat.is_category:
        bad = None
        h = pa.hopf
        for x in pa.cat.objects:
            one = pa.cat.identity(x)
            for i, m in enumerate(pa.act[(x, x)]):
                if m(one) != tuple(h.counit[i] * a for a in one):
                    bad = {"h": i, "object": x}
                    break
            if bad:
                break
        rep.add("H4", bad is None, bad)
    return rep


# ---------------------------------------------------------------------------
# lambda data


@dataclass
class LambdaData:
    lam: dict
    induced: dict
    scalars: dict
    report: Report = dc_field(default_factory=lambda: Report("lambda"))

    @property
    def induced_by_k(self) -> bool:
        return all(self.induced.values())


def _scalar_multiple(v, one):
    """``c`` with ``v == c * one``, or ``None``."""
    piv = next((i for i, a in enumerate(one) if a != 0), None)
    if piv is None:
        return 0 if all(a == 0 for a in v) else None
    c = v[piv] / one[piv]
    return c if all(a == c * b for a, b in zip(v, one)) else None


def lambda_of(pa: HopfAction) -> LambdaData:
    h, c = pa.hopf, pa.cat
    rep = Report("lambda conditions")
    lam, induced, scalars = {}, {}, {}
    wa = wb = wc = None
    for x in c.objects:
        L = pa.lam(x)
        lam[x] = L
        one = c.identity(x)
        cs = [_scalar_multiple(L.column(i), one) for i in range(h.dim)]
        induced[x] = all(s is not None for s in cs)
        scalars[x] = tuple(c.field(s) for s in cs) if induced[x] else None
        if wa is None and L(h.unit) != one:
            wa = {"object": x}
        t = c.tensor(x, x, x)
        if wb is None and convolution_compose(L, L, h, t) != L:
            wb = {"object": x}
        if wc is None:
            cols = L.columns()
            for i, k in product(range(h.dim), repeat=2):
                lhs = t.apply(cols[i], cols[k])
                r1 = list(c.zero(x, x))
                r2 = list(c.zero(x, x))
                for (j, jj), cc in h.comult[i].items():
                    v1 = t.apply(cols[j], L(h.basis_product(jj, k)))
                    v2 = t.apply(L(h.basis_product(j, k)), cols[jj])
                    for p in range(len(r1)):
                        r1[p] += cc * v1[p]
                        r2[p] += cc * v2[p]
                if lhs != tuple(r1) or lhs != tuple(r2):
                    wc = {"object": x, "h": i, "k": k}
                    break
    rep.add("(a) Lambda(1)=1", wa is None, wa)
    rep.add("(b) Lambda idempotent", wb is None, wb)
    rep.add("(c) product law", wc is None, wc)
    return LambdaData(lam, induced, scalars, rep)


# ---------------------------------------------------------------------------
# constructions


def trivial_action(cat: LinSemicat, hopf: HopfAlgebra) -> HopfAction:
    """``h . f = eps(h) f``."""
    act = {}
    for y, x in cat.pairs():
        d = cat.dim(y, x)
        act[(y, x)] = [LinMap.scalar(cat.field, d, e) for e in hopf.counit]
    return HopfAction(cat, hopf, act, {"label": "epsilon"})


def restrict_global(ga: HopfAction, e: Mapping) -> HopfAction:
    """Induced partial action ``h . f = e_y o (h > f)`` on the ideal of a central idempotent."""
    rep = verify_global_action(ga)
    if not rep.ok:
        raise VerificationError("the action to restrict is not global", rep.failures()[0].witness)
    c = ga.cat
    cen = verify_central_idempotent(c, e)
    if not cen.ok:
        raise VerificationError("not a central idempotent", cen.failures()[0].witness)
    sub, incl = ideal_category(c, e)
    act = {}
    for y, x in c.pairs():
        rows = incl.maps[(y, x)].columns()
        sp = Subspace.span(c.field, c.dim(y, x), rows)
        mats = []
        for i in range(ga.hopf.dim):
            cols = []
            for r in rows:
                v = c.compose(y, y, x, e[y], ga.act[(y, x)][i](r))
                co = sp.coords(v)
                if co is None:
                    raise VerificationError("induced action leaves the ideal", {"pair": [y, x], "h": i})
                cols.append(co)
            mats.append(LinMap.from_columns(c.field, len(rows), cols))
        act[(y, x)] = mats
    out = HopfAction(sub, ga.hopf, act, {"label": "restricted"})
    out.inclusion = incl
    return out


def tensor_actions(pa: HopfAction, pb: HopfAction) -> HopfAction:
    """``h . (a (x) b) = sum (h1 . a) (x) (h2 . b)``; requires a cocommutative Hopf algebra."""
    h = pa.hopf
    if pb.hopf is not h and (pb.hopf.dim != h.dim or pb.hopf.comult != h.comult or pb.hopf.mult != h.mult):
        raise StructuralError("tensoring actions of different Hopf algebras")
    if not is_cocommutative(h):
        raise VerificationError("tensor product of partial actions needs a cocommutative Hopf algebra")
    a, b = pa.cat, pb.cat
    cat = tensor_categories(a, b)
    act = {}
    for (y, y2), (x, x2) in product(product(a.objects, b.objects), repeat=2):
        d = a.dim(y, x) * b.dim(y2, x2)
        mats = []
        for l in range(h.dim):
            m = LinMap.zero(cat.field, d, d)
            for (j, k), cc in h.comult[l].items():
                m = m + pa.act[(y, x)][j].kron(pb.act[(y2, x2)][k]).scale(cc)
            mats.append(m)
        act[(pair_name(y, y2), pair_name(x, x2))] = mats
    return HopfAction(cat, h, act, {"label": "tensor"})


# ---------------------------------------------------------------------------
# partial group actions


@dataclass
class PartialGroupAction:
    """Ideals ``I^g`` generated by central idempotents ``e^g`` and maps ``alpha_g: I^{g^-1} -> I^g``.

    ``alphas[g][(y, x)]`` acts on coordinates in the echelon basis of
    ``ideals[g^-1][(y, x)]`` and returns coordinates in ``ideals[g][(y, x)]``.
    """

    group: FiniteGroup
    cat: LinSemicat
    idempotents: dict
    ideals: dict
    alphas: dict

    def alpha(self, g: int, y, x, v):
        """Apply ``alpha_g`` to an ambient vector of ``I^{g^-1}``."""
        src = self.ideals[self.group.inv(g)][(y, x)]
        co = src.coords(v)
        if co is None:
            raise VerificationError("vector outside the domain of alpha", {"g": g, "pair": [y, x]})
        return src_to_ambient(self.ideals[g][(y, x)], self.alphas[g][(y, x)](co))


def src_to_ambient(sub: Subspace, coords):
    return lincomb(sub.field, sub.n, coords, sub.rows)


def to_partial_group_action(pa: HopfAction) -> PartialGroupAction:
    h = pa.hopf
    g = h.group
    if h.kind != "group_algebra" or g is None:
        raise StructuralError("partial group actions come from actions of a group algebra kG")
    c = pa.cat
    idems, ideals, alphas = {}, {}, {}
    for a in range(g.order):
        idems[a] = {x: pa.act[(x, x)][a](c.identity(x)) for x in c.objects}
        ideals[a] = ideal_of_idempotent(c, idems[a])
    for a in range(g.order):
        src = ideals[g.inv(a)]
        dst = ideals[a]
        mats = {}
        for y, x in c.pairs():
            cols = []
            for r in src[(y, x)].rows:
                co = dst[(y, x)].coords(pa.act[(y, x)][a](r))
                if co is None:
                    raise VerificationError("g . I^{g^-1} is not inside I^g", {"g": a, "pair": [y, x]})
                cols.append(co)
            mats[(y, x)] = LinMap.from_columns(c.field, dst[(y, x)].dim, cols) if cols else LinMap.zero(c.field, dst[(y, x)].dim, 0)
        alphas[a] = mats
    return PartialGroupAction(g, c, idems, ideals, alphas)


def from_partial_group_action(pga: PartialGroupAction, hopf: HopfAlgebra) -> HopfAction:
    """``g . f = alpha_g(f o e_x^{g^-1})``."""
    g, c = pga.group, pga.cat
    for a in range(g.order):
        gen = ideal_of_idempotent(c, pga.idempotents[a])
        if any(gen[k] != pga.ideals[a][k] for k in c.pairs()):
            raise VerificationError("ideal is not generated by its idempotent", {"g": a})
    act = {}
    for y, x in c.pairs():
        d = c.dim(y, x)
        mats = []
        for a in range(g.order):
            e_inv = pga.idempotents[g.inv(a)][x]
            cols = [pga.alpha(a, y, x, c.compose(y, x, x, c.basis_vec(y, x, b), e_inv)) for b in range(d)]
            mats.append(LinMap.from_columns(c.field, d, cols) if cols else LinMap.zero(c.field, 0, 0))
        act[(y, x)] = mats
    return HopfAction(c, hopf, act, {"label": "from partial group action"})


def verify_partial_group_action(pga: PartialGroupAction) -> Report:
    g, c = pga.group, pga.cat
    rep = Report("partial group action")
    e = g.identity
    full = all(pga.ideals[e][k].dim == c.dim(*k) for k in c.pairs())
    ident = all(pga.alphas[e][k] == LinMap.identity(c.field, c.dim(*k)) for k in c.pairs())
    rep.add("(a) I^e = C, alpha_e = id", full and ident)

    w = None
    for a in range(g.order):
        r = verify_central_idempotent(c, pga.idempotents[a])
        if not r.ok:
            w = {"g": a}
            break
    rep.add("central idempotents", w is None, w)

    w = None
    for a in range(g.order):
        ai = g.inv(a)
        for z, y, x in c.triples():
            t = c.tensor(z, y, x)
            if not t.terms:
                continue
            for r in pga.ideals[ai][(z, y)].rows:
                for s in pga.ideals[ai][(y, x)].rows:
                    lhs = pga.alpha(a, z, x, t.apply(r, s))
                    rhs = t.apply(pga.alpha(a, z, y, r), pga.alpha(a, y, x, s))
                    if lhs != rhs:
                        w = {"g": a, "objects": [z, y, x]}
                        break
                if w:
                    break
            if w:
                break
        if w:
            break
    bij = all(m.rows == m.cols and m.is_injective() for al in pga.alphas.values() for m in al.values())
    rep.add("alpha semicategory isomorphisms", w is None and bij, w)

    wb = wc = None
    for a, b in product(range(g.order), repeat=2):
        ab_inv = g.inv(g.mul(a, b))
        for y, x in c.pairs():
            inter = pga.ideals[b][(y, x)].intersect(pga.ideals[g.inv(a)][(y, x)])
            for v in inter.rows:
                f = pga.alpha(g.inv(b), y, x, v)
                if not pga.ideals[ab_inv][(y, x)].contains(f):
                    wb = wb or {"g": a, "h": b, "pair": [y, x]}
                    continue
                if pga.alpha(a, y, x, pga.alpha(b, y, x, f)) != pga.alpha(g.mul(a, b), y, x, f):
                    wc = wc or {"g": a, "h": b, "pair": [y, x]}
    rep.add("(b) domain condition", wb is None, wb)
    rep.add("(c) composition condition", wc is None, wc)
    return rep


def swap_example(field):
    """``k x k`` as a one-object category with ``C2`` swapping the factors (a global ``kC2`` action)."""
    from .category import one_object_category
    from .group import cyclic_group
    from .hopf import build_group_algebra

    c = one_object_category(field, 2)
    h = build_group_algebra(cyclic_group(2), field)
    z, o = field.zero, field.one
    ident = LinMap.identity(field, 2)
    swap = LinMap(field, [[z, o], [o, z]])
    return HopfAction(c, h, {("*", "*"): [ident, swap]}, {"label": "swap"}), {"*": (o, z)}

