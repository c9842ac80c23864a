"""Globalizations of partial actions inside ``Hom_k(H, C)``.

``Hom_k(H, _yC_x)`` has basis ``phi^i (x) f_a`` (dual Hopf basis times hom
basis) at index ``i * d + a``.  Composition is convolution and ``H`` acts by
``(h > F)(k) = F(kh)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .category import (
    LinSemicat,
    Semifunctor,
    full_subcategory,
    ideal_of_idempotent,
    subsemicategory_from_subspaces,
    verify_central_idempotent,
    verify_semicat,
    verify_semifunctor,
)
from .errors import StructuralError, VerificationError
from .field import Field, QQ
from .group import FiniteGroup, Subgroup
from .hopf import HopfAlgebra, build_dual_group_hopf
from .linalg import Bilinear, LinMap, SpanSolver, Subspace, kernel_basis, unit
from .partial import HopfAction, verify_global_action
from .report import Report


@dataclass
class HomCategory:
    cat: LinSemicat
    action: HopfAction
    base: HopfAction

    @property
    def hopf(self) -> HopfAlgebra:
        return self.base.hopf


def _comult_by_pair(h: HopfAlgebra) -> dict:
    """``{(i, j): [(l, Delta_l^{ij})]}``."""
    out: dict = {}
    for l, d in enumerate(h.comult):
        for ij, c in d.items():
            out.setdefault(ij, []).append((l, c))
    return out


def build_hom_category(pa: HopfAction) -> HomCategory:
    """Convolution semicategory ``Hom_k(H, C)`` with its global ``H``-action."""
    c, h = pa.cat, pa.hopf
    n = h.dim
    f = c.field
    homdim = {k: n * c.dim(*k) for k in c.pairs()}
    by_pair = _comult_by_pair(h)
    comp = {}
    for (z, y, x), t in c.comp.items():
        dzy, dyx, dzx = c.dim(z, y), c.dim(y, x), c.dim(z, x)
        terms: dict = {}
        for (a, b), row in t.terms.items():
            for (i, j), ls in by_pair.items():
                out = {}
                for l, cl in ls:
                    for k, ck in row:
                        key = l * dzx + k
                        out[key] = out.get(key, 0) + cl * ck
                terms[(i * dzy + a, j * dyx + b)] = tuple((k, v) for k, v in sorted(out.items()) if v != 0)
        comp[(z, y, x)] = Bilinear(f, n * dzy, n * dyx, n * dzx, terms)
    hc = LinSemicat(f, c.objects, homdim, comp, None, None, f"Hom(H,{c.name})")
    # b_m > (phi^i (x) f_a) = sum_k m[k][m][i] phi^k (x) f_a
    act = {}
    for y, x in c.pairs():
        d = c.dim(y, x)
        mats = []
        for m in range(n):
            cols = []
            for i in range(n):
                for a in range(d):
                    v = [f.zero] * (n * d)
                    for k in range(n):
                        coef = h.mult.entry(k, m, i)
                        if coef != 0:
                            v[k * d + a] = coef
                    cols.append(tuple(v))
            mats.append(LinMap.from_columns(f, n * d, cols))
        act[(y, x)] = mats
    return HomCategory(hc, HopfAction(hc, h, act, {"label": "hom"}), pa)


def evaluation_vector(pa: HopfAction, y, x, f) -> tuple:
    """``F(f) = (h -> h . f)`` in ``Hom_k(H, _yC_x)``."""
    out = []
    for m in pa.act[(y, x)]:
        out.extend(m(f))
    return tuple(out)


@dataclass
class Globalization:
    """``(B, F)`` with ``B`` a global ``H``-module semicategory and ``F: C -> B``.

    ``action`` acts on ``B`` in its own coordinates.  ``incl`` embeds ``B`` in
    the hom category when the globalization was built there.
    """

    pa: HopfAction
    B: LinSemicat
    action: HopfAction
    F: Semifunctor
    incl: Semifunctor | None = None
    hom: HomCategory | None = None
    meta: dict = dc_field(default_factory=dict)

    @property
    def idempotent(self) -> dict:
        return {x: self.F(x, x, self.pa.cat.identity(x)) for x in self.pa.cat.objects}

    def dims(self) -> dict:
        return {f"{y}|{x}": d for (y, x), d in self.B.homdim.items()}


def _restrict_action(ambient: HopfAction, sub: LinSemicat, subs: dict) -> HopfAction:
    act = {}
    for k in sub.pairs():
        sp = subs[k]
        mats = []
        for m in ambient.act[k]:
            cols = []
            for r in sp.rows:
                co = sp.coords(m(r))
                if co is None:
                    raise VerificationError("subspace is not stable under the action", {"pair": list(k)})
                cols.append(co)
            mats.append(LinMap.from_columns(sub.field, sp.dim, cols))
        act[k] = mats
    return HopfAction(sub, ambient.hopf, act)


def standard_globalization(pa: HopfAction) -> Globalization:
    """``F(f)(h) = h . f`` and ``_yB_x = H > F(_yC_x)``."""
    hc = build_hom_category(pa)
    c, h = pa.cat, pa.hopf
    subs = {}
    for y, x in c.pairs():
        d = c.dim(y, x)
        vecs = []
        for a in range(d):
            v = evaluation_vector(pa, y, x, c.basis_vec(y, x, a))
            vecs.extend(m(v) for m in hc.action.act[(y, x)])
        subs[(y, x)] = Subspace.span(c.field, h.dim * d, vecs)
    B, incl = subsemicategory_from_subspaces(hc.cat, subs, None, f"B({c.name})")
    action = _restrict_action(hc.action, B, subs)
    maps = {}
    for y, x in c.pairs():
        cols = []
        for a in range(c.dim(y, x)):
            co = subs[(y, x)].coords(evaluation_vector(pa, y, x, c.basis_vec(y, x, a)))
            if co is None:  # pragma: no cover - F(f) = 1 > F(f)
                raise VerificationError("F(f) outside B", {"pair": [y, x]})
            cols.append(co)
        maps[(y, x)] = LinMap.from_columns(c.field, subs[(y, x)].dim, cols)
    F = Semifunctor(c, B, None, maps)
    return Globalization(pa, B, action, F, incl, hc, {"label": "standard"})


def verify_globalization(g: Globalization) -> Report:
    """Items (a)-(d): global module semicategory, ideal embedding, generation, intertwining."""
    pa, B, act, F = g.pa, g.B, g.action, g.F
    c = pa.cat
    rep = Report("globalization")

    ga = verify_global_action(act)
    sc = verify_semicat(B)
    glob_ok = ga.check("H1").passed and ga.check("H2").passed and ga.check("H3").passed
    w = next((ch.witness for ch in ga.checks + sc.checks if not ch.passed and ch.name != "H4"), None)
    rep.add("(a) B is a global H-module semicategory", glob_ok and sc.check("associativity").passed, w)

    fr = verify_semifunctor(F)
    rep.add("(b) F semifunctor", fr.ok, fr.failures()[0].witness if not fr.ok else None)
    rep.add("(b) F faithful", F.is_faithful())
    e = g.idempotent
    spanning = {k: [r for r in _generators(g, *k)] for k in B.pairs()}
    cen = verify_central_idempotent(B, e, spanning)
    rep.add("(b) e = F(1) central idempotent in B", cen.ok, cen.failures()[0].witness if not cen.ok else None)
    ideal = ideal_of_idempotent(B, e)
    w = None
    for y, x in c.pairs():
        img = Subspace.span(B.field, B.dim(y, x), F.maps[(y, x)].columns())
        if img != ideal[(y, x)]:
            w = {"pair": [y, x]}
            break
    rep.add("(b) F(C) is the ideal generated by e", w is None, w)

    w = None
    for y, x in c.pairs():
        gen = Subspace.span(B.field, B.dim(y, x), spanning[(y, x)])
        if gen.dim != B.dim(y, x):
            w = {"pair": [y, x], "span": gen.dim, "dim": B.dim(y, x)}
            break
    rep.add("(c) B = H > F(C)", w is None, w)

    w = None
    h = pa.hopf
    for y, x in c.pairs():
        for a in range(c.dim(y, x)):
            f = c.basis_vec(y, x, a)
            Ff = F(y, x, f)
            for i in range(h.dim):
                lhs = F(y, x, pa.act[(y, x)][i](f))
                hf = act.act[(y, x)][i](Ff)
                l = B.compose(y, y, x, e[y], hf)
                r = B.compose(y, x, x, hf, e[x])
                if lhs != l or lhs != r:
                    w = {"pair": [y, x], "basis": a, "h": i}
                    break
            if w:
                break
        if w:
            break
    rep.add("(d) F(h.f) = F(1_y)(h > F(f)) = (h > F(f))F(1_x)", w is None, w)
    return rep


def _generators(g: Globalization, y, x) -> list:
    """``b_i > F(f_a)`` for all Hopf and hom basis indices, ``i`` major."""
    cols = g.F.maps[(y, x)].columns()
    return [m(v) for m in g.action.act[(y, x)] for v in cols] if cols else []


def _q_vectors(pa: HopfAction, y, x) -> list:
    """``(b_i, f_a) -> (k -> (b_k b_i) . f_a)``, ordered like :func:`_generators`."""
    h, c = pa.hopf, pa.cat
    out = []
    for i in range(h.dim):
        for a in range(c.dim(y, x)):
            f = c.basis_vec(y, x, a)
            v = []
            for k in range(h.dim):
                v.extend(pa.pi(y, x, h.basis_product(k, i))(f))
            out.append(tuple(v))
    return out


def verify_minimality(g: Globalization) -> Report:
    """Item (e) as ``ker Q`` inside ``ker R`` on the spanning family ``{(b_i, f_a)}``."""
    pa = g.pa
    c = pa.cat
    rep = Report("minimality")
    w = None
    for y, x in c.pairs():
        d = c.dim(y, x)
        if d == 0:
            continue
        n = pa.hopf.dim * d
        Q = LinMap.from_columns(c.field, n, _q_vectors(pa, y, x))
        R = LinMap.from_columns(c.field, g.B.dim(y, x), _generators(g, y, x))
        for v in kernel_basis(Q):
            if not all(a == 0 for a in R(v)):
                w = {"pair": [y, x], "kernel_vector": [c.field.format(a) for a in v]}
                break
        if w:
            break
    rep.add("(e) minimality", w is None, w)
    return rep


def _transport(g1: Globalization, g2: Globalization, y, x):
    """Linear map sending ``b_i > F1(f_a)`` to ``b_i > F2(f_a)``, or ``None`` if ill defined."""
    s1 = _generators(g1, y, x)
    s2 = _generators(g2, y, x)
    d1, d2 = g1.B.dim(y, x), g2.B.dim(y, x)
    S1 = LinMap.from_columns(g1.B.field, d1, s1)
    S2 = LinMap.from_columns(g1.B.field, d2, s2)
    for v in kernel_basis(S1):
        if not all(a == 0 for a in S2(v)):
            return None
    solver = SpanSolver(g1.B.field, d1, s1)
    cols = []
    for j in range(d1):
        co = solver.solve(unit(g1.B.field, d1, j))
        if co is None:
            return None
        cols.append(S2(co))
    return LinMap.from_columns(g1.B.field, d2, cols)


def globalization_iso(g1: Globalization, g2: Globalization):
    """``Phi(sum h_i > F1(f_i)) = sum h_i > F2(f_i)`` and its inverse; returns ``(Phi, Psi, report)``."""
    if g1.pa.cat is not g2.pa.cat and g1.pa.cat.homdim != g2.pa.cat.homdim:
        raise StructuralError("globalizations of different categories")
    for g in (g1, g2):
        if not verify_minimality(g).ok:
            raise VerificationError("globalization is not minimal; the comparison map need not be well defined")
    c = g1.pa.cat
    rep = Report("globalization isomorphism")
    phi, psi = {}, {}
    for y, x in c.pairs():
        p = _transport(g1, g2, y, x)
        q = _transport(g2, g1, y, x)
        if p is None or q is None:
            rep.add("well defined", False, {"pair": [y, x]})
            return None, None, rep
        phi[(y, x)], psi[(y, x)] = p, q
    rep.add("well defined", True)
    Phi = Semifunctor(g1.B, g2.B, None, phi)
    Psi = Semifunctor(g2.B, g1.B, None, psi)
    rep.add("Phi semifunctor", verify_semifunctor(Phi).ok)
    rep.add("Psi semifunctor", verify_semifunctor(Psi).ok)
    inv = all(
        (phi[k] @ psi[k]) == LinMap.identity(c.field, g2.B.dim(*k)) and (psi[k] @ phi[k]) == LinMap.identity(c.field, g1.B.dim(*k))
        for k in c.pairs()
    )
    rep.add("Phi and Psi mutually inverse", inv)
    w = None
    for k in c.pairs():
        for i in range(g1.pa.hopf.dim):
            if phi[k] @ g1.action.act[k][i] != g2.action.act[k][i] @ phi[k]:
                w = {"pair": list(k), "h": i}
                break
        if w:
            break
    rep.add("Phi intertwines the H-actions", w is None, w)
    rep.add("Phi F1 = F2", all(phi[k] @ g1.F.maps[k] == g2.F.maps[k] for k in c.pairs()))
    return Phi, Psi, rep


def dual_point_globalization(g: FiniteGroup, k: Subgroup, pa: HopfAction | None = None, field: Field = QQ) -> Globalization:
    """The algebra ``kK`` with ``p_g > d_s = [g = s] d_s`` and ``F(1) = (1/|K|) sum_{s in K} d_s``.

    ``pa`` is the point action it globalizes; by default the one with ``lambda = 1/|K|`` on ``K``.
    """
    field.require_invertible(g.order)
    h = build_dual_group_hopf(g, field)
    els = list(k.elements)
    pos = {s: i for i, s in enumerate(els)}
    m = len(els)
    one = field.one
    mult = Bilinear(field, m, m, m, {(pos[a], pos[b]): ((pos[g.mul(a, b)], one),) for a in els for b in els})
    B = LinSemicat(field, ["*"], {("*", "*"): m}, {("*", "*", "*"): mult}, {"*": unit(field, m, pos[g.identity])}, None, "kK")
    mats = []
    for a in range(g.order):
        mats.append(LinMap.from_columns(field, m, [unit(field, m, i) if els[i] == a else (field.zero,) * m for i in range(m)]))
    action = HopfAction(B, h, {("*", "*"): mats}, {"label": "grading"})
    if pa is None:
        from .grading import point_action

        v = one / field(m)
        pa = point_action(h, [v if a in k else field.zero for a in range(g.order)])
    e = tuple(one / field(m) for _ in els)
    F = Semifunctor(pa.cat, B, None, {("*", "*"): LinMap.from_columns(field, m, [e])})
    return Globalization(pa, B, action, F, None, None, {"label": "closed form", "subgroup": k.names()})


def restrict_to_objects(g: Globalization, objs) -> Globalization:
    """The same globalization seen over a full subcategory."""
    c = g.pa.cat
    sub = full_subcategory(c, objs)
    pa = HopfAction(sub, g.pa.hopf, {k: g.pa.act[k] for k in sub.pairs()})
    Bs = full_subcategory(g.B, objs)
    act = HopfAction(Bs, g.pa.hopf, {k: g.action.act[k] for k in Bs.pairs()})
    F = Semifunctor(sub, Bs, None, {k: g.F.maps[k] for k in sub.pairs()})
    return Globalization(pa, Bs, act, F, None, None, {"label": "restricted"})


def induced_from_globalization(g: Globalization) -> HopfAction:
    """Pull back ``h . f = F(1_y) (h > F(f))`` along ``F``; reproduces the partial action when ``g`` is a globalization."""
    c = g.pa.cat
    e = g.idempotent
    act = {}
    for y, x in c.pairs():
        Fm = g.F.maps[(y, x)]
        solver = SpanSolver(c.field, g.B.dim(y, x), Fm.columns())
        mats = []
        for m in g.action.act[(y, x)]:
            cols = []
            for a in range(c.dim(y, x)):
                v = g.B.compose(y, y, x, e[y], m(Fm.column(a)))
                co = solver.solve(v)
                if co is None:
                    raise VerificationError("induced action leaves F(C)", {"pair": [y, x]})
                cols.append(co)
            mats.append(LinMap.from_columns(c.field, c.dim(y, x), cols))
        act[(y, x)] = mats
    return HopfAction(c, g.pa.hopf, act)


def full_globalization_report(g: Globalization) -> Report:
    rep = verify_globalization(g)
    rep.extend(verify_minimality(g))
    rep.info["dims"] = g.dims()
    return rep


__all__ = [
    "HomCategory",
    "Globalization",
    "build_hom_category",
    "standard_globalization",
    "verify_globalization",
    "verify_minimality",
    "globalization_iso",
    "dual_point_globalization",
    "restrict_to_objects",
    "induced_from_globalization",
    "full_globalization_report",
    "evaluation_vector",
]
