"""Smash products of (partial) module categories.

On ``_yA_x (x) H`` the basis element ``f_a (x) b_i`` sits at index ``a * dim H + i``
and composition is ``(f (x) h)(g (x) k) = sum f (h1 . g) (x) h2 k``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, verify_algebra_morphism
from .category import (
    LinSemicat,
    Semifunctor,
    from_algebra,
    matrix_algebra,
    subsemicategory_from_subspaces,
    verify_semicat,
    verify_semifunctor,
)
from .errors import VerificationError
from .globalization import Globalization, verify_globalization
from .hopf import dualize
from .linalg import Bilinear, LinMap, Subspace, block_diag, inverse, kron_vec
from .partial import HopfAction, verify_global_action
from .report import Report


def _smash_cat(act: HopfAction, identities: bool, name: str) -> LinSemicat:
    c, h = act.cat, act.hopf
    n = h.dim
    f = c.field
    prod = [[h.basis_product(q, j) for j in range(n)] for q in range(n)]
    homdim = {k: c.dim(*k) * n for k in c.pairs()}
    comp = {}
    for (z, y, x), t in c.comp.items():
        dzy, dyx, dzx = c.dim(z, y), c.dim(y, x), c.dim(z, x)
        terms: dict = {}
        for a in range(dzy):
            fa = c.basis_vec(z, y, a)
            for b in range(dyx):
                for i in range(n):
                    # pieces f_a o (b_p . g_b) for the left tensor legs of Delta(b_i)
                    legs = [(t.apply(fa, act.act[(y, x)][p].column(b)), q, cc) for (p, q), cc in h.comult[i].items()]
                    for j in range(n):
                        acc: dict = {}
                        for v, q, cc in legs:
                            w = prod[q][j]
                            for k, vk in enumerate(v):
                                if vk == 0:
                                    continue
                                for r, wr in enumerate(w):
                                    if wr != 0:
                                        key = k * n + r
                                        acc[key] = acc.get(key, 0) + cc * vk * wr
                        row = tuple((k, v) for k, v in sorted(acc.items()) if v != 0)
                        if row:
                            terms[(a * n + i, b * n + j)] = row
        comp[(z, y, x)] = Bilinear(f, dzy * n, dyx * n, dzx * n, terms)
    ids = None
    if identities and c.is_category:
        ids = {x: kron_vec(c.identity(x), h.unit) for x in c.objects}
    return LinSemicat(f, c.objects, homdim, comp, ids, None, name)


def unit_elements(act: HopfAction) -> dict:
    """``1_x (x) 1_H`` in each diagonal tensor space."""
    return {x: kron_vec(act.cat.identity(x), act.hopf.unit) for x in act.cat.objects}


def smash_tensor(pa: HopfAction) -> LinSemicat:
    """The semicategory ``A (x) H`` with the twisted composition (no identities)."""
    return _smash_cat(pa, False, f"{pa.cat.name}(x)H")


def verify_smash_tensor(pa: HopfAction, st: LinSemicat) -> Report:
    rep = verify_semicat(st)
    e = unit_elements(pa)
    w = None
    for y, x in st.pairs():
        for a in range(st.dim(y, x)):
            v = st.basis_vec(y, x, a)
            if st.compose(y, y, x, e[y], v) != v:
                w = {"pair": [y, x], "basis": a}
                break
        if w:
            break
    rep.add("1_x (x) 1_H is a left unit", w is None, w)
    return rep


@dataclass
class PartialSmash:
    """The right ideal ``(A (x) H) o e`` as a category, with its inclusion into ``A (x) H``."""

    cat: LinSemicat
    incl: Semifunctor
    tensor: LinSemicat
    subspaces: dict
    pa: HopfAction

    def sharp(self, y, x, a: int, i: int) -> tuple:
        """``f_a # b_i`` in the ambient tensor coordinates."""
        n = self.pa.hopf.dim
        e = unit_elements(self.pa)[x]
        return self.tensor.compose(y, x, x, self.tensor.basis_vec(y, x, a * n + i), e)

    def sharp_elem(self, y, x, f, h) -> tuple:
        """``f # h`` for arbitrary coordinate vectors ``f`` and ``h``."""
        e = unit_elements(self.pa)[x]
        return self.tensor.compose(y, x, x, kron_vec(f, h), e)


def partial_smash(pa: HopfAction) -> PartialSmash:
    st = smash_tensor(pa)
    e = unit_elements(pa)
    subs = {}
    for y, x in st.pairs():
        vecs = [st.compose(y, x, x, st.basis_vec(y, x, k), e[x]) for k in range(st.dim(y, x))]
        subs[(y, x)] = Subspace.span(st.field, st.dim(y, x), vecs)
    cat, incl = subsemicategory_from_subspaces(st, subs, e, f"{pa.cat.name}#H")
    return PartialSmash(cat, incl, st, subs, pa)


def verify_partial_smash(ps: PartialSmash) -> Report:
    rep = verify_semicat(ps.cat)
    w = None
    n = ps.pa.hopf.dim
    for y, x in ps.cat.pairs():
        gens = [ps.sharp(y, x, a, i) for a in range(ps.pa.cat.dim(y, x)) for i in range(n)]
        if Subspace.span(ps.tensor.field, ps.tensor.dim(y, x), gens) != ps.subspaces[(y, x)]:
            w = {"pair": [y, x]}
            break
    rep.add("spanned by f # h", w is None, w)
    return rep


def global_smash(ga: HopfAction) -> LinSemicat:
    """``B # H`` for a global action; identities ``1_x (x) 1_H`` when ``B`` has them."""
    rep = verify_global_action(ga)
    if not rep.ok:
        raise VerificationError("smash product B#H needs a global action", rep.failures()[0].witness)
    return _smash_cat(ga, True, f"{ga.cat.name}#H")


def embed_smash(ps: PartialSmash, g: Globalization, bh: LinSemicat | None = None, check: bool = True):
    """``f # h -> (F (x) id)(f # h)`` from the partial smash into ``B # H``; returns ``(functor, report)``."""
    if check:
        gr = verify_globalization(g)
        if not gr.ok:
            raise VerificationError("not a globalization of this partial action", gr.failures()[0].witness)
    bh = bh or global_smash(g.action)
    n = ps.pa.hopf.dim
    maps = {}
    for y, x in ps.cat.pairs():
        FH = g.F.maps[(y, x)].kron(LinMap.identity(bh.field, n))
        maps[(y, x)] = FH @ ps.incl.maps[(y, x)]
    emb = Semifunctor(ps.cat, bh, None, maps)
    rep = verify_semifunctor(emb)
    rep.add("faithful", emb.is_faithful())
    return emb, rep


def hstar_action(ps: PartialSmash) -> HopfAction:
    """Global ``H*``-action ``b^i . (f (x) b_j) = sum_p Delta_j^{p,i} f (x) b_p`` on the partial smash."""
    h = ps.pa.hopf
    hs = dualize(h)
    n = h.dim
    f = h.field
    base = []
    for i in range(n):
        cols = []
        for j in range(n):
            col = [f.zero] * n
            for (p, q), c in h.comult[j].items():
                if q == i:
                    col[p] += c
            cols.append(tuple(col))
        base.append(LinMap.from_columns(f, n, cols))
    act = {}
    for y, x in ps.cat.pairs():
        sp = ps.subspaces[(y, x)]
        d = ps.pa.cat.dim(y, x)
        mats = []
        for i in range(n):
            amb = LinMap.identity(f, d).kron(base[i])
            cols = []
            for r in sp.rows:
                co = sp.coords(amb(r))
                if co is None:
                    raise VerificationError("H* action leaves the partial smash", {"pair": [y, x], "phi": i})
                cols.append(co)
            mats.append(LinMap.from_columns(f, sp.dim, cols))
        act[(y, x)] = mats
    return HopfAction(ps.cat, hs, act, {"label": "H* on smash"})


# ---------------------------------------------------------------------------
# matrix algebras


def matrix_partial_action(pa: HopfAction) -> HopfAction:
    """``h . (f_yx) = (h . f_yx)`` on the one-object category ``a(A)``."""
    alg, _, _ = matrix_algebra(pa.cat)
    c1 = from_algebra(alg)
    mats = [block_diag(pa.field, [pa.act[k][i] for k in pa.cat.pairs()]) for i in range(pa.hopf.dim)]
    return HopfAction(c1, pa.hopf, {("*", "*"): mats}, {"label": "matrix"})


@dataclass
class MatrixSmashIso:
    source: Algebra
    target: Algebra
    phi: LinMap
    psi: LinMap | None
    report: Report


def check_matrix_iso(source: Algebra, target: Algebra, phi: LinMap, idems_src=None, idems_tgt=None) -> MatrixSmashIso:
    rep = Report("matrix smash isomorphism")
    psi = inverse(phi)
    rep.add("Phi bijective", psi is not None)
    r1 = verify_algebra_morphism(phi, source, target)
    rep.add("Phi multiplicative", r1.check("multiplicative").passed, r1.check("multiplicative").witness)
    rep.add("Phi unital", r1.ok)
    if psi is not None:
        r2 = verify_algebra_morphism(psi, target, source)
        rep.add("Psi multiplicative", r2.ok, r2.failures()[0].witness if not r2.ok else None)
        ok = (phi @ psi) == LinMap.identity(phi.field, phi.rows) and (psi @ phi) == LinMap.identity(phi.field, phi.cols)
        rep.add("Phi Psi = id and Psi Phi = id", ok)
    if idems_src is not None:
        rep.add("idempotent families preserved", [phi(e) for e in idems_src] == list(idems_tgt))
    return MatrixSmashIso(source, target, phi, psi, rep)


def matrix_smash_iso(pa: HopfAction, target: Algebra | None = None) -> MatrixSmashIso:
    """``Phi(f E_yx (x) h) = (f # h) E_yx`` from the smash of ``a(A)`` to ``a(A # H)``.

    ``target`` may replace the flattened smash algebra (used to test mutations).
    """
    n = pa.hopf.dim
    c = pa.cat
    mpa = matrix_partial_action(pa)
    ps1 = partial_smash(mpa)
    src_alg = Algebra(pa.field, ps1.cat.dim("*", "*"), ps1.cat.tensor("*", "*", "*"), ps1.cat.identity("*"), "a(A)#H")
    ps = partial_smash(pa)
    tgt, idems_t, offs_t = matrix_algebra(ps.cat)
    if target is not None:
        tgt = target
    _, _, offs_a = matrix_algebra(c)
    f = pa.field
    # ambient a(A) (x) H index: (offset_A(y,x) + a) * n + i
    cols = []
    for r in ps1.subspaces[("*", "*")].rows:
        out = [f.zero] * tgt.dim
        for idx, coef in enumerate(r):
            if coef == 0:
                continue
            g, i = divmod(idx, n)
            for (y, x), o in offs_a.items():
                if o <= g < o + c.dim(y, x):
                    a = g - o
                    break
            co = ps.subspaces[(y, x)].coords(ps.sharp(y, x, a, i))
            for k, v in enumerate(co):
                if v != 0:
                    out[offs_t[(y, x)] + k] += coef * v
        cols.append(tuple(out))
    phi = LinMap.from_columns(f, tgt.dim, cols)
    # distinguished idempotents: 1_x E_xx (x) 1_H and (1_x # 1_H) E_xx
    src_idems = []
    sp1 = ps1.subspaces[("*", "*")]
    for x in c.objects:
        v = [f.zero] * (c.total_dim() * n)
        o = offs_a[(x, x)]
        for a, coef in enumerate(c.identity(x)):
            for i, u in enumerate(pa.hopf.unit):
                v[(o + a) * n + i] += coef * u
        src_idems.append(sp1.coords(tuple(v)))
    return check_matrix_iso(src_alg, tgt, phi, src_idems, idems_t)


def smash_dims(ps: PartialSmash) -> dict:
    return {f"{y}|{x}": d for (y, x), d in ps.cat.homdim.items()}
