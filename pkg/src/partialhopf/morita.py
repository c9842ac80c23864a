"""Morita contexts, linking algebras, and the context between a partial smash and ``B # H``."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, trilinear_diff
from .category import (
    LinSemicat,
    Semifunctor,
    matrix_algebra,
    subsemicategory_from_subspaces,
    verify_semicat,
    verify_semifunctor,
)
from .errors import StructuralError, VerificationError
from .globalization import Globalization, verify_minimality
from .linalg import Bilinear, LinMap, Subspace, kernel_basis, kron_vec, unit
from .report import Report
from .smash import PartialSmash, embed_smash, global_smash


@dataclass
class MoritaContext:
    """``(A, B, M, N, tau, sigma)`` with ``M`` an ``A``-``B`` and ``N`` a ``B``-``A`` bimodule.

    ``tau: M x N -> A`` and ``sigma: N x M -> B`` are stored on the plain
    tensor spaces; balancing over the middle algebra is a checked property.
    """

    A: Algebra
    B: Algebra
    m: int
    n: int
    a_M: Bilinear
    M_b: Bilinear
    b_N: Bilinear
    N_a: Bilinear
    tau: Bilinear
    sigma: Bilinear
    info: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        a, b, m, n = self.A.dim, self.B.dim, self.m, self.n
        want = {
            "a_M": (a, m, m), "M_b": (m, b, m), "b_N": (b, n, n), "N_a": (n, a, n),
            "tau": (m, n, a), "sigma": (n, m, b),
        }
        for name, shape in want.items():
            t = getattr(self, name)
            if (t.m, t.n, t.p) != shape:
                raise StructuralError(f"{name} has shape {(t.m, t.n, t.p)}, expected {shape}")


def _unit_action(alg: Algebra, act: Bilinear, left: bool) -> bool:
    if alg.unit is None:
        return True
    d = act.n if left else act.m
    for i in range(d):
        v = unit(alg.field, d, i)
        if (act.apply(alg.unit, v) if left else act.apply(v, alg.unit)) != v:
            return False
    return True


def _image(t: Bilinear) -> Subspace:
    return Subspace.span(t.field, t.p, [t.basis_product(i, j) for i in range(t.m) for j in range(t.n)])


def _flat(t: Bilinear) -> LinMap:
    return LinMap.from_columns(t.field, t.p, [t.basis_product(i, j) for i in range(t.m) for j in range(t.n)])


def _balance_span(left_act: Bilinear, right_act: Bilinear, m: int, n: int, mid: int, field) -> Subspace:
    """``span{ x r (x) y - x (x) r y }`` in ``field^(m*n)`` for ``x`` in the left factor."""
    vecs = []
    for r in range(mid):
        rv = unit(field, mid, r)
        for i in range(m):
            xr = left_act.apply(unit(field, m, i), rv)
            for j in range(n):
                ry = right_act.apply(rv, unit(field, n, j))
                v = [field.zero] * (m * n)
                for a, c in enumerate(xr):
                    if c != 0:
                        v[a * n + j] += c
                for b, c in enumerate(ry):
                    if c != 0:
                        v[i * n + b] -= c
                vecs.append(tuple(v))
    return Subspace.span(field, m * n, vecs)


def pairing_injective(pair: Bilinear, left_act: Bilinear, right_act: Bilinear, mid: int) -> bool:
    """Whether the induced map on the balanced tensor product is injective."""
    ker = kernel_basis(_flat(pair))
    bal = _balance_span(left_act, right_act, pair.m, pair.n, mid, pair.field)
    return len(ker) == bal.dim


def verify_morita_context(ctx: MoritaContext) -> Report:
    A, B = ctx.A, ctx.B
    rep = Report("Morita context")
    checks = [
        ("A acts on M", trilinear_diff(A.mult, ctx.a_M, ctx.a_M, ctx.a_M)),
        ("B acts on M", trilinear_diff(ctx.M_b, ctx.M_b, B.mult, ctx.M_b)),
        ("M bimodule", trilinear_diff(ctx.a_M, ctx.M_b, ctx.M_b, ctx.a_M)),
        ("B acts on N", trilinear_diff(B.mult, ctx.b_N, ctx.b_N, ctx.b_N)),
        ("A acts on N", trilinear_diff(ctx.N_a, ctx.N_a, A.mult, ctx.N_a)),
        ("N bimodule", trilinear_diff(ctx.b_N, ctx.N_a, ctx.N_a, ctx.b_N)),
        ("tau left A-linear", trilinear_diff(ctx.a_M, ctx.tau, ctx.tau, A.mult)),
        ("tau right A-linear", trilinear_diff(ctx.tau, A.mult, ctx.N_a, ctx.tau)),
        ("tau B-balanced", trilinear_diff(ctx.M_b, ctx.tau, ctx.b_N, ctx.tau)),
        ("sigma left B-linear", trilinear_diff(ctx.b_N, ctx.sigma, ctx.sigma, B.mult)),
        ("sigma right B-linear", trilinear_diff(ctx.sigma, B.mult, ctx.M_b, ctx.sigma)),
        ("sigma A-balanced", trilinear_diff(ctx.N_a, ctx.sigma, ctx.a_M, ctx.sigma)),
        ("m sigma(n m') = tau(m n) m'", trilinear_diff(ctx.tau, ctx.a_M, ctx.sigma, ctx.M_b)),
        ("n tau(m n') = sigma(n m) n'", trilinear_diff(ctx.sigma, ctx.b_N, ctx.tau, ctx.N_a)),
    ]
    for name, w in checks:
        rep.add(name, w is None, w)
    units = (
        _unit_action(A, ctx.a_M, True) and _unit_action(B, ctx.M_b, False)
        and _unit_action(B, ctx.b_N, True) and _unit_action(A, ctx.N_a, False)
    )
    rep.add("unital modules", units)
    rep.info["tau_surjective"] = _image(ctx.tau).dim == A.dim
    rep.info["sigma_surjective"] = _image(ctx.sigma).dim == B.dim
    rep.info["tau_injective"] = pairing_injective(ctx.tau, ctx.M_b, ctx.b_N, B.dim)
    rep.info["sigma_injective"] = pairing_injective(ctx.sigma, ctx.N_a, ctx.a_M, A.dim)
    return rep


def linking_semicategory(ctx: MoritaContext) -> LinSemicat:
    """Two objects ``A`` and ``B`` with ``_A L_B = M`` and ``_B L_A = N``."""
    f = ctx.A.field
    homdim = {("A", "A"): ctx.A.dim, ("A", "B"): ctx.m, ("B", "A"): ctx.n, ("B", "B"): ctx.B.dim}
    comp = {
        ("A", "A", "A"): ctx.A.mult,
        ("A", "A", "B"): ctx.a_M,
        ("A", "B", "B"): ctx.M_b,
        ("A", "B", "A"): ctx.tau,
        ("B", "A", "A"): ctx.N_a,
        ("B", "B", "A"): ctx.b_N,
        ("B", "A", "B"): ctx.sigma,
        ("B", "B", "B"): ctx.B.mult,
    }
    ids = None
    if ctx.A.unit is not None and ctx.B.unit is not None:
        ids = {"A": ctx.A.unit, "B": ctx.B.unit}
    return LinSemicat(f, ["A", "B"], homdim, comp, ids, None, "linking")


def linking_algebra(ctx: MoritaContext) -> Algebra:
    """The block algebra ``[[A, M], [N, B]]`` on the basis ``A, M, N, B``."""
    alg, _, _ = matrix_algebra(linking_semicategory(ctx))
    alg.name = "linking"
    return alg


def verify_linking(ctx: MoritaContext) -> Report:
    rep = Report("linking algebra")
    alg = linking_algebra(ctx)
    r = alg.verify()
    rep.extend(r)
    rep.add("semicategory", verify_semicat(linking_semicategory(ctx)).ok)
    return rep


def trivial_context(alg: Algebra) -> MoritaContext:
    """``A = B = M = N`` with every structure map the product of ``A``."""
    m = alg.mult
    return MoritaContext(alg, alg, alg.dim, alg.dim, m, m, m, m, m, m)


def zero_context(a: Algebra, b: Algebra) -> MoritaContext:
    f = a.field
    z = Bilinear
    return MoritaContext(
        a, b, 0, 0, z(f, a.dim, 0, 0), z(f, 0, b.dim, 0), z(f, b.dim, 0, 0), z(f, 0, a.dim, 0),
        z(f, 0, 0, a.dim), z(f, 0, 0, b.dim),
    )


# ---------------------------------------------------------------------------
# the context attached to a globalization


def _sub_bilinear(t: Bilinear, A: Subspace, B: Subspace, C: Subspace, what: str) -> Bilinear:
    def fn(i, j):
        co = C.coords(t.apply(A.rows[i], B.rows[j]))
        if co is None:
            raise VerificationError(f"{what}: product leaves the target subspace", {"basis": [i, j]})
        return co

    return Bilinear.from_function(t.field, A.dim, B.dim, C.dim, fn)


@dataclass
class SmashContext:
    obj: object
    context: MoritaContext
    R: Algebra
    eps: tuple
    spaces: dict
    report: Report


def paper_morita_context(ps: PartialSmash, g: Globalization, x, bh: LinSemicat | None = None, emb=None) -> SmashContext:
    """Context between ``eps R eps`` and ``R = _x(B#H)_x`` with ``M = eps R``, ``N = R eps``.

    ``eps = F(1_x) (x) 1_H``; all structure maps are products in ``R``.
    """
    if not verify_minimality(g).ok:
        raise VerificationError("the globalization is not minimal")
    bh = bh or global_smash(g.action)
    if emb is None:
        emb, er = embed_smash(ps, g, bh)
        if not er.ok:
            raise VerificationError("embedding of the partial smash failed", er.failures()[0].witness)
    f = bh.field
    d = bh.dim(x, x)
    t = bh.tensor(x, x, x)
    R = Algebra(f, d, t, None, f"_{x}(B#H)_{x}")
    eps = emb(x, x, ps.cat.identity(x))
    basis = [unit(f, d, i) for i in range(d)]
    whole = Subspace.whole(f, d)
    Msub = Subspace.span(f, d, [t.apply(eps, r) for r in basis])
    Nsub = Subspace.span(f, d, [t.apply(r, eps) for r in basis])
    Asub = Subspace.span(f, d, [t.apply(t.apply(eps, r), eps) for r in basis])
    img = Subspace.span(f, d, emb.maps[(x, x)].columns())
    A = Algebra(f, Asub.dim, _sub_bilinear(t, Asub, Asub, Asub, "A"), Asub.coords(eps), "eps R eps")
    ctx = MoritaContext(
        A, R, Msub.dim, Nsub.dim,
        _sub_bilinear(t, Asub, Msub, Msub, "A on M"),
        _sub_bilinear(t, Msub, whole, Msub, "M under R"),
        _sub_bilinear(t, whole, Nsub, Nsub, "R on N"),
        _sub_bilinear(t, Nsub, Asub, Nsub, "N under A"),
        _sub_bilinear(t, Msub, Nsub, Asub, "tau"),
        _sub_bilinear(t, Nsub, Msub, whole, "sigma"),
    )
    rep = verify_morita_context(ctx)
    rep.add("eps R eps is the image of the partial smash", img == Asub)
    # the literal generating sets (A#1)(1#H) and (1#H)(A#1); # is the plain tensor in B#H
    h = ps.pa.hopf
    c = ps.pa.cat
    Fx = g.F.maps[(x, x)]
    A1 = [kron_vec(Fx.column(a), h.unit) for a in range(c.dim(x, x))]
    H1 = [kron_vec(Fx(c.identity(x)), h.b(i)) for i in range(h.dim)]
    Mlit = Subspace.span(f, d, [t.apply(a, h) for a in A1 for h in H1])
    Nlit = Subspace.span(f, d, [t.apply(h, a) for a in A1 for h in H1])
    rep.info["M_literal_equals_eps_R"] = Mlit == Msub
    rep.info["N_literal_equals_R_eps"] = Nlit == Nsub
    rep.add("tau surjective", rep.info["tau_surjective"])
    rep.add("sigma surjective", rep.info["sigma_surjective"])
    rep.info["dims"] = {"A": A.dim, "R": d, "M": Msub.dim, "N": Nsub.dim}
    return SmashContext(x, ctx, R, eps, {"M": Msub, "N": Nsub, "A": Asub}, rep)



@dataclass
class DCategory:
    cat: LinSemicat
    incl: Semifunctor
    G: Semifunctor
    report: Report


def build_D_category(ps: PartialSmash, g: Globalization, contexts: dict | None = None, bh: LinSemicat | None = None) -> DCategory:
    """The category with ``_yD_x = M^y (x)_{R_y} _y(B#H)_x (x)_{R_x} N^x``.

    Because ``eps_y`` lies in ``M^y = eps_y R_y`` and is idempotent, every
    element of the balanced tensor product is ``eps (x) f (x) eps`` and
    multiplication identifies ``_yD_x`` with ``eps_y _y(B#H)_x eps_x``; that is
    how it is materialized.  Composition ``p (x) f tau(q (x) p') g (x) q'``
    becomes the product in ``B#H``.
    """
    bh = bh or global_smash(g.action)
    emb, er = embed_smash(ps, g, bh)
    if not er.ok:
        raise VerificationError("embedding of the partial smash failed", er.failures()[0].witness)
    objs = ps.cat.objects
    if contexts is None:
        contexts = {x: paper_morita_context(ps, g, x, bh, emb) for x in objs}
    for x in objs:
        r = contexts[x].report
        if not r.ok:
            raise VerificationError(f"Morita context at {x} fails", {"object": x, "check": r.failures()[0].name})
    eps = {x: contexts[x].eps for x in objs}
    subs = {}
    for y, x in bh.pairs():
        vecs = []
        for a in range(bh.dim(y, x)):
            v = bh.compose(y, y, x, eps[y], bh.basis_vec(y, x, a))
            vecs.append(bh.compose(y, x, x, v, eps[x]))
        subs[(y, x)] = Subspace.span(bh.field, bh.dim(y, x), vecs)
    D, incl = subsemicategory_from_subspaces(bh, subs, eps, "D")
    maps = {}
    for y, x in ps.cat.pairs():
        cols = []
        for a in range(ps.cat.dim(y, x)):
            v = emb(y, x, ps.cat.basis_vec(y, x, a))
            v = bh.compose(y, x, x, bh.compose(y, y, x, eps[y], v), eps[x])
            co = subs[(y, x)].coords(v)
            if co is None:  # pragma: no cover - v lies in eps B#H eps by construction
                raise VerificationError("G leaves D", {"pair": [y, x]})
            cols.append(co)
        maps[(y, x)] = LinMap.from_columns(bh.field, subs[(y, x)].dim, cols)
    G = Semifunctor(ps.cat, D, None, maps)
    rep = Report("D category")
    rep.add("D is a category", verify_semicat(D).ok)
    fr = verify_semifunctor(G, check_identities=True)
    rep.add("G functorial", fr.ok, fr.failures()[0].witness if not fr.ok else None)
    bad = [f"{y}|{x}" for (y, x), m in maps.items() if not (m.rows == m.cols and m.is_injective())]
    rep.add("G bijective on every hom space", not bad, bad[:1] or None)
    rep.info["dims"] = {f"{y}|{x}": d for (y, x), d in D.homdim.items()}
    return DCategory(D, incl, G, rep)
