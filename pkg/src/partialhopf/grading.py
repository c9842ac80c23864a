"""Partial actions of group algebras and their duals on Schurian categories and on ``k``.

A partial ``k^G`` action on a Schurian category whose ``lambda`` is induced by
``k`` is the same thing as a choice of subgroups ``G_x`` and coset
representatives ``t_yx``; :func:`build_from_subgroup_data` and
:func:`extract_subgroup_data` go back and forth.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping

from .category import LinSemicat, one_object_category
from .errors import StructuralError, VerificationError
from .field import QQ, Field
from .group import FiniteGroup, Subgroup, conjugate_subgroup, enumerate_subgroups
from .hopf import HopfAlgebra, build_dual_group_hopf, build_group_algebra, build_sweedler
from .linalg import LinMap
from .partial import HopfAction, lambda_of, trivial_action, verify_partial_action
from .report import Report


def build_uniform_dual_action(cat: LinSemicat, g: FiniteGroup, field: Field | None = None) -> HopfAction:
    """``p_g . f = f / |G|`` on every hom space."""
    field = field or cat.field
    field.require_invertible(g.order)
    h = build_dual_group_hopf(g, field)
    c = field(1) / field(g.order)
    act = {}
    for y, x in cat.pairs():
        m = LinMap.scalar(field, cat.dim(y, x), c)
        act[(y, x)] = [m] * g.order
    return HopfAction(cat, h, act, {"label": "uniform"})


@dataclass
class SubgroupData:
    """``G_x`` per object and a representative ``t_yx`` per nonzero off-diagonal hom space."""

    group: FiniteGroup
    subgroups: dict
    t: dict

    def rep(self, y, x) -> int:
        return self.group.identity if y == x else self.t[(y, x)]

    def to_json(self) -> dict:
        names = self.group.names
        return {
            "subgroups": {x: [names[i] for i in s.elements] for x, s in self.subgroups.items()},
            "t": {f"{y}|{x}": names[v] for (y, x), v in self.t.items()},
        }


def coset(g: FiniteGroup, t: int, h: Subgroup) -> frozenset:
    return frozenset(g.mul(t, a) for a in h.elements)


def check_subgroup_data(cat: LinSemicat, sd: SubgroupData) -> Report:
    """Conditions (i) subgroups, (ii) conjugacy along arrows and (iii) coset compatibility.

    In (iii) the representative of a diagonal pair is taken to be ``e``.
    """
    g = sd.group
    rep = Report("subgroup data")
    rep.add("(i) subgroups", all(isinstance(s, Subgroup) and s.parent == g for s in sd.subgroups.values()))
    w = None
    for y, x in cat.pairs():
        if x == y or cat.dim(y, x) == 0:
            continue
        if (y, x) not in sd.t:
            raise StructuralError(f"no representative for the nonzero hom space {y}|{x}")
        if conjugate_subgroup(sd.subgroups[x], sd.t[(y, x)]).elements != sd.subgroups[y].elements:
            w = w or {"pair": [y, x]}
    rep.add("(ii) G_y = t G_x t^-1", w is None, w)
    w = None
    for z, y, x in cat.triples():
        if not cat.tensor(z, y, x).terms:
            continue
        gx = sd.subgroups[x]
        lhs = coset(g, g.mul(sd.rep(z, y), sd.rep(y, x)), gx)
        if lhs != coset(g, sd.rep(z, x), gx):
            w = w or {"objects": [z, y, x]}
    rep.add("(iii) t_zy t_yx G_x = t_zx G_x", w is None, w)
    return rep


def build_from_subgroup_data(cat: LinSemicat, sd: SubgroupData, field: Field | None = None) -> HopfAction:
    """``p_g`` acts on ``_yC_x`` by ``1/|G_x|`` if ``g`` is in ``t_yx G_x`` and by 0 otherwise."""
    if not cat.is_schurian():
        raise StructuralError("subgroup data describe actions on Schurian categories only")
    field = field or cat.field
    g = sd.group
    rep = check_subgroup_data(cat, sd)
    if not rep.ok:
        raise VerificationError("inconsistent subgroup data", rep.failures()[0].witness)
    h = build_dual_group_hopf(g, field)
    z = field.zero
    act = {}
    for y, x in cat.pairs():
        d = cat.dim(y, x)
        if d == 0:
            continue
        gx = sd.subgroups[x]
        field.require_invertible(gx.order, "|G_x|")
        val = field(1) / field(gx.order)
        supp = coset(g, sd.rep(y, x), gx)
        act[(y, x)] = [LinMap.scalar(field, 1, val if a in supp else z) for a in range(g.order)]
    pa = HopfAction(cat, h, act, {"label": "subgroup data", "subgroup_data": sd.to_json()})
    return pa


def extract_subgroup_data(pa: HopfAction, group: FiniteGroup | None = None):
    """Read ``G_x`` and ``t_yx`` off a partial ``k^G`` action; returns ``(data, report)``.

    ``t_yx`` is the least element index in the support of ``p_. `` on ``_yC_x``.
    """
    h = pa.hopf
    g = group or h.group
    if h.kind != "dual_group" or g is None:
        raise StructuralError("subgroup data are read from actions of k^G")
    cat = pa.cat
    if not cat.is_schurian():
        raise StructuralError("subgroup data describe actions on Schurian categories only")
    field = pa.field
    rep = Report("extracted subgroup data")
    lam = lambda_of(pa)
    rep.add("lambda induced by k", lam.induced_by_k)
    if not lam.induced_by_k:
        raise VerificationError("lambda is not induced by k", {"objects": [x for x, v in lam.induced.items() if not v]})
    subs = {}
    w_sub = w_val = None
    for x in cat.objects:
        sc = lam.scalars[x]
        supp = tuple(a for a in range(g.order) if sc[a] != 0)
        try:
            s = Subgroup(g, supp)
        except VerificationError as e:
            w_sub = w_sub or {"object": x, "support": list(supp), "reason": str(e)}
            continue
        subs[x] = s
        val = field(1) / field(len(supp))
        if any(sc[a] != val for a in supp):
            w_val = w_val or {"object": x}
    rep.add("(i) supports are subgroups", w_sub is None, w_sub)
    if w_sub:
        return None, rep
    t = {}
    w_cos = None
    for y, x in cat.pairs():
        if x == y or cat.dim(y, x) == 0:
            continue
        vals = []
        for a, m in enumerate(pa.act[(y, x)]):
            s = m.scalar_value()
            if s is None:
                raise VerificationError("action matrix is not scalar", {"pair": [y, x], "h": a})
            vals.append(s)
        supp = frozenset(a for a, v in enumerate(vals) if v != 0)
        if not supp:
            w_cos = w_cos or {"pair": [y, x], "support": []}
            continue
        r = min(supp)
        t[(y, x)] = r
        if supp != coset(g, r, subs[x]):
            w_cos = w_cos or {"pair": [y, x], "support": sorted(supp)}
        val = field(1) / field(subs[x].order)
        if any(vals[a] != val for a in supp):
            w_val = w_val or {"pair": [y, x]}
    rep.add("supports are cosets t G_x", w_cos is None, w_cos)
    rep.add("values 1/|G_x| on supports", w_val is None, w_val)
    if w_cos:
        return None, rep
    sd = SubgroupData(g, subs, t)
    rep.extend(check_subgroup_data(cat, sd))
    return sd, rep


def check_unidim_equations(pa: HopfAction) -> Report:
    """The identities satisfied by a partial ``k^G`` action with ``lambda`` induced by ``k``.

    ``sum_g pi_g = id``; ``pi_g = sum_l lambda^y_{g l^-1} pi_l = sum_l lambda^x_{l^-1 g} pi_l``;
    ``pi_g pi_h = lambda^y_{g h^-1} pi_h = lambda^x_{h^-1 g} pi_h``.
    """
    g = pa.hopf.group
    cat = pa.cat
    lam = lambda_of(pa)
    if not lam.induced_by_k:
        raise VerificationError("lambda is not induced by k")
    n = g.order
    rep = Report("scalar identities")
    w1 = w2 = w3 = None
    for y, x in cat.pairs():
        d = cat.dim(y, x)
        if d == 0:
            continue
        P = pa.act[(y, x)]
        ly, lx = lam.scalars[y], lam.scalars[x]
        tot = LinMap.zero(pa.field, d, d)
        for m in P:
            tot = tot + m
        if tot != LinMap.identity(pa.field, d):
            w1 = w1 or {"pair": [y, x]}
        for a in range(n):
            s1 = LinMap.zero(pa.field, d, d)
            s2 = LinMap.zero(pa.field, d, d)
            for l in range(n):
                s1 = s1 + P[l].scale(ly[g.mul(a, g.inv(l))])
                s2 = s2 + P[l].scale(lx[g.mul(g.inv(l), a)])
            if P[a] != s1 or P[a] != s2:
                w2 = w2 or {"pair": [y, x], "g": a}
            for b in range(n):
                pp = P[a] @ P[b]
                if pp != P[b].scale(ly[g.mul(a, g.inv(b))]) or pp != P[b].scale(lx[g.mul(g.inv(b), a)]):
                    w3 = w3 or {"pair": [y, x], "g": a, "h": b}
    rep.add("sum of pi_g is the identity", w1 is None, w1)
    rep.add("pi_g via lambda", w2 is None, w2)
    rep.add("pi_g pi_h via lambda", w3 is None, w3)
    return rep


# ---------------------------------------------------------------------------
# actions on the one-object category k


def point_action(hopf: HopfAlgebra, values, label: str = "") -> HopfAction:
    """Partial action on ``k`` given by ``lambda(b_i) = values[i]``."""
    f = hopf.field
    cat = one_object_category(f)
    return HopfAction(cat, hopf, {("*", "*"): [LinMap.scalar(f, 1, v) for v in values]}, {"label": label})


def classify_dual_on_point(g: FiniteGroup, field: Field = QQ) -> list:
    """One partial ``k^G`` action on ``k`` per subgroup ``K``: ``lambda(p_g) = 1/|K|`` on ``K``."""
    h = build_dual_group_hopf(g, field)
    out = []
    for s in enumerate_subgroups(g):
        field.require_invertible(s.order, "|K|")
        v = field(1) / field(s.order)
        vals = [v if a in s else field.zero for a in range(g.order)]
        pa = point_action(h, vals, f"K={{{','.join(s.names())}}}")
        pa.meta["subgroup"] = s
        out.append(pa)
    return out


def classify_group_algebra_on_point(g: FiniteGroup, field: Field = QQ) -> list:
    """One partial ``kG`` action on ``k`` per subgroup ``K``: ``lambda(g) = 1`` on ``K``."""
    h = build_group_algebra(g, field)
    out = []
    for s in enumerate_subgroups(g):
        vals = [field.one if a in s else field.zero for a in range(g.order)]
        pa = point_action(h, vals, f"K={{{','.join(s.names())}}}")
        pa.meta["subgroup"] = s
        out.append(pa)
    return out


def sweedler_point_action(alpha=None, field: Field = QQ) -> HopfAction:
    """``alpha=None`` gives the counit; otherwise ``lambda = (1/2, 1/2, 0, alpha)`` on ``e1, e2, h1, h2``."""
    h = build_sweedler(field)
    if alpha is None:
        pa = trivial_action(one_object_category(field), h)
        return pa
    half = field(1) / field(2)
    return point_action(h, [half, half, field.zero, field(alpha)], f"alpha={field.format(field(alpha))}")


def classify_sweedler_on_point(alphas=(0, 1, -1, 2), field: Field = QQ) -> list:
    """The counit and a sample of the one-parameter family."""
    return [sweedler_point_action(None, field)] + [sweedler_point_action(a, field) for a in alphas]


def point_equations(hopf: HopfAlgebra):
    """Polynomial conditions on ``lambda_0..lambda_{n-1}`` for a partial action on ``k``.

    Returns ``(symbols, equations)`` with sympy expressions that must vanish.
    Only valid over the rationals.
    """
    import sympy

    n = hopf.dim
    lam = sympy.symbols(f"l0:{n}")
    R = sympy.Rational

    def q(c):
        return R(c.numerator, c.denominator)

    def lam_of(vec):
        return sum((q(c) * lam[i] for i, c in enumerate(vec) if c != 0), sympy.Integer(0))

    eqs = [lam_of(hopf.unit) - 1]
    for l in range(n):
        eqs.append(lam[l] - sum((q(c) * lam[j] * lam[k] for (j, k), c in hopf.comult[l].items()), sympy.Integer(0)))
    for l, m in product(range(n), repeat=2):
        left = sum((q(c) * lam[j] * lam_of(hopf.basis_product(k, m)) for (j, k), c in hopf.comult[l].items()), sympy.Integer(0))
        right = sum((q(c) * lam_of(hopf.basis_product(j, m)) * lam[k] for (j, k), c in hopf.comult[l].items()), sympy.Integer(0))
        eqs.append(lam[l] * lam[m] - left)
        eqs.append(lam[l] * lam[m] - right)
    eqs = [sympy.expand(e) for e in eqs]
    return lam, [e for e in eqs if e != 0]


def solve_point_actions(hopf: HopfAlgebra) -> list:
    """All solutions of :func:`point_equations`, as sympy dicts."""
    import sympy

    if hopf.field != QQ:
        raise StructuralError("symbolic solving is done over the rationals")
    lam, eqs = point_equations(hopf)
    return sympy.solve(eqs, lam, dict=True)


def sweedler_exhaustiveness(field: Field = QQ) -> Report:
    """Every solution on ``k`` is the counit or ``(1/2, 1/2, 0, alpha)``."""
    import sympy

    h = build_sweedler(field)
    sols = solve_point_actions(h)
    lam = sympy.symbols("l0:4")
    rep = Report("Sweedler actions on k")
    shapes = []
    ok = bool(sols)
    for s in sols:
        vals = [s.get(v, v) for v in lam]
        if vals == [1, 0, 0, 0]:
            shapes.append("counit")
        elif vals[:3] == [sympy.Rational(1, 2), sympy.Rational(1, 2), 0] and vals[3] == lam[3]:
            shapes.append("family")
        else:
            ok = False
            shapes.append(str(vals))
    shapes.sort()
    rep.add("solutions match the two shapes", ok and shapes == ["counit", "family"], {"solutions": shapes})
    rep.info["solutions"] = shapes
    return rep


def exhaustive_point_check(actions: list) -> Report:
    """Each listed action passes and no two coincide."""
    rep = Report("point actions")
    seen = set()
    for pa in actions:
        r = verify_partial_action(pa)
        key = tuple(m.entries[0][0] for m in pa.act[("*", "*")])
        rep.add(pa.meta.get("label", "action"), r.ok and key not in seen)
        seen.add(key)
    return rep


def subgroup_data_for(g: FiniteGroup, cat: LinSemicat, subgroups: Mapping, t: Mapping) -> SubgroupData:
    subs = {x: (s if isinstance(s, Subgroup) else Subgroup(g, tuple(g.index(a) for a in s))) for x, s in subgroups.items()}
    return SubgroupData(g, subs, {k: g.index(v) for k, v in t.items()})
