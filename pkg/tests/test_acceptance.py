"""Acceptance criteria, each checked exactly and summarised as one PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) or through pytest; in the
latter case the summary lines appear at the end of the session.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from itertools import combinations, permutations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from partialhopf import (  # noqa: E402
    QQ,
    build_dual_group_hopf,
    build_group_algebra,
    build_sweedler,
    builtin_group,
    cycle_category,
    extract_subgroup_data,
    verify_hopf,
    verify_partial_action,
)
from partialhopf.globalization import (  # noqa: E402
    dual_point_globalization,
    full_globalization_report,
    globalization_iso,
    standard_globalization,
)
from partialhopf.grading import (  # noqa: E402
    build_uniform_dual_action,
    classify_dual_on_point,
    classify_group_algebra_on_point,
    point_action,
    sweedler_exhaustiveness,
    sweedler_point_action,
)
from partialhopf.group import cyclic_group  # noqa: E402
from partialhopf.morita import build_D_category, paper_morita_context  # noqa: E402
from partialhopf.partial import (  # noqa: E402
    from_partial_group_action,
    is_global,
    restrict_global,
    swap_example,
    tensor_actions,
    to_partial_group_action,
    verify_global_action,
    verify_partial_group_action,
)
from partialhopf.smash import global_smash, hstar_action, matrix_smash_iso, partial_smash, embed_smash  # noqa: E402

RESULTS: dict = {}
TIME_LIMIT = 10.0

CLASSIFY_GROUPS = {
    "C2": (cyclic_group(2), oracles.cyclic(2), 2),
    "C3": (cyclic_group(3), oracles.cyclic(3), 2),
    "C4": (cyclic_group(4), oracles.cyclic(4), 3),
    "C2xC2": (builtin_group("C2xC2"), oracles.klein(), 5),
    "S3": (builtin_group("S3"), oracles.sym3(), 6),
}
SWEEDLER_ALPHAS = [Fraction(0), Fraction(1), Fraction(-3), Fraction(7, 2)]
CYCLE_NS = [2, 3, 5]


class Criterion:
    """Collects named sub-checks for one criterion."""

    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title
        self.failed: list = []
        self.count = 0
        self.t0 = time.perf_counter()

    def check(self, ok: bool, what: str):
        self.count += 1
        if not ok:
            self.failed.append(what)

    def finish(self) -> bool:
        elapsed = time.perf_counter() - self.t0
        self.check(elapsed < TIME_LIMIT, f"ran in {elapsed:.1f}s, limit {TIME_LIMIT}s")
        ok = not self.failed
        status = "PASS" if ok else "FAIL"
        line = f"{status} criterion {self.number}: {self.title} ({self.count} checks, {elapsed:.2f}s)"
        if self.failed:
            line += " failing: " + "; ".join(self.failed[:5])
        RESULTS[self.number] = line
        print(line)
        return ok


def _support_names(pa):
    return frozenset(pa.hopf.group.names[i] for i, m in enumerate(pa.act[("*", "*")]) if m.entries[0][0] != 0)


def _oracle_names(o_els, pkg_group):
    """Match oracle element labels to package names through an isomorphism found by brute force."""
    els, mul, e = o_els
    n = len(els)
    for perm in permutations(range(n)):
        if perm[els.index(e)] != pkg_group.identity:
            continue
        ok = all(
            perm[els.index(mul(a, b))] == pkg_group.mul(perm[els.index(a)], perm[els.index(b)]) for a in els for b in els
        )
        if ok:
            return {a: pkg_group.names[perm[els.index(a)]] for a in els}
    raise AssertionError("no isomorphism between oracle and package groups")


# ---------------------------------------------------------------------------
# action families shared by criteria 5, 7 and 9


def criterion2_actions():
    out = []
    for name, (g, _, _) in CLASSIFY_GROUPS.items():
        out += [(f"k^{name} {pa.meta['label']}", pa) for pa in classify_dual_on_point(g)]
        out += [(f"k{name} {pa.meta['label']}", pa) for pa in classify_group_algebra_on_point(g)]
    return out


def criterion3_actions():
    out = [("H4 eps", sweedler_point_action(None))]
    out += [(f"H4 alpha={a}", sweedler_point_action(a)) for a in SWEEDLER_ALPHAS]
    return out


def criterion4_actions():
    cat = cycle_category(QQ)
    return [(f"cycle C{n}", build_uniform_dual_action(cat, cyclic_group(n))) for n in CYCLE_NS]


def all_actions():
    return criterion2_actions() + criterion3_actions() + criterion4_actions()


# ---------------------------------------------------------------------------
# criteria


def criterion_1() -> bool:
    c = Criterion(1, "Hopf verifier passes the examples and catches 20 mutations each")
    hs = [(f"kC{n}", build_group_algebra(cyclic_group(n))) for n in range(1, 7)]
    hs += [(f"k^C{n}", build_dual_group_hopf(cyclic_group(n))) for n in range(1, 7)]
    s3 = builtin_group("S3")
    hs += [("kS3", build_group_algebra(s3)), ("k^S3", build_dual_group_hopf(s3)), ("H4", build_sweedler())]
    rng = random.Random(20240601)
    for name, h in hs:
        c.check(verify_hopf(h).ok, f"{name} passes")
        addrs = h.entries()
        for t in range(20):
            addr = rng.choice(addrs)
            delta = rng.choice([Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-5, 3)])
            mutated = h.with_entry(addr, h.get_entry(addr) + delta)
            c.check(not verify_hopf(mutated).ok, f"{name} mutation {t} at {addr} undetected")
    return c.finish()


def criterion_2() -> bool:
    c = Criterion(2, "classification counts 2,2,3,5,6 with brute-force support oracle")
    for name, (g, og, expected) in CLASSIFY_GROUPS.items():
        els, mul, e = og
        label = _oracle_names(og, g)
        subgroups = {frozenset(label[a] for a in s) for s in oracles.brute_subgroups(els, mul, e)}
        c.check(len(subgroups) == expected, f"{name}: brute-force subgroup count {len(subgroups)}")
        for dual, classify in ((True, classify_dual_on_point), (False, classify_group_algebra_on_point)):
            acts = classify(g)
            kind = "k^G" if dual else "kG"
            c.check(len(acts) == expected, f"{name} {kind}: {len(acts)} actions")
            c.check(all(verify_partial_action(pa).ok for pa in acts), f"{name} {kind}: verifier")
            supports = {_support_names(pa) for pa in acts}
            c.check(supports == subgroups, f"{name} {kind}: supports are the subgroups")
            sols = oracles.constant_on_support_solutions(els, mul, e, dual)
            oracle_supports = {frozenset(label[a] for a in s) for s in sols}
            c.check(oracle_supports == supports, f"{name} {kind}: oracle finds extra or missing supports")
            # the package verifier agrees with the oracle on every support subset
            h = acts[0].hopf
            for r in range(1, len(els) + 1):
                for sub in combinations(range(len(els)), r):
                    v = QQ(1) / QQ(r) if dual else QQ.one
                    vals = [v if i in sub else QQ.zero for i in range(h.dim)]
                    ok = verify_partial_action(point_action(h, vals)).ok
                    names = frozenset(g.names[i] for i in sub)
                    c.check(ok == (names in subgroups), f"{name} {kind}: verifier disagrees on support {sorted(names)}")
    return c.finish()


def criterion_3() -> bool:
    c = Criterion(3, "Sweedler family, counit, and failing candidates")
    structure = oracles.sweedler_structure()
    h = build_sweedler()
    for a in SWEEDLER_ALPHAS:
        lam = [Fraction(1, 2), Fraction(1, 2), Fraction(0), a]
        pa = sweedler_point_action(a)
        c.check(verify_partial_action(pa).ok, f"alpha={a} rejected")
        c.check(oracles.hopf_point_ok(structure, lam), f"oracle rejects alpha={a}")
        c.check(not is_global(pa), f"alpha={a} reported global")
    eps = sweedler_point_action(None)
    c.check(verify_partial_action(eps).ok and is_global(eps), "counit action")
    c.check(oracles.hopf_point_ok(structure, [1, 0, 0, 0]), "oracle rejects counit")
    half = Fraction(1, 2)
    bad = [
        [half, half, Fraction(1), Fraction(0)],
        [half, half, Fraction(-2), Fraction(3)],
        [Fraction(1, 3), Fraction(2, 3), Fraction(0), Fraction(0)],
        [Fraction(2, 3), Fraction(1, 3), Fraction(0), Fraction(1)],
        [Fraction(1), Fraction(0), Fraction(0), Fraction(1)],
        [Fraction(1), Fraction(0), Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(0), Fraction(0)],
    ]
    for lam in bad:
        c.check(not verify_partial_action(point_action(h, lam)).ok, f"candidate {lam} accepted")
        c.check(not oracles.hopf_point_ok(structure, lam), f"oracle accepts candidate {lam}")
    ex = sweedler_exhaustiveness()
    c.check(ex.ok and sorted(ex.info["solutions"]) == ["counit", "family"], "polynomial system has other solutions")
    return c.finish()


def criterion_4() -> bool:
    c = Criterion(4, "uniform 1/n action on the 3-cycle category")
    for label, pa in criterion4_actions():
        n = pa.hopf.dim
        c.check(verify_partial_action(pa).ok, f"{label} rejected")
        c.check(not is_global(pa), f"{label} reported global")
        sd, rep = extract_subgroup_data(pa)
        c.check(sd is not None and rep.ok, f"{label}: no subgroup data")
        if sd is not None:
            c.check(all(s.order == n for s in sd.subgroups.values()), f"{label}: G_x is not C_{n}")
            c.check(set(sd.subgroups) == {"1", "2", "3"}, f"{label}: objects")
    return c.finish()


def criterion_5() -> bool:
    c = Criterion(5, "globalization: closed-form k^Cn model, counit member, (a)-(e) everywhere")
    for n in range(2, 7):
        g = cyclic_group(n)
        acts = classify_dual_on_point(g)
        full = next(pa for pa in acts if pa.meta["subgroup"].order == n)
        eps = next(pa for pa in acts if pa.meta["subgroup"].order == 1)
        gl = standard_globalization(full)
        c.check(gl.B.dim("*", "*") == n, f"C{n}: dim B = {gl.B.dim('*', '*')}")
        model = dual_point_globalization(g, full.meta["subgroup"], full)
        c.check(full_globalization_report(model).ok, f"C{n}: closed-form model is not a globalization")
        c.check(all(v == Fraction(1, n) for v in model.F.maps[("*", "*")].column(0)), f"C{n}: F(1) != (1/n) sum d_g")
        Phi, _, rep = globalization_iso(gl, model)
        c.check(Phi is not None and rep.ok, f"C{n}: no isomorphism to the closed-form model")
        ge = standard_globalization(eps)
        c.check(ge.B.dim("*", "*") == 1, f"C{n}: counit member dim B = {ge.B.dim('*', '*')}")
    for label, pa in all_actions():
        c.check(full_globalization_report(standard_globalization(pa)).ok, f"{label}: (a)-(e)")
    return c.finish()


def criterion_6() -> bool:
    c = Criterion(6, "smash product of the n=2 cycle example")
    pa = build_uniform_dual_action(cycle_category(QQ), cyclic_group(2))
    ps = partial_smash(pa)
    derived = oracles.cycle_smash_dims(2)
    for (y, x), d in derived.items():
        c.check(ps.cat.dim(y, x) == d, f"hom {y}|{x}: dim {ps.cat.dim(y, x)} != {d}")
    nonzero = [k for k in ps.cat.pairs() if pa.cat.dim(*k)]
    c.check(all(ps.cat.dim(*k) == 1 for k in nonzero), "a nonzero hom space is not one-dimensional")
    from partialhopf.category import matrix_algebra

    alg, _, _ = matrix_algebra(ps.cat)
    c.check(alg.dim == 6, f"a(A#H) has dim {alg.dim}")
    mi = matrix_smash_iso(pa)
    c.check(mi.report.ok and mi.psi is not None, "matrix smash isomorphism")
    c.check(verify_global_action(hstar_action(ps)).ok, "H* action on the smash")
    return c.finish()


def criterion_7() -> bool:
    c = Criterion(7, "Morita contexts at every object and the D category")
    for label, pa in all_actions():
        g = standard_globalization(pa)
        ps = partial_smash(pa)
        bh = global_smash(g.action)
        emb, er = embed_smash(ps, g, bh)
        c.check(er.ok, f"{label}: embedding")
        contexts = {}
        for x in pa.cat.objects:
            sc = paper_morita_context(ps, g, x, bh, emb)
            contexts[x] = sc
            c.check(sc.report.ok, f"{label} [{x}]: context")
            c.check(sc.report.info["tau_surjective"] and sc.report.info["sigma_surjective"], f"{label} [{x}]: surjectivity")
        d = build_D_category(ps, g, contexts, bh)
        c.check(d.report.ok, f"{label}: D category")
        c.check(all(m.is_injective() and m.rank() == m.rows for m in d.G.maps.values()), f"{label}: G not bijective")
    return c.finish()


def criterion_8() -> bool:
    c = Criterion(8, "round trips: partial group actions, restriction, tensor products")
    kg_examples = [(label, pa) for label, pa in criterion2_actions() if pa.hopf.kind == "group_algebra"]
    ga, e = swap_example(QQ)
    kg_examples.append(("swap", ga))
    for label, pa in kg_examples:
        pga = to_partial_group_action(pa)
        c.check(verify_partial_group_action(pga).ok, f"{label}: partial group action axioms")
        back = from_partial_group_action(pga, pa.hopf)
        c.check(all(back.act[k] == pa.act[k] for k in pa.cat.pairs()), f"{label}: matrices changed")
    r = restrict_global(ga, e)
    lam = [m.entries[0][0] for m in r.act[("*", "*")]]
    c.check(lam == [1, 0], f"restricted swap lambda = {lam}")
    c.check(verify_partial_action(r).ok and not is_global(r), "restricted swap verifier")
    kc2 = classify_group_algebra_on_point(cyclic_group(2))
    s3 = classify_group_algebra_on_point(builtin_group("S3"))
    pairs = [("kC2 point x swap", kc2[0], ga), ("kS3 <(12)> x <(123)>", s3[1], s3[-2])]
    for label, a, b in pairs:
        c.check(a.hopf.dim == b.hopf.dim, f"{label}: Hopf algebras differ")
        t = tensor_actions(a, b)
        c.check(verify_partial_action(t).ok, f"{label}: tensor action rejected")
    return c.finish()


def criterion_9() -> bool:
    c = Criterion(9, "derived identity holds on every passing action")
    ga, e = swap_example(QQ)
    extra = [("swap", ga), ("restricted swap", restrict_global(ga, e))]
    n = 0
    for label, pa in all_actions() + extra:
        rep = verify_partial_action(pa)
        if rep.check("unit").passed and rep.check("composition").passed and rep.check("iterated_left").passed:
            n += 1
            c.check(rep.check("derived").passed, f"{label}: derived identity fails")
    c.check(n == len(all_actions()) + 2, "an action from the families did not pass")
    return c.finish()


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("fn", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 10)])
def test_criterion(fn):
    assert fn(), RESULTS.get(CRITERIA.index(fn) + 1)


if __name__ == "__main__":
    results = [fn() for fn in CRITERIA]
    sys.exit(0 if all(results) else 1)
