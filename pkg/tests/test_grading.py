from fractions import Fraction
from itertools import product

import pytest
import sympy

import oracles
from partialhopf.category import cycle_category, one_object_category
from partialhopf.errors import StructuralError, VerificationError
from partialhopf.field import QQ
from partialhopf.grading import (
    build_from_subgroup_data,
    build_uniform_dual_action,
    check_subgroup_data,
    check_unidim_equations,
    classify_dual_on_point,
    classify_group_algebra_on_point,
    classify_sweedler_on_point,
    exhaustive_point_check,
    extract_subgroup_data,
    solve_point_actions,
    subgroup_data_for,
    sweedler_exhaustiveness,
)
from partialhopf.group import builtin_group, cyclic_group, subgroup
from partialhopf.hopf import build_dual_group_hopf, build_group_algebra
from partialhopf.partial import verify_partial_action


@pytest.mark.parametrize("name,count", [("C2", 2), ("C3", 2), ("C4", 3), ("C2xC2", 5), ("S3", 6), ("C6", 4)])
def test_classification_counts(name, count):
    g = builtin_group(name)
    for acts in (classify_dual_on_point(g), classify_group_algebra_on_point(g)):
        assert len(acts) == count
        assert exhaustive_point_check(acts).ok


@pytest.mark.parametrize("name", ["C2", "C3", "C4", "C2xC2", "S3"])
@pytest.mark.parametrize("dual", [True, False])
def test_full_polynomial_system_has_only_subgroup_solutions(name, dual):
    """Solving every equation symbolically, without assuming constancy on the support."""
    g = builtin_group(name)
    h = build_dual_group_hopf(g) if dual else build_group_algebra(g)
    sols = solve_point_actions(h)
    lam = sympy.symbols(f"l0:{h.dim}")
    found = set()
    for s in sols:
        vals = [s.get(v, v) for v in lam]
        assert all(v.is_Rational for v in vals), vals
        supp = frozenset(i for i, v in enumerate(vals) if v != 0)
        expected = sympy.Rational(1, len(supp)) if dual else 1
        assert all(vals[i] == expected for i in supp)
        found.add(supp)
    assert found == {frozenset(s.elements) for s in (a.meta["subgroup"] for a in classify_dual_on_point(g))}


def test_support_oracle_rejects_non_subgroups():
    els, mul, e = oracles.sym3()
    sols = oracles.constant_on_support_solutions(els, mul, e, dual=True)
    assert len(sols) == 6
    assert all(e in s for s in sols)


def test_sweedler_classification():
    acts = classify_sweedler_on_point([Fraction(0), Fraction(7, 2)])
    assert [a.meta.get("label") for a in acts] == ["epsilon", "alpha=0", "alpha=7/2"]
    assert all(verify_partial_action(a).ok for a in acts)
    rep = sweedler_exhaustiveness()
    assert rep.ok and sorted(rep.info["solutions"]) == ["counit", "family"]


@pytest.mark.parametrize("n", [2, 3, 5])
def test_extract_uniform(n):
    pa = build_uniform_dual_action(cycle_category(QQ), cyclic_group(n))
    sd, rep = extract_subgroup_data(pa)
    assert rep.ok
    assert all(s.order == n for s in sd.subgroups.values())
    assert check_unidim_equations(pa).ok


def _cycle_data(g, k_elements, t):
    cat = cycle_category(QQ)
    subs = {x: k_elements for x in cat.objects}
    return cat, subgroup_data_for(g, cat, subs, t)


def test_subgroup_data_round_trip_cyclic():
    g = cyclic_group(3)
    names = g.names
    t = {("2", "1"): names[1], ("3", "2"): names[2], ("1", "3"): names[0]}
    cat, sd = _cycle_data(g, [names[0]], t)
    assert check_subgroup_data(cat, sd).ok
    pa = build_from_subgroup_data(cat, sd)
    assert verify_partial_action(pa).ok
    back, rep = extract_subgroup_data(pa)
    assert rep.ok
    assert back.t == sd.t
    assert {x: s.elements for x, s in back.subgroups.items()} == {x: s.elements for x, s in sd.subgroups.items()}


def test_every_consistent_choice_verifies():
    """All subgroup data on the cycle category over C3, checked by the action verifier."""
    g = cyclic_group(3)
    cat = cycle_category(QQ)
    for k in g.subgroups:
        for t21, t32, t13 in product(range(g.order), repeat=3):
            sd = subgroup_data_for(g, cat, {x: k for x in cat.objects}, {("2", "1"): g.names[t21], ("3", "2"): g.names[t32], ("1", "3"): g.names[t13]})
            pa = build_from_subgroup_data(cat, sd)
            assert verify_partial_action(pa).ok


def test_nonnormal_representative_rejected():
    g = builtin_group("S3")
    k = next(s for s in g.subgroups if s.order == 2)
    outside = next(a for a in range(g.order) if a not in k.elements)
    cat = cycle_category(QQ)
    t = {("2", "1"): g.names[outside], ("3", "2"): g.names[g.identity], ("1", "3"): g.names[g.identity]}
    sd = subgroup_data_for(g, cat, {x: k for x in cat.objects}, t)
    assert not check_subgroup_data(cat, sd).check("(ii) G_y = t G_x t^-1").passed
    with pytest.raises(VerificationError):
        build_from_subgroup_data(cat, sd)


def test_missing_representative():
    g = cyclic_group(2)
    cat = cycle_category(QQ)
    sd = subgroup_data_for(g, cat, {x: subgroup(g, [0]) for x in cat.objects}, {})
    with pytest.raises(StructuralError):
        check_subgroup_data(cat, sd)


def test_extract_rejects_non_scalar_and_wrong_kind():
    pa = build_uniform_dual_action(one_object_category(QQ, 2), cyclic_group(2))
    with pytest.raises(StructuralError):
        extract_subgroup_data(pa)
    kg = classify_group_algebra_on_point(cyclic_group(2))[0]
    with pytest.raises(StructuralError):
        extract_subgroup_data(kg)
