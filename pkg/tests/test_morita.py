from fractions import Fraction

import pytest

from partialhopf.algebra import Algebra
from partialhopf.category import cycle_category
from partialhopf.errors import StructuralError
from partialhopf.field import QQ
from partialhopf.globalization import standard_globalization
from partialhopf.grading import build_uniform_dual_action, classify_group_algebra_on_point, sweedler_point_action
from partialhopf.group import builtin_group, cyclic_group
from partialhopf.linalg import Bilinear, LinMap, kernel_basis
from partialhopf.morita import (
    MoritaContext,
    build_D_category,
    linking_algebra,
    paper_morita_context,
    trivial_context,
    verify_linking,
    verify_morita_context,
    zero_context,
)
from partialhopf.partial import swap_example
from partialhopf.smash import partial_smash

# ---------------------------------------------------------------------------
# k and M_2(k) with M = row vectors and N = column vectors, built from matrix products


def _mat(rows, cols, i):
    m = [[0] * cols for _ in range(rows)]
    m[i // cols][i % cols] = 1
    return m


def _mm(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _flat(m):
    return tuple(QQ(x) for r in m for x in r)


def _bil(shape_a, shape_b, p):
    (ra, ca), (rb, cb) = shape_a, shape_b
    return Bilinear.from_function(QQ, ra * ca, rb * cb, p, lambda i, j: _flat(_mm(_mat(ra, ca, i), _mat(rb, cb, j))))


def matrix_context(scale_sigma=1):
    k = Algebra(QQ, 1, _bil((1, 1), (1, 1), 1), (QQ.one,), "k")
    m2 = Algebra(QQ, 4, _bil((2, 2), (2, 2), 4), (1, 0, 0, 1), "M2")
    sigma = _bil((2, 1), (1, 2), 4)
    if scale_sigma != 1:
        sigma = Bilinear(QQ, sigma.m, sigma.n, sigma.p, {key: tuple((i, c * scale_sigma) for i, c in row) for key, row in sigma.terms.items()})
    return MoritaContext(
        k, m2, 2, 2,
        _bil((1, 1), (1, 2), 2),
        _bil((1, 2), (2, 2), 2),
        _bil((2, 2), (2, 1), 2),
        _bil((2, 1), (1, 1), 2),
        _bil((1, 2), (2, 1), 1),
        sigma,
    )


def test_matrix_context():
    ctx = matrix_context()
    rep = verify_morita_context(ctx)
    assert rep.ok
    assert rep.info["tau_surjective"] and rep.info["sigma_surjective"]
    assert rep.info["tau_injective"] and rep.info["sigma_injective"]
    lk = linking_algebra(ctx)
    assert lk.dim == 9
    assert verify_linking(ctx).ok
    # the linking algebra of k and M_2(k) is M_3(k), whose center is the scalars
    rows = []
    for i in range(9):
        bi = lk.b(i)
        cols = [tuple(a - b for a, b in zip(lk.mul(lk.b(j), bi), lk.mul(bi, lk.b(j)))) for j in range(9)]
        rows.append(LinMap.from_columns(QQ, 9, cols))
    stacked = LinMap(QQ, [r for m in rows for r in m.entries])
    assert len(kernel_basis(stacked)) == 1


def test_scaled_sigma_breaks_associativity():
    rep = verify_morita_context(matrix_context(scale_sigma=2))
    assert not rep.check("m sigma(n m') = tau(m n) m'").passed
    assert not rep.check("n tau(m n') = sigma(n m) n'").passed


def test_trivial_and_zero_contexts():
    alg = matrix_context().B
    rep = verify_morita_context(trivial_context(alg))
    assert rep.ok and rep.info["tau_surjective"]
    z = verify_morita_context(zero_context(alg, alg))
    assert z.ok and not z.info["tau_surjective"]


def test_shape_check():
    ctx = matrix_context()
    with pytest.raises(StructuralError):
        MoritaContext(ctx.A, ctx.B, 3, 2, ctx.a_M, ctx.M_b, ctx.b_N, ctx.N_a, ctx.tau, ctx.sigma)


# ---------------------------------------------------------------------------
# contexts attached to partial actions


def examples():
    ga, _ = swap_example(QQ)
    return [
        build_uniform_dual_action(cycle_category(QQ), cyclic_group(2)),
        build_uniform_dual_action(cycle_category(QQ), cyclic_group(3)),
        sweedler_point_action(None),
        sweedler_point_action(Fraction(-3)),
        ga,
    ] + classify_group_algebra_on_point(builtin_group("S3"))


@pytest.mark.parametrize("pa", examples(), ids=lambda pa: f"{pa.hopf.kind}-{pa.meta.get('label')}")
def test_contexts_and_D(pa):
    g = standard_globalization(pa)
    ps = partial_smash(pa)
    contexts = {x: paper_morita_context(ps, g, x) for x in pa.cat.objects}
    for sc in contexts.values():
        assert sc.report.ok
        assert sc.report.info["M_literal_equals_eps_R"]
        d = sc.report.info["dims"]
        assert d["A"] == ps.cat.dim(sc.obj, sc.obj)
    D = build_D_category(ps, g, contexts)
    assert D.report.ok
    assert {k: D.cat.dim(*k) for k in D.cat.pairs()} == {k: ps.cat.dim(*k) for k in ps.cat.pairs()}


def test_cycle_context_dims():
    pa = build_uniform_dual_action(cycle_category(QQ), cyclic_group(2))
    sc = paper_morita_context(partial_smash(pa), standard_globalization(pa), "1")
    assert sc.report.info["dims"] == {"A": 1, "R": 4, "M": 2, "N": 2}


def test_literal_right_module_is_not_a_left_ideal():
    """For k^C2 on the cycle category, span{(1#h)(a#1)} is strictly smaller than R eps."""
    pa = build_uniform_dual_action(cycle_category(QQ), cyclic_group(2))
    sc = paper_morita_context(partial_smash(pa), standard_globalization(pa), "1")
    assert not sc.report.info["N_literal_equals_R_eps"]
    ga, _ = swap_example(QQ)
    sc = paper_morita_context(partial_smash(ga), standard_globalization(ga), "*")
    assert sc.report.info["N_literal_equals_R_eps"]
