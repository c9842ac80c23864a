import pytest

from partialhopf.algebra import Algebra
from partialhopf.category import (
    LinSemicat,
    complement_idempotent,
    cycle_category,
    full_subcategory,
    ideal_category,
    ideal_of_idempotent,
    matrix_algebra,
    one_object_category,
    tensor_categories,
    verify_central_idempotent,
    verify_ideal,
    verify_semicat,
    verify_semifunctor,
)
from partialhopf.errors import StructuralError
from partialhopf.field import QQ
from partialhopf.linalg import Bilinear


def test_cycle_category_shape():
    c = cycle_category(QQ)
    assert verify_semicat(c).ok
    assert c.is_category and c.is_schurian
    assert c.total_dim() == 6
    assert c.dim("3", "1") == 0 and c.dim("1", "2") == 0
    assert c.compose("3", "2", "1", (1,), (1,)) == ()


def test_mutated_composition_caught():
    c = cycle_category(QQ)
    bad = c.with_comp_entry(("2", "1", "1"), 0, 0, 0, 2)
    rep = verify_semicat(bad)
    assert not rep.ok
    assert not rep.check("unit_laws").passed


def test_associativity_failure_witness():
    # a one-object "algebra" k^2 whose product is not associative
    mult = Bilinear(QQ, 2, 2, 2, {(0, 0): ((1, 1),), (1, 0): ((0, 1),)})
    c = LinSemicat(QQ, ["*"], {("*", "*"): 2}, {("*", "*", "*"): mult})
    rep = verify_semicat(c)
    assert not rep.check("associativity").passed
    assert rep.check("associativity").witness["objects"] == ["*"] * 4


def test_shape_validation():
    with pytest.raises(StructuralError):
        LinSemicat(QQ, ["a"], {("a", "b"): 1})
    with pytest.raises(StructuralError):
        LinSemicat(QQ, ["a"], {("a", "a"): 1}, {("a", "a", "a"): Bilinear.zero(QQ, 2, 2, 2)})
    with pytest.raises(StructuralError):
        LinSemicat(QQ, ["a"], {("a", "a"): 1}, None, {"a": (1, 0)})


def test_matrix_algebra_of_cycle():
    c = cycle_category(QQ)
    alg, idems, offsets = matrix_algebra(c)
    assert alg.dim == 6
    assert alg.verify().ok
    assert sum(1 for _ in idems) == 3
    for e in idems:
        assert alg.mul(e, e) == e
    assert alg.unit == tuple(sum(e[i] for e in idems) for i in range(6))
    assert set(offsets) == set(c.pairs())


def test_tensor_categories_identities():
    a = one_object_category(QQ, 2)
    c = cycle_category(QQ)
    t = tensor_categories(a, c)
    assert verify_semicat(t).ok
    assert t.dim("(*,2)", "(*,1)") == 2
    assert len(t.objects) == 3


def test_central_idempotent_and_ideal():
    k2 = one_object_category(QQ, 2)
    e = {"*": (1, 0)}
    assert verify_central_idempotent(k2, e).ok
    ideal = ideal_of_idempotent(k2, e)
    assert ideal.dims() == {("*", "*"): 1}
    assert verify_ideal(ideal).ok
    sub, incl = ideal_category(k2, e)
    assert verify_semicat(sub).ok and sub.dim("*", "*") == 1
    assert verify_semifunctor(incl).ok
    assert complement_idempotent(k2, e) == {"*": (0, 1)}
    assert not verify_central_idempotent(k2, {"*": (2, 0)}).ok


def test_full_subcategory():
    c = cycle_category(QQ)
    s = full_subcategory(c, ["1", "2"])
    assert s.objects == ("1", "2")
    assert verify_semicat(s).ok
    assert s.dim("2", "1") == 1


def test_json_round_trip():
    c = cycle_category(QQ)
    back = LinSemicat.from_json(c.to_json(), QQ)
    assert back.homdim == c.homdim
    assert all(back.tensor(*k).to_dense() == c.tensor(*k).to_dense() for k in c.triples())


def test_algebra_identity_search():
    k2 = one_object_category(QQ, 2)
    alg = Algebra(QQ, 2, k2.tensor("*", "*", "*"), None, "k2")
    assert alg.find_identity() == (1, 1)
