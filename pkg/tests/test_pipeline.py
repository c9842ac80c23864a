from partialhopf.category import cycle_category
from partialhopf.field import QQ
from partialhopf.grading import build_uniform_dual_action, sweedler_point_action
from partialhopf.group import cyclic_group
from partialhopf.linalg import LinMap
from partialhopf.pipeline import run_pipeline


def test_pipeline_passes_on_cycle():
    res = run_pipeline(build_uniform_dual_action(cycle_category(QQ), cyclic_group(3)))
    assert res.ok
    assert [n for n, _ in res.stages] == ["action", "globalization", "smash", "morita"]
    morita = res.stages[-1][1]
    assert morita.info["D_dims"]["2|1"] == 1
    assert res.globalization is not None and res.smash is not None


def test_pipeline_halts_at_first_failure():
    pa = build_uniform_dual_action(cycle_category(QQ), cyclic_group(2))
    bad = pa.with_matrix("2", "1", 0, LinMap.zero(QQ, 1, 1))
    res = run_pipeline(bad)
    assert res.failed == "action"
    assert len(res.stages) == 1


def test_pipeline_sweedler():
    res = run_pipeline(sweedler_point_action(QQ(5)))
    assert res.ok
