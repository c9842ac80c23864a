"""The bundled example corpus and the ``demo`` command."""

from __future__ import annotations

from pathlib import Path

from .category import cycle_category, one_object_category
from .field import QQ
from .grading import (
    build_uniform_dual_action,
    classify_dual_on_point,
    point_action,
    sweedler_exhaustiveness,
    sweedler_point_action,
)
from .group import cyclic_group, symmetric_group
from .hopf import build_dual_group_hopf, build_group_algebra, build_sweedler
from .partial import swap_example, trivial_action, verify_partial_action
from .pipeline import run_pipeline
from .report import Report
from .serialize import dump, materialize


def corpus_files() -> dict:
    f = QQ
    half = f(1) / f(2)
    out = {}

    hopf = {f"kC{n}": build_group_algebra(cyclic_group(n), f) for n in range(1, 7)}
    hopf.update({f"k^C{n}": build_dual_group_hopf(cyclic_group(n), f) for n in range(1, 7)})
    hopf["kS3"] = build_group_algebra(symmetric_group(3), f)
    hopf["k^S3"] = build_dual_group_hopf(symmetric_group(3), f)
    hopf["H4"] = build_sweedler(f)
    out["hopf_algebras.json"] = materialize(f, hopf, {}, {})

    kc2 = build_group_algebra(cyclic_group(2), f)
    bad = kc2.with_entry(("mult", 1, 1, 0), 2)
    out["mutated_kC2.json"] = materialize(f, {"kC2_mutated": bad}, {}, {})

    cyc = cycle_category(f)
    acts, hs = {}, {}
    for n in (2, 3, 5):
        pa = build_uniform_dual_action(cyc, cyclic_group(n), f)
        hs[f"k^C{n}"] = pa.hopf
        acts[f"uniform_C{n}"] = (pa, f"k^C{n}", "cycle3")
    out["cycle_actions.json"] = materialize(f, hs, {"cycle3": cyc}, acts)

    pa = build_uniform_dual_action(cyc, cyclic_group(2), f)
    broken = pa.with_matrix("2", "1", 0, pa.act[("2", "1")][0].scale(0))
    out["corrupted_action.json"] = materialize(f, {"k^C2": pa.hopf}, {"cycle3": cyc}, {"uniform_C2_corrupted": (broken, "k^C2", "cycle3")})

    k = one_object_category(f)
    dual2 = build_dual_group_hopf(cyclic_group(2), f)
    h4 = build_sweedler(f)
    pts = {
        "dual_C2_eps": (point_action(dual2, [1, 0], "eps"), "k^C2", "k"),
        "dual_C2_half": (point_action(dual2, [half, half], "half"), "k^C2", "k"),
        "kC2_eps": (trivial_action(k, kc2), "kC2", "k"),
        "H4_eps": (sweedler_point_action(None, f), "H4", "k"),
        "H4_alpha_0": (sweedler_point_action(0, f), "H4", "k"),
        "H4_alpha_1": (sweedler_point_action(1, f), "H4", "k"),
    }
    out["point_actions.json"] = materialize(f, {"k^C2": dual2, "kC2": kc2, "H4": h4}, {"k": k}, pts)

    ga, _ = swap_example(f)
    out["swap.json"] = materialize(f, {"kC2": ga.hopf}, {"k2": ga.cat}, {"swap": (ga, "kC2", "k2")})

    out["builders.json"] = {
        "field": "q",
        "groups": {"G": {"builtin": "C3"}},
        "hopf": {"H": {"builder": "dual_group", "group": "G"}, "Hdual": {"builder": "dual", "of": "H"}},
        "categories": {"C": {"builder": "cycle3"}, "k": {"builder": "point"}},
        "actions": {
            "uniform": {"builder": "uniform_dual", "group": "G", "cat": "C"},
            "from_subgroups": {
                "builder": "subgroup_data", "group": "G", "cat": "C",
                "subgroups": {"1": ["e", "t", "t^2"], "2": ["e", "t", "t^2"], "3": ["e", "t", "t^2"]},
                "t": {"2|1": "e", "3|2": "e", "1|3": "e"},
            },
            "full_support": {"builder": "point", "hopf": "H", "values": ["1/3", "1/3", "1/3"]},
        },
    }
    return out


def write_corpus(directory: Path) -> list:
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, data in sorted(corpus_files().items()):
        p = directory / name
        p.write_text(dump(data))
        written.append(p)
    return written


def demo_reports() -> list:
    reports = []
    res = run_pipeline(build_uniform_dual_action(cycle_category(QQ), cyclic_group(2)))
    summary = Report("pipeline: uniform C2 action on the 3-cycle category")
    for name, r in res.stages:
        summary.add(name, r.ok)
    reports.append(summary)
    cls = Report("partial k^C2 actions on k")
    acts = classify_dual_on_point(cyclic_group(2))
    for pa in acts:
        r = verify_partial_action(pa)
        cls.add(pa.meta["label"], r.ok, None if r.ok else r.failures()[0].witness)
    cls.info["count"] = len(acts)
    reports.append(cls)
    reports.append(sweedler_exhaustiveness())
    return reports
