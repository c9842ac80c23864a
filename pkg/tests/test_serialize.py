import json
from pathlib import Path

import pytest

from partialhopf.corpus import corpus_files, write_corpus
from partialhopf.errors import StructuralError
from partialhopf.field import GF, QQ
from partialhopf.hopf import verify_hopf
from partialhopf.partial import HopfAction, verify_partial_action
from partialhopf.serialize import Workspace, dump

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def test_checked_in_corpus_is_current():
    for name, data in corpus_files().items():
        assert (CORPUS / name).read_text() == dump(data), name


def test_write_corpus(tmp_path):
    files = write_corpus(tmp_path)
    assert sorted(p.name for p in files) == sorted(corpus_files())


def test_load_every_corpus_file():
    for path in sorted(CORPUS.glob("*.json")):
        ws = Workspace.load(path)
        assert ws.field == QQ
        for h in ws.hopf.values():
            assert verify_hopf(h).ok == (path.name != "mutated_kC2.json")
        for name, pa in ws.actions.items():
            assert verify_partial_action(pa).ok == ("corrupted" not in name), name


def test_builders():
    ws = Workspace.load(CORPUS / "builders.json")
    assert set(ws.actions) == {"uniform", "from_subgroups", "full_support"}
    assert ws.actions["uniform"].act == ws.actions["from_subgroups"].act
    assert ws.kind_of("Hdual") == "hopf" and ws.hopf["Hdual"].kind == "dual_of_dual_group"
    assert ws.get("G").order == 3


def test_round_trip_through_records():
    ws = Workspace.load(CORPUS / "cycle_actions.json")
    pa = ws.actions["uniform_C3"]
    rec = pa.to_json("k^C3", "cycle3")
    back = HopfAction.from_json(json.loads(json.dumps(rec)), ws.categories["cycle3"], ws.hopf["k^C3"])
    assert back.act == pa.act


def test_prime_field_workspace():
    data = {"field": "gf:7", "groups": {"G": "C3"}, "hopf": {"H": {"builder": "dual_group", "group": "G"}},
            "categories": {"C": {"builder": "cycle3"}}, "actions": {"a": {"builder": "uniform_dual", "group": "G", "cat": "C"}}}
    ws = Workspace.from_json(data)
    assert ws.field == GF(7)
    assert verify_partial_action(ws.actions["a"]).ok
    with pytest.raises(StructuralError):
        Workspace.from_json(data, QQ)


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"hopf": {"H": {"builder": "nonsense"}}},
        {"categories": {"C": {"builder": "nonsense"}}},
        {"hopf": {"H": {"builder": "sweedler"}}, "categories": {"H": {"builder": "cycle3"}}},
        {"actions": {"a": {"builder": "trivial", "cat": "missing", "hopf": "missing"}}},
        {"field": "reals"},
        {"groups": {"G": "A5"}},
    ],
)
def test_malformed_workspaces(data):
    with pytest.raises(StructuralError):
        Workspace.from_json(data)


def test_missing_and_invalid_files(tmp_path):
    with pytest.raises(StructuralError):
        Workspace.load(tmp_path / "nope.json")
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(StructuralError):
        Workspace.load(p)


def test_dump_is_deterministic():
    d = {"b": 1, "a": [1, 2]}
    assert dump(d) == dump(dict(reversed(list(d.items()))))
