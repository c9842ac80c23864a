"""JSON workspaces: named groups, Hopf algebras, categories and actions over one field.

A workspace file looks like::

    {"field": "q",
     "groups": {"G": {"builtin": "C2"}},
     "hopf": {"H": {"builder": "dual_group", "group": "G"}},
     "categories": {"C": {"builder": "cycle3"}},
     "actions": {"a": {"builder": "uniform_dual", "group": "G", "cat": "C"}}}

Every entry may instead be a full record as produced by the ``to_json``
methods.  Scalars are strings ``"n/d"`` over Q and ``"r mod p"`` (or plain
integers) over GF(p).
"""

from __future__ import annotations

import json
from pathlib import Path

from .category import LinSemicat, cycle_category, one_object_category
from .errors import StructuralError
from .field import QQ, Field, field_from_spec
from .group import FiniteGroup, builtin_group, subgroup
from .hopf import (
    HopfAlgebra,
    build_dual_group_hopf,
    build_group_algebra,
    build_sweedler,
    build_trivial_hopf,
    dualize,
)
from .partial import HopfAction, trivial_action


class Workspace:
    KINDS = ("groups", "hopf", "categories", "actions")

    def __init__(self, field: Field = QQ):
        self.field = field
        self.groups: dict = {}
        self.hopf: dict = {}
        self.categories: dict = {}
        self.actions: dict = {}

    # -- registry ---------------------------------------------------------------

    def _names(self) -> set:
        return set(self.groups) | set(self.hopf) | set(self.categories) | set(self.actions)

    def _register(self, table: dict, name: str, obj):
        if name in self._names():
            raise StructuralError(f"duplicate name {name!r} in workspace")
        if getattr(obj, "field", self.field) != self.field:
            raise StructuralError(f"{name!r} is not over the workspace field {self.field.spec()}")
        table[name] = obj

    def get(self, name: str):
        for table in (self.actions, self.hopf, self.categories, self.groups):
            if name in table:
                return table[name]
        raise KeyError(name)

    def kind_of(self, name: str) -> str:
        for kind in self.KINDS:
            if name in getattr(self, kind):
                return kind
        raise KeyError(name)

    # -- loading ----------------------------------------------------------------

    @classmethod
    def load(cls, path, field: Field | None = None) -> "Workspace":
        try:
            data = json.loads(Path(path).read_text())
        except FileNotFoundError:
            raise StructuralError(f"workspace file {path} not found") from None
        except json.JSONDecodeError as e:
            raise StructuralError(f"workspace file {path} is not valid JSON: {e}") from None
        return cls.from_json(data, field)

    @classmethod
    def from_json(cls, data, field: Field | None = None) -> "Workspace":
        if not isinstance(data, dict):
            raise StructuralError("workspace must be a JSON object")
        declared = data.get("field")
        if field is None:
            field = field_from_spec(declared) if declared else QQ
        elif declared and field_from_spec(declared) != field:
            raise StructuralError(f"workspace declares field {declared} but {field.spec()} was requested")
        ws = cls(field)
        for name, rec in data.get("groups", {}).items():
            ws._register(ws.groups, name, ws._group(rec))
        for name, rec in data.get("hopf", {}).items():
            ws._register(ws.hopf, name, ws._hopf(rec))
        for name, rec in data.get("categories", {}).items():
            ws._register(ws.categories, name, ws._cat(rec, name))
        for name, rec in data.get("actions", {}).items():
            ws._register(ws.actions, name, ws._action(rec))
        return ws

    def _group(self, rec) -> FiniteGroup:
        if isinstance(rec, str):
            return builtin_group(rec)
        if "builtin" in rec:
            return builtin_group(rec["builtin"])
        return FiniteGroup.from_json(rec)

    def _group_ref(self, ref) -> FiniteGroup:
        if isinstance(ref, dict):
            return self._group(ref)
        if ref in self.groups:
            return self.groups[ref]
        return builtin_group(ref)

    def _hopf(self, rec) -> HopfAlgebra:
        b = rec.get("builder")
        f = self.field
        if b is None:
            return HopfAlgebra.from_json(rec, f)
        if b == "group_algebra":
            return build_group_algebra(self._group_ref(rec["group"]), f)
        if b == "dual_group":
            return build_dual_group_hopf(self._group_ref(rec["group"]), f)
        if b == "sweedler":
            return build_sweedler(f)
        if b == "trivial":
            return build_trivial_hopf(f)
        if b == "dual":
            return dualize(self._hopf_ref(rec["of"]))
        raise StructuralError(f"unknown Hopf builder {b!r}")

    def _hopf_ref(self, ref) -> HopfAlgebra:
        if isinstance(ref, dict):
            return self._hopf(ref)
        try:
            return self.hopf[ref]
        except KeyError:
            raise StructuralError(f"unknown Hopf algebra {ref!r}") from None

    def _cat(self, rec, name: str) -> LinSemicat:
        b = rec.get("builder")
        f = self.field
        if b is None:
            return LinSemicat.from_json(rec, f, name)
        if b == "cycle3":
            return cycle_category(f)
        if b == "point":
            return one_object_category(f, int(rec.get("dim", 1)))
        raise StructuralError(f"unknown category builder {b!r}")

    def _cat_ref(self, ref) -> LinSemicat:
        if isinstance(ref, dict):
            return self._cat(ref, "cat")
        try:
            return self.categories[ref]
        except KeyError:
            raise StructuralError(f"unknown category {ref!r}") from None

    def _action(self, rec) -> HopfAction:
        from .grading import build_from_subgroup_data, build_uniform_dual_action, point_action, subgroup_data_for

        b = rec.get("builder")
        f = self.field
        if b is None:
            pa = HopfAction.from_json(rec, self._cat_ref(rec["cat"]), self._hopf_ref(rec["hopf"]))
        elif b == "uniform_dual":
            pa = build_uniform_dual_action(self._cat_ref(rec["cat"]), self._group_ref(rec["group"]), f)
        elif b == "trivial":
            pa = trivial_action(self._cat_ref(rec["cat"]), self._hopf_ref(rec["hopf"]))
        elif b == "point":
            pa = point_action(self._hopf_ref(rec["hopf"]), [f(v) for v in rec["values"]])
        elif b == "subgroup_data":
            g = self._group_ref(rec["group"])
            cat = self._cat_ref(rec["cat"])
            t = {tuple(k.split("|")): v for k, v in rec.get("t", {}).items()}
            subs = {x: subgroup(g, els) for x, els in rec["subgroups"].items()}
            pa = build_from_subgroup_data(cat, subgroup_data_for(g, cat, subs, t), f)
        else:
            raise StructuralError(f"unknown action builder {b!r}")
        pa.meta.setdefault("label", rec.get("label", b or "record"))
        return pa


def dump(obj) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def materialize(ws_field: Field, hopf: dict, cats: dict, actions: dict, groups: dict | None = None) -> dict:
    """Full-record workspace from live objects; action values are ``(action, hopf_name, cat_name)``."""
    out = {"field": ws_field.spec()}
    if groups:
        out["groups"] = {k: g.to_json() for k, g in groups.items()}
    out["hopf"] = {k: h.to_json() for k, h in hopf.items()}
    out["categories"] = {k: c.to_json() for k, c in cats.items()}
    out["actions"] = {k: a.to_json(hn, cn) for k, (a, hn, cn) in actions.items()}
    return out
