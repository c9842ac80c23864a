"""End-to-end certificate: action, globalization, smash, Morita contexts, D category."""

from __future__ import annotations

from dataclasses import dataclass, field

from .category import matrix_algebra
from .errors import PartialHopfError
from .globalization import Globalization, full_globalization_report, standard_globalization
from .morita import build_D_category, paper_morita_context
from .partial import HopfAction, verify_global_action, verify_partial_action
from .report import Report
from .smash import (
    PartialSmash,
    embed_smash,
    global_smash,
    hstar_action,
    matrix_smash_iso,
    partial_smash,
    smash_dims,
    verify_partial_smash,
)


@dataclass
class PipelineResult:
    stages: list = field(default_factory=list)
    failed: str | None = None
    globalization: Globalization | None = None
    smash: PartialSmash | None = None

    @property
    def ok(self) -> bool:
        return self.failed is None

    def reports(self) -> list:
        return [r for _, r in self.stages]


def globalize_report(pa: HopfAction, structure: bool = False):
    g = standard_globalization(pa)
    rep = full_globalization_report(g)
    rep.info["idempotent"] = {str(x): list(v) for x, v in g.idempotent.items()}
    if structure:
        rep.info["B"] = g.B.to_json()
    return g, rep


def smash_report(pa: HopfAction, structure: bool = False):
    ps = partial_smash(pa)
    rep = Report("partial smash")
    rep.extend(verify_partial_smash(ps))
    hs = verify_global_action(hstar_action(ps))
    rep.extend(hs, "H* action ")
    mi = matrix_smash_iso(pa)
    rep.extend(mi.report, "matrix iso: ")
    alg, _, _ = matrix_algebra(ps.cat)
    rep.info["smash_dims"] = smash_dims(ps)
    rep.info["tensor_dims"] = {f"{y}|{x}": d for (y, x), d in ps.tensor.homdim.items()}
    rep.info["matrix_algebra_dim"] = alg.dim
    if structure:
        rep.info["tensor"] = ps.tensor.to_json()
        rep.info["smash"] = ps.cat.to_json()
        rep.info["matrix_algebra"] = {"dim": alg.dim, "mult": [[[pa.field.format(c) for c in v] for v in p] for p in alg.mult.to_dense()]}
    return ps, rep


def morita_report(pa: HopfAction, g: Globalization | None = None, ps: PartialSmash | None = None):
    g = g or standard_globalization(pa)
    ps = ps or partial_smash(pa)
    bh = global_smash(g.action)
    emb, er = embed_smash(ps, g, bh)
    rep = Report("Morita")
    rep.extend(er, "embedding ")
    contexts = {}
    per = {}
    for x in pa.cat.objects:
        sc = paper_morita_context(ps, g, x, bh, emb)
        contexts[x] = sc
        rep.extend(sc.report, f"[{x}] ")
        per[str(x)] = {
            k: sc.report.info[k]
            for k in ("dims", "tau_surjective", "sigma_surjective", "tau_injective", "sigma_injective", "N_literal_equals_R_eps")
        }
    rep.info["contexts"] = per
    if rep.ok:
        d = build_D_category(ps, g, contexts, bh)
        rep.extend(d.report, "D: ")
        rep.info["D_dims"] = d.report.info["dims"]
        rep.info["G_images"] = {
            f"{y}|{x}": [list(c) for c in m.columns()] for (y, x), m in d.G.maps.items() if m.cols
        }
    return rep


def run_pipeline(pa: HopfAction) -> PipelineResult:
    res = PipelineResult()

    def stage(name, fn):
        if res.failed:
            return None
        try:
            out = fn()
        except PartialHopfError as e:
            rep = Report(name)
            rep.add("stage completed", False, getattr(e, "witness", None) or {"error": str(e)})
            res.stages.append((name, rep))
            res.failed = name
            return None
        rep = out[1] if isinstance(out, tuple) else out
        res.stages.append((name, rep))
        if not rep.ok:
            res.failed = name
        return out

    stage("action", lambda: verify_partial_action(pa))
    out = stage("globalization", lambda: globalize_report(pa))
    if out:
        res.globalization = out[0]
    out = stage("smash", lambda: smash_report(pa))
    if out:
        res.smash = out[0]
    stage("morita", lambda: morita_report(pa, res.globalization, res.smash))
    return res
