"""Command line front end.

Exit status: 0 when every check passes, 1 on a mathematical failure (with a
witness in the report), 2 on usage or input-format errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .category import LinSemicat, verify_semicat
from .errors import PartialHopfError, StructuralError, UnsupportedFieldError, VerificationError
from .field import field_from_spec
from .group import builtin_group
from .hopf import HopfAlgebra, verify_hopf
from .partial import HopfAction, verify_global_action, verify_partial_action
from .report import Report, _plain
from .serialize import Workspace, dump

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--field", default=d(None), help="q (rationals, default) or gf:<p>")
    p.add_argument("--out", default=d(None), help="write the report here instead of stdout")
    p.add_argument("--format", choices=["text", "records"], default=d("text"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="partialhopf", description="Partial Hopf actions on linear categories.")
    _common(ap, False)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, help_, target=True):
        p = sub.add_parser(name, help=help_)
        _common(p, True)
        if target:
            p.add_argument("-w", "--workspace", required=True, help="workspace JSON file")
            p.add_argument("name", help="object name inside the workspace")
        return p

    add("verify-hopf", "check the Hopf algebra axioms")
    add("verify-cat", "check associativity and unit laws")
    p = add("verify-action", "check partial (or, with --global, global) action axioms")
    p.add_argument("--global", dest="global_", action="store_true", help="check the global axioms instead")
    p = sub.add_parser("classify", help="partial actions on the one-object category k")
    _common(p, True)
    p.add_argument("kind", choices=["dual-group", "group-algebra", "sweedler"])
    p.add_argument("--group", help="builtin group name (C1..C6, C2xC2, V4, S3)")
    p.add_argument("--alphas", default="0,1", help="comma separated alpha values for the Sweedler family")
    p = add("globalize", "standard globalization and its (a)-(e) checks")
    p.add_argument("--structure", action="store_true", help="include the structure constants of B")
    p = add("smash", "partial smash product, H* action and matrix isomorphism")
    p.add_argument("--structure", action="store_true", help="include structure constants")
    add("morita", "per-object Morita contexts and the D category")
    add("pipeline", "all stages, halting at the first failure")
    p = sub.add_parser("demo", help="run the bundled examples")
    _common(p, True)
    p.add_argument("--write-corpus", metavar="DIR", help="write the example corpus JSON files into DIR")
    return ap


def _emit(args, reports: list, extra: dict | None = None):
    if args.format == "records":
        payload = {"reports": [r.to_record() for r in reports]}
        if extra:
            payload.update(_plain(extra))
        text = dump(payload)
    else:
        text = "\n".join(r.to_text() for r in reports) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(args) -> Workspace:
    field = field_from_spec(args.field) if args.field else None
    return Workspace.load(args.workspace, field)


def _lookup(ws: Workspace, name: str, cls):
    try:
        obj = ws.get(name)
    except KeyError:
        raise UsageError(f"unknown name {name!r}; known: {sorted(ws._names())}") from None
    if not isinstance(obj, cls):
        raise UsageError(f"{name!r} is a {ws.kind_of(name)} entry, not what {cls.__name__} commands expect")
    return obj


def _status(reports) -> int:
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_verify_hopf(args) -> int:
    h = _lookup(_load(args), args.name, HopfAlgebra)
    r = verify_hopf(h)
    _emit(args, [r])
    return _status([r])


def cmd_verify_cat(args) -> int:
    c = _lookup(_load(args), args.name, LinSemicat)
    r = verify_semicat(c)
    _emit(args, [r])
    return _status([r])


def cmd_verify_action(args) -> int:
    pa = _lookup(_load(args), args.name, HopfAction)
    r = verify_global_action(pa) if args.global_ else verify_partial_action(pa)
    _emit(args, [r])
    return _status([r])


def cmd_classify(args) -> int:
    from .field import QQ
    from .grading import (
        classify_dual_on_point,
        classify_group_algebra_on_point,
        classify_sweedler_on_point,
        sweedler_exhaustiveness,
    )

    field = field_from_spec(args.field) if args.field else QQ
    rep = Report(f"classification: {args.kind}")
    extra_reports = []
    if args.kind == "sweedler":
        try:
            alphas = [field(a.strip()) for a in args.alphas.split(",") if a.strip()]
        except (ValueError, ZeroDivisionError) as e:
            raise UsageError(f"bad --alphas: {e}") from None
        acts = classify_sweedler_on_point(alphas, field)
        if field == QQ:
            extra_reports.append(sweedler_exhaustiveness(field))
    else:
        if not args.group:
            raise UsageError("--group is required for this kind")
        g = builtin_group(args.group)
        acts = (classify_dual_on_point if args.kind == "dual-group" else classify_group_algebra_on_point)(g, field)
    rows = []
    for pa in acts:
        r = verify_partial_action(pa)
        label = pa.meta.get("label", "")
        rep.add(label, r.ok, r.failures()[0].witness if not r.ok else None)
        lam = {b: field.format(m.entries[0][0]) for b, m in zip(pa.hopf.basis, pa.act[("*", "*")])}
        row = {"label": label, "lambda": lam}
        if "subgroup" in pa.meta:
            row["subgroup"] = pa.meta["subgroup"].names()
        rows.append(row)
    rep.info["count"] = len(acts)
    rep.info["rows"] = rows
    reports = [rep] + extra_reports
    _emit(args, reports)
    return _status(reports)


def _action(args) -> HopfAction:
    return _lookup(_load(args), args.name, HopfAction)


def _require_partial(pa: HopfAction) -> Report | None:
    r = verify_partial_action(pa)
    return None if r.ok else r


def cmd_globalize(args) -> int:
    from .pipeline import globalize_report

    pa = _action(args)
    bad = _require_partial(pa)
    if bad:
        _emit(args, [bad])
        return EXIT_FAIL
    _, rep = globalize_report(pa, args.structure)
    _emit(args, [rep])
    return _status([rep])


def cmd_smash(args) -> int:
    from .pipeline import smash_report

    pa = _action(args)
    bad = _require_partial(pa)
    if bad:
        _emit(args, [bad])
        return EXIT_FAIL
    _, rep = smash_report(pa, args.structure)
    _emit(args, [rep])
    return _status([rep])


def cmd_morita(args) -> int:
    from .pipeline import morita_report

    pa = _action(args)
    bad = _require_partial(pa)
    if bad:
        _emit(args, [bad])
        return EXIT_FAIL
    rep = morita_report(pa)
    _emit(args, [rep])
    return _status([rep])


def cmd_pipeline(args) -> int:
    from .pipeline import run_pipeline

    pa = _action(args)
    res = run_pipeline(pa)
    summary = Report("pipeline")
    for name, r in res.stages:
        summary.add(name, r.ok)
    if res.failed:
        summary.info["failed_stage"] = res.failed
    reports = [summary] + res.reports()
    _emit(args, reports)
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_demo(args) -> int:
    from .corpus import demo_reports, write_corpus

    if args.write_corpus:
        files = write_corpus(Path(args.write_corpus))
        rep = Report("corpus")
        for f in files:
            rep.add(f"wrote {f.name}", True)
        _emit(args, [rep])
        return EXIT_OK
    reports = demo_reports()
    _emit(args, reports)
    return _status(reports)


COMMANDS = {
    "verify-hopf": cmd_verify_hopf,
    "verify-cat": cmd_verify_cat,
    "verify-action": cmd_verify_action,
    "classify": cmd_classify,
    "globalize": cmd_globalize,
    "smash": cmd_smash,
    "morita": cmd_morita,
    "pipeline": cmd_pipeline,
    "demo": cmd_demo,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return COMMANDS[args.cmd](args)
    except (UsageError, StructuralError, UnsupportedFieldError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as e:
        rep = Report(args.cmd)
        rep.add("preconditions", False, e.witness or {"error": str(e)}, str(e))
        _emit(args, [rep])
        return EXIT_FAIL
    except PartialHopfError as e:  # pragma: no cover - every library error is one of the above
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
