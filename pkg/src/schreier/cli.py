"""Command line front end.

Every subcommand prints one deterministic report: the command echo, a
sha256 digest per input file, structured results, and a verdict list.
JSON (sorted keys, two-space indent) is the stable contract; Markdown
is a rendering of the same data.  Exit codes: 0 when every verdict
passed, 1 on a verdict or computation failure, 2 on usage problems,
3 when a size guard refused the work.
"""

from __future__ import annotations

import argparse
import os
import sys

from .automorphism import aut_A, brute_force_aut, compute_C, rho
from .catalog import load_catalog
from .cleavage import canonical_cleavage, enumerate_cleavages, extract_action
from .cohomology import enumerate_cocycles, h2, verify_exact_sequences
from .errors import ShapeError, SizeLimit, ToolkitError
from .fibration import analyze, check_closure_lemmas
from .generate import generate
from .groth import groth
from .laxaction import validate_lax
from .monoid import units
from .serialize import (
    CATALOG_ENV,
    DirectoryResolver,
    action_from_json,
    default_catalog_dir,
    digest_file,
    dumps,
    hom_from_json,
    hom_to_json,
    kind_of,
    load_json,
    module_from_json,
    monoid_to_json,
)
from .suite import SCOPES, as_dict, run_suite
from .verdict import Verdict, first_failure
from . import catalog as catalog_mod


class _Usage(Exception):
    pass


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


def _load(path: str, expected: str):
    if path is None:
        raise _Usage("missing input file")
    try:
        obj = load_json(path)
        kind = kind_of(obj)
        if kind != expected:
            raise _Usage("%s holds a %s, expected a %s" % (path, kind, expected))
        resolver = DirectoryResolver() if default_catalog_dir().is_dir() else None
        loader = {"hom": hom_from_json, "action": action_from_json,
                  "module": module_from_json}[expected]
        return loader(obj, resolver)
    except _Usage:
        raise
    except (ToolkitError, OSError) as exc:
        raise _Usage(str(exc)) from exc


def _digests(*paths) -> dict:
    return {p: digest_file(p) for p in paths if p}


def _fiber_rows(rep):
    return [[b, sorted(members)] for b, members in sorted(rep.fibers.items())]


def _cmd_analyze(args):
    h = _load(args.hom, "hom")
    rep = analyze(h)
    results = {
        "source_order": h.source.order,
        "target_order": h.target.order,
        "is_prefibration": rep.is_prefibration,
        "is_fibration": rep.is_fibration,
        "precartesian": sorted(rep.pcar),
        "cartesian": sorted(rep.car),
        "fibers": _fiber_rows(rep),
    }
    verdicts = list(check_closure_lemmas(h, rep)) if args.lemmas else []
    return results, verdicts, _digests(args.hom)


def _cmd_lax_validate(args):
    act = _load(args.action, "action")
    audit = validate_lax(act)
    results = {"is_pseudo": audit.is_pseudo, "ok": audit.ok}
    return results, list(audit.verdicts), _digests(args.action)


def _cmd_groth(args):
    act = _load(args.action, "action")
    g = groth(act)
    payload = {
        "monoid": monoid_to_json(g.underlying),
        "projection": hom_to_json(g.projection),
        "inclusion": hom_to_json(g.inclusion),
    }
    results = {"order": g.underlying.order, "out": args.out}
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps(payload))
    else:
        results["total"] = payload
    verdicts = []
    if args.report:
        rep = analyze(g.projection)
        unit_set = set(units(act.carrier).elements)
        expected = frozenset(g.encode(m, a) for m in act.acting.elements()
                             for a in unit_set)
        verdicts = [
            Verdict("projection-prefibration", rep.is_prefibration),
            Verdict("projection-pcar-is-unit-fibers", rep.pcar == expected),
            Verdict("pseudo-iff-fibration",
                    validate_lax(act).is_pseudo == rep.is_fibration),
        ]
        results["is_fibration"] = rep.is_fibration
    return results, verdicts, _digests(args.action)


def _cmd_cleavage(args):
    h = _load(args.hom, "hom")
    cl = canonical_cleavage(h)
    results = {"canonical": {"kappa": list(cl.kappa), "xi": list(cl.xi)}}
    verdicts = []
    if args.all:
        unit_count = len(units(cl.kernel_monoid).elements)
        expected = unit_count ** max(h.target.order - 1, 0)
        cap = args.limit if args.limit else 256
        cls = enumerate_cleavages(h, limit=cap)
        results["cleavage_count"] = expected
        results["cleavages"] = [list(c.kappa) for c in cls]
        verdicts.append(Verdict("cleavage-count-matches-torsor",
                                len(cls) == min(expected, cap),
                                detail="%d listed of %d" % (len(cls), expected)))
    if args.extract:
        act = extract_action(cl)
        audit = validate_lax(act)
        results["extracted"] = {"phi": [list(r) for r in act.phi],
                                "gamma": [list(r) for r in act.gamma]}
        results["is_pseudo"] = audit.is_pseudo
        verdicts.extend(audit.verdicts)
    return results, verdicts, _digests(args.hom)


def _cmd_aut(args):
    h = _load(args.hom, "hom")
    triples = aut_A(h)
    cg = compute_C(h)
    pairs = rho(triples, cg)
    results = {
        "count": len(triples),
        "triples": [{"theta": list(t.theta), "eta": list(t.eta),
                     "xi": list(t.xi), "perm": list(t.perm)} for t in triples],
        "compatible_pairs": [[list(p[0]), list(p[1])] for p in cg.pairs],
        "witnesses": [[list(p[0]), list(p[1]), list(cg.witnesses[p])]
                      for p in cg.pairs],
        "rho": [[list(t.perm), list(p[0]), list(p[1])]
                for t, p in zip(triples, pairs)],
    }
    verdicts = []
    if args.oracle:
        if h.source.order > 8:
            results["oracle"] = "skipped: source order %d above 8" % h.source.order
        else:
            brute = brute_force_aut(h)
            param = tuple(sorted(t.perm for t in triples))
            verdicts.append(Verdict("aut-matches-brute-force", param == brute,
                                    detail="parametric %d vs brute %d"
                                    % (len(param), len(brute))))
    return results, verdicts, _digests(args.hom)


def _cmd_h2(args):
    mod = _load(args.module, "module")
    cocycles = enumerate_cocycles(mod)
    classes = h2(mod, regular_only=args.regular, cocycles=cocycles)
    results = {
        "cocycles": len(cocycles),
        "classes": [{"representative": [list(r) for r in c.representative.table],
                     "size": c.size, "regular": c.is_regular} for c in classes],
        "class_count": len(classes),
    }
    verdicts = []
    if not args.regular:
        covered = sum(c.size for c in classes)
        verdicts.append(Verdict("classes-partition-cocycles",
                                covered == len(cocycles),
                                detail="%d of %d" % (covered, len(cocycles))))
    return results, verdicts, _digests(args.module)


def _cmd_verify_exact(args):
    h = _load(args.hom, "hom")
    data, verdicts = verify_exact_sequences(h, seed=args.seed)
    sub = data.subgroups
    results = {
        "automorphisms": len(sub.all_triples),
        "fix_both": len(sub.fix_both),
        "fix_base": len(sub.fix_base),
        "fix_kernel": len(sub.fix_kernel),
        "c1": len(sub.c1),
        "c2": len(sub.c2),
        "h2_classes": len(data.classes),
        "z1": len(data.z1),
    }
    return results, list(verdicts), _digests(args.hom)


def _cmd_generate(args):
    try:
        entry = generate(args.kind, args.args)
    except ShapeError as exc:
        # unknown kind or wrong argument count is caller error, not failure
        raise _Usage(str(exc)) from exc
    payload = entry.to_json()
    results = {"id": entry.id, "order": entry.payload.order, "out": args.out}
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps(payload))
    else:
        results["monoid"] = payload
    return results, [], {}


def _cmd_suite(args):
    env_dir = os.environ.get(CATALOG_ENV)
    if env_dir or default_catalog_dir().is_dir():
        try:
            cat = load_catalog()
        except ToolkitError as exc:
            raise _Usage("cannot load catalog: %s" % exc) from exc
        source = str(default_catalog_dir())
    else:
        cat = as_dict(catalog_mod.standard_catalog())
        source = "builtin"
    verdicts = run_suite(cat, scope=args.scope, seed=args.seed)
    results = {
        "catalog": source,
        "entries": len(cat),
        "scope": args.scope,
        "checks": len(verdicts),
        "passed": sum(1 for v in verdicts if v.passed),
    }
    return results, verdicts, {}


def _render_json(report) -> str:
    return dumps(report).rstrip("\n")


def _render_md(report) -> str:
    lines = ["# " + " ".join(report["command"]), ""]
    if report["inputs"]:
        lines.append("## Inputs")
        lines.append("")
        for path in sorted(report["inputs"]):
            lines.append("- `%s` sha256 `%s`" % (path, report["inputs"][path]))
        lines.append("")
    lines.append("## Results")
    lines.append("")
    lines.append("```json")
    lines.append(dumps(report["results"]).rstrip("\n"))
    lines.append("```")
    lines.append("")
    if report["verdicts"]:
        lines.append("## Verdicts")
        lines.append("")
        lines.append("| key | passed | witness | detail |")
        lines.append("| --- | --- | --- | --- |")
        for v in report["verdicts"]:
            witness = v.get("witness")
            lines.append("| %s | %s | %s | %s |"
                         % (v["key"], "yes" if v["passed"] else "NO",
                            witness if witness is not None else "",
                            v.get("detail", "")))
    return "\n".join(lines).rstrip() + "\n"


def _add_common(sp, *, seed=False, limit=False):
    sp.add_argument("--format", choices=("json", "md"), default="json")
    if seed:
        sp.add_argument("--seed", type=int, default=0)
    if limit:
        sp.add_argument("--limit", type=int, default=0)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="schreier",
        description="Fibration analysis, total monoids, cleavages, "
                    "automorphisms, and cohomology for finite monoid tables.")
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("analyze", help="precartesian analysis of one map")
    sp.add_argument("--hom", required=True)
    sp.add_argument("--lemmas", action="store_true")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_analyze)

    lax = sub.add_parser("lax", help="lax action tools")
    lax_sub = lax.add_subparsers(dest="lax_cmd", required=True)
    sp = lax_sub.add_parser("validate", help="audit the five action axioms")
    sp.add_argument("--action", required=True)
    _add_common(sp)
    sp.set_defaults(handler=_cmd_lax_validate)

    sp = sub.add_parser("groth", help="total monoid of a lax action")
    sp.add_argument("--action", required=True)
    sp.add_argument("--out")
    sp.add_argument("--report", action="store_true")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_groth)

    sp = sub.add_parser("cleavage", help="canonical lifts and extraction")
    sp.add_argument("--hom", required=True)
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--extract", action="store_true")
    _add_common(sp, limit=True)
    sp.set_defaults(handler=_cmd_cleavage)

    sp = sub.add_parser("aut", help="kernel-preserving automorphisms")
    sp.add_argument("--hom", required=True)
    sp.add_argument("--oracle", action="store_true")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_aut)

    sp = sub.add_parser("h2", help="twist classes of a module")
    sp.add_argument("--module", required=True)
    sp.add_argument("--regular", action="store_true")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_h2)

    sp = sub.add_parser("verify-exact", help="automorphism exact sequences")
    sp.add_argument("--hom", required=True)
    _add_common(sp, seed=True)
    sp.set_defaults(handler=_cmd_verify_exact)

    sp = sub.add_parser("generate", help="build a standard monoid")
    sp.add_argument("kind")
    sp.add_argument("args", nargs="*", type=int)
    sp.add_argument("--out")
    _add_common(sp)
    sp.set_defaults(handler=_cmd_generate)

    sp = sub.add_parser("suite", help="run the law suite over a catalog")
    sp.add_argument("scope", nargs="?", default="all",
                    choices=("all",) + SCOPES)
    _add_common(sp, seed=True)
    sp.set_defaults(handler=_cmd_suite)
    return p


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        results, verdicts, inputs = args.handler(args)
    except _Usage as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except SizeLimit as exc:
        print("size limit: %s" % exc, file=sys.stderr)
        return 3
    except ToolkitError as exc:
        print("failed: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1
    report = {
        "command": ["schreier"] + list(argv),
        "inputs": inputs,
        "results": _jsonable(results),
        "verdicts": [_jsonable(v.as_json()) for v in verdicts],
    }
    render = _render_md if args.format == "md" else _render_json
    print(render(report))
    bad = first_failure(verdicts)
    if bad is not None:
        print("first failing verdict: %s" % bad.key, file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
