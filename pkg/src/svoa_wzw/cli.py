"""Command-line interface: ``svoa-wzw <command> [options]``.

Exit codes: 0 on success, 1 on usage errors, 2 when a computed result
disagrees with the published values it is checked against.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .anyon_arith import (
    all_currents,
    extension_admissible,
    generated_subgroup,
    quadratic_form,
    sugawara_c,
)
from .lie_core import LieError, WZWFactor

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, float):
        return round(x, 10) + 0.0
    return x


def _tsv_cell(v) -> str:
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(_jsonable(v), sort_keys=True, separators=(",", ":"))
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    return str(_jsonable(v))


def render(record: dict, fmt: str) -> str:
    """Serialize an output record; TSV emits only the ``rows`` table."""
    if fmt == "json":
        return json.dumps(_jsonable(record), indent=2, sort_keys=True) + "\n"
    rows = record["result"]["rows"]
    if not rows:
        return ""
    cols = list(rows[0])
    lines = ["\t".join(cols)]
    lines += ["\t".join(_tsv_cell(r.get(c)) for c in cols) for r in rows]
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------- commands


def cmd_anyons(args):
    f = WZWFactor(args.type, args.rank, args.level)
    rows = []
    for cur in all_currents([f]):
        a = cur.elements[0]
        if a.is_trivial:
            continue
        rows.append({
            "element": a.name,
            "order": a.order,
            "h": cur.h,
            "q": quadratic_form(cur),
            "weight": list(cur.weights[0]),
            "dim": cur.dim,
            "admissible": extension_admissible(generated_subgroup(cur)),
        })
    return {"rows": rows, "c": sugawara_c(f)}, EXIT_OK


def _candidate_row(c):
    row = {
        "name": c.name,
        "h": c.h,
        "c": c.c,
        "dim32": c.dim32,
        "factors": [f.name for f in c.factors],
        "currents": [a.name for a in c.current.elements] if c.current else [],
        "status": {k: v[1] for k, v in sorted(c.status.items())},
    }
    if c.family:
        row["instances"] = [[i.name, i.c, i.dim32] for i in c.instances]
    if c.in_published_list is not None:
        row["in_published_list"] = c.in_published_list
    return row


def cmd_classify(args):
    from . import classifier as cl
    if args.which == "simple":
        cands = cl.enumerate_simple(args.h, args.max_rank, args.max_level)
        rows = [_candidate_row(c) for c in cands]
        for r, c in zip(rows, cands):
            if c.family:
                r["instances"] = r["instances"][:args.instances]
        code = EXIT_OK
        if args.h == cl.THREE_HALVES and args.max_rank >= 24 and args.max_level >= 3:
            if sorted(c.name for c in cands) != sorted(cl.KNOWN_SIMPLE):
                code = EXIT_MISMATCH
        return {"rows": rows}, code
    cands = cl.enumerate_semisimple(args.max_factors, args.max_rank, args.depth)
    rows = [_candidate_row(c) for c in cands]
    expected = {cl.candidate_key(c) for c in cl.expected_semisimple(args.max_rank, args.max_factors)}
    got = {c.key() for c in cands}
    extra = sorted(c.name for c in cands if c.key() not in expected)
    missing = sorted(cl.group_label(c) for c in cl.expected_semisimple(args.max_rank, args.max_factors)
                     if cl.candidate_key(c) not in got)
    code = EXIT_MISMATCH if (extra or missing) else EXIT_OK
    if code:
        print(f"survivors outside the published list: {extra}; missing: {missing}", file=sys.stderr)
    return {"rows": rows, "extra": extra, "missing": missing}, code


def cmd_table(args):
    from . import classifier as cl
    rows_ = cl.theorem_table(args.max_m)
    rows = [{"name": r.name, "dim32": r.dim32, "c": r.c, "automorphisms": r.automorphisms,
             "instances": [list(i) for i in r.instances]} for r in rows_]
    bad = cl.table_mismatches(rows_)
    if bad:
        print(f"rows disagreeing with published values: {bad}", file=sys.stderr)
    return {"rows": rows, "mismatches": bad}, EXIT_MISMATCH if bad else EXIT_OK


def cmd_chart(args):
    from .classifier import verify_inclusion_chart
    path = args.data or os.environ.get("SVOA_EMBEDDINGS") or None
    reps = verify_inclusion_chart(path)
    rows = [{
        "edge": r.name,
        "contained": r.contained,
        "expected": r.expected,
        "index": [list(x) for x in r.index],
        "index_ok": r.index_ok,
        "levels_ok": r.levels_ok,
        "fixtures_ok": r.fixtures_ok,
        "passed": r.passed,
        "decomposition_dims": [[list(d), m] for d, m in r.dims],
    } for r in reps]
    failed = [r.name for r in reps if not r.passed]
    if failed:
        print(f"edges failing verification: {failed}", file=sys.stderr)
    return {"rows": rows, "failed": failed}, EXIT_MISMATCH if failed else EXIT_OK


def cmd_maxima(args):
    from .tau_lab import find_strong_maxima
    rep = find_strong_maxima(args.m, args.starts, args.tol, args.seed)
    rows = [{"x": list(p.x), "objective": p.objective, "a": p.a, "b": p.b,
             "signature": list(p.signature), "max_restricted_eig": max(p.restricted_eigs)}
            for p in rep]
    code = EXIT_OK if len(rep) == args.m + 1 else EXIT_MISMATCH
    return {"rows": rows, "count": len(rep), "starts": rep.starts, "unconverged": rep.unconverged,
            "tol": args.tol}, code


def cmd_invariants(args):
    from .finite_invariants import invariant_dim_cube, invariant_dim_sym3_standard
    if args.kind == "sym3":
        d = invariant_dim_sym3_standard(args.m, args.group, args.degree)
        expected = 1 if args.degree == 3 else None
        row = {"kind": "sym3", "group": args.group, "degree": args.degree, "m": args.m, "dim": d}
    else:
        d = invariant_dim_cube(args.m)
        expected = 1
        row = {"kind": "cube", "m": args.m, "dim": d}
    code = EXIT_MISMATCH if expected is not None and d != expected else EXIT_OK
    return {"rows": [row]}, code


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")

    p = _Parser(prog="svoa-wzw", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("anyons", parents=[common], help="abelian anyons of one WZW factor")
    a.add_argument("--type", required=True)
    a.add_argument("--rank", type=int, required=True)
    a.add_argument("--level", type=int, required=True)
    a.set_defaults(func=cmd_anyons)

    c = sub.add_parser("classify", parents=[common], help="enumerate candidates")
    csub = c.add_subparsers(dest="which", required=True, parser_class=_Parser)
    cs = csub.add_parser("simple", parents=[common])
    cs.add_argument("--h", type=_fraction, default=Fraction(3, 2))
    cs.add_argument("--max-rank", type=int, default=64)
    cs.add_argument("--max-level", type=int, default=24)
    cs.add_argument("--instances", type=int, default=8, help="family instances to print")
    cs.set_defaults(func=cmd_classify)
    cm = csub.add_parser("semisimple", parents=[common])
    cm.add_argument("--max-factors", type=int, default=6)
    cm.add_argument("--max-rank", type=int, default=24)
    cm.add_argument("--depth", type=int, default=3)
    cm.set_defaults(func=cmd_classify)

    t = sub.add_parser("table", parents=[common], help="dimension and central charge table")
    t.add_argument("--max-m", type=int, default=12)
    t.set_defaults(func=cmd_table)

    ch = sub.add_parser("chart", parents=[common], help="verify the inclusion chart")
    ch.add_argument("--data", default=None, help="embeddings JSON (default: shipped file)")
    ch.set_defaults(func=cmd_chart)

    mx = sub.add_parser("maxima", parents=[common], help="strong maxima of sum x_i^3")
    mx.add_argument("--m", type=int, required=True)
    mx.add_argument("--starts", type=int, default=None)
    mx.add_argument("--tol", type=float, default=1e-8)
    mx.add_argument("--seed", type=int, default=0)
    mx.set_defaults(func=cmd_maxima)

    iv = sub.add_parser("invariants", parents=[common], help="invariant dimensions")
    iv.add_argument("--kind", choices=("sym3", "cube"), required=True)
    iv.add_argument("--m", type=int, required=True)
    iv.add_argument("--group", choices=("symmetric", "alternating"), default="symmetric")
    iv.add_argument("--degree", type=int, default=3)
    iv.set_defaults(func=cmd_invariants)
    return p


def run(argv=None, out=None) -> int:
    """Parse ``argv``, run the command and write its output; returns the exit code."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError:
        return EXIT_USAGE
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "format", "command")}
    try:
        result, code = args.func(args)
    except (LieError, ValueError, FileNotFoundError) as e:
        print(f"svoa-wzw: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    record = {"command": args.command, "parameters": params, "result": result,
              "version": __version__}
    out.write(render(record, args.format))
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
