"""Command-line interface.

Exit codes: 0 success, 1 a theorem violation was found (reproducer printed),
2 input or parse error, 3 a resource cap was exceeded.

Vertex indices are 1-based in files and 0-based in JSON witnesses.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import formats
from .errors import InputError, ResourceError, TheoremViolation
from .generators import KINDS, GenConfig, generate, named_example, NAMED_EXAMPLES
from .matrix import format_scalar
from .permanent import permanent
from .polynomial import perm_nullity, perm_poly
from .rank import perm_rank_exact
from .sachs import ek_ok, sachs_coefficient
from .signed_graph import cycle_parity_class, is_balanced
from .verify import batch_verify, check, search_counterexample

log = logging.getLogger("perrank")

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_per(args):
    a = formats.load_matrix(args.matrix, args.format)
    value = permanent(a, threads=args.threads)
    _emit(args, {"permanent": format_scalar(value)}, format_scalar(value))


def cmd_poly(args):
    a = formats.load_matrix(args.matrix, args.format)
    p = perm_poly(a, threads=args.threads)
    if args.raw_sign:
        p = p.raw_sign()
    _emit(args, {"coefficients": p.coeff_strings(), "polynomial": str(p),
                 "convention": "raw" if args.raw_sign else "monic"},
          f"{p}\n[{', '.join(p.coeff_strings())}]")


def cmd_rank(args):
    a = formats.load_matrix(args.matrix, args.format)
    res = perm_rank_exact(a, principal_only=args.principal_only)
    witness = {"rows": list(res.rows), "cols": list(res.cols), "permanent": format_scalar(res.permanent)}
    payload = {"rho": res.rank}
    if args.witness:
        payload["witness"] = witness
    text = str(res.rank)
    if args.witness:
        text += "\n" + json.dumps(witness)
    _emit(args, payload, text)


def cmd_nullity(args):
    a = formats.load_matrix(args.matrix, args.format)
    eta = perm_nullity(a)
    _emit(args, {"eta": eta}, str(eta))


def cmd_balance(args):
    g = formats.load_graph(args.input, args.format)
    ok, cert = is_balanced(g)
    if ok:
        payload = {"balanced": True, "switching": list(cert.switching)}
        text = "balanced\nswitching: " + " ".join("+" if d > 0 else "-" for d in cert.switching)
    else:
        cyc = [v + 1 for v in cert.negative_cycle]
        payload = {"balanced": False, "negative_cycle": cyc}
        text = "unbalanced\nnegative cycle: " + " ".join(map(str, cyc))
    _emit(args, payload, text)


def cmd_parity(args):
    g = formats.load_graph(args.input, args.format)
    cls = cycle_parity_class(g)
    _emit(args, {"parity": cls.value}, cls.value)


def cmd_sachs(args):
    g = formats.load_graph(args.input, args.format)
    if args.split:
        r = ek_ok(g, args.order)
        _emit(args, {"k": r.k, "E": format_scalar(r.E), "O": format_scalar(r.O), "s": format_scalar(r.s)},
              f"E_{r.k} = {format_scalar(r.E)}\nO_{r.k} = {format_scalar(r.O)}\ns_{r.k} = {format_scalar(r.s)}")
    else:
        s = sachs_coefficient(g, args.order)
        _emit(args, {"k": args.order, "s": format_scalar(s)}, format_scalar(s))


def _report_text(d: dict) -> str:
    lines = [f"n: {d['n']}", f"rho: {d['rho']}", f"eta: {d['eta']}", f"sum: {d['sum']}",
             f"rank: {d['rank']}", f"identity: {str(d['identity']).lower()}",
             f"inequality: {str(d['inequality']).lower()}", f"yu_bound: {str(d['yu_bound']).lower()}"]
    if d["ek"] is not None:
        lines += [f"ek: {d['ek']}", f"ok: {d['ok']}"]
    lines.append("poly: " + " ".join(d["poly"]))
    w = d["witness"]
    lines.append(f"witness: rows={w['rows']} cols={w['cols']} permanent={w['permanent']}")
    lines.append("classes: " + ", ".join(f"{k}={v}" for k, v in d["classes"].items()))
    for t in d["theorems"]:
        if t["applicable"]:
            lines.append(f"theorem {t['name']}: {'holds' if t['holds'] else 'FAILS'}")
    return "\n".join(lines)


def cmd_verify(args):
    a = formats.load_matrix(args.matrix, args.format)
    d = check(a).to_json()
    _emit(args, d, _report_text(d))


def _config(args) -> GenConfig:
    return GenConfig(kind=args.kind, n=args.n, density=Fraction(args.density),
                     seed=args.seed, r=args.r, bound=args.bound)


def cmd_batch(args):
    summary = batch_verify(_config(args), args.count, n_min=args.n_min, threads=args.threads)
    d = summary.to_json()
    if args.report_dir:
        from .report import write_batch_report

        d["files"] = write_batch_report(summary, args.report_dir)
    text = "\n".join([
        f"kind: {summary.kind}",
        f"instances: {summary.count}",
        f"identity holds: {summary.identity_holds}",
        f"identity fails: {summary.identity_fails}",
        f"inequality holds: {summary.inequality_holds}",
        f"criterion agrees: {summary.criterion_agrees}/{summary.criterion_applicable}",
        f"yu bound holds: {summary.yu_bound_holds}",
    ] + [f"theorem {k}: {v['holds']}/{v['applicable']}" for k, v in summary.theorem_tallies.items()
         if v["applicable"]] + ([f"{k}: {v}" for k, v in d["files"].items()] if "files" in d else []))
    _emit(args, d, text)


def cmd_search(args):
    hits = search_counterexample(_config(args), args.count, n_min=args.n_min, threads=args.threads)
    payload = [{"seed": seed, "matrix": [[format_scalar(v) for v in row] for row in a.rows()],
                "report": rep.to_json()} for seed, a, rep in hits]
    lines = [f"{len(hits)} counterexample(s) in {args.count} instances"]
    for seed, a, rep in hits:
        ek = "" if rep.ek is None else f" E_k={format_scalar(rep.ek.E)} O_k={format_scalar(rep.ek.O)}"
        lines.append(f"seed {seed}: n={rep.n} rho={rep.rho} eta={rep.eta}{ek}")
        lines.append(formats.dump_dense(a).rstrip())
    _emit(args, {"count": len(hits), "counterexamples": payload}, "\n".join(lines))


def cmd_gen(args):
    obj = generate(_config(args))
    if args.output in (None, "-"):
        sys.stdout.write(formats.dump(obj))
    else:
        formats.save(obj, args.output)
        log.info("wrote %s", args.output)


def cmd_example(args):
    a = named_example(args.name)
    if args.output:
        formats.save(a, args.output)
    else:
        sys.stdout.write(formats.dump_dense(a))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="perrank", description="Exact permanents, permanental rank and nullity.")
    p.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr (-v info, -vv debug)")
    sub = p.add_subparsers(dest="command", required=True)

    def matrix_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("matrix", help="matrix file (dense, MatrixMarket coordinate, or graph), '-' for stdin")
        sp.add_argument("--format", choices=["auto", "dense", "mm", "graph"], default="auto")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)
        return sp

    def graph_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", help="graph edge list or signed adjacency matrix file")
        sp.add_argument("--format", choices=["auto", "dense", "mm", "graph"], default="auto")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)
        return sp

    def gen_options(sp, count=True):
        sp.add_argument("--kind", required=True, choices=KINDS)
        sp.add_argument("--n", type=int, required=True, help="matrix order (largest order with --n-min)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--density", default="1/2", help="edge/entry probability as an exact rational")
        sp.add_argument("--r", type=int, default=None, help="inner dimension for gram_psd")
        sp.add_argument("--bound", type=int, default=None, help="entry bound for nonneg_symmetric/gram_psd")
        if count:
            sp.add_argument("--count", type=int, required=True)
            sp.add_argument("--n-min", type=int, default=None, help="cycle sizes through n-min..n")
            sp.add_argument("--threads", type=int, default=1)
            sp.add_argument("--json", action="store_true")

    sp = matrix_cmd("per", cmd_per, "exact permanent")
    sp.add_argument("--threads", type=int, default=1)
    sp = matrix_cmd("poly", cmd_poly, "permanental polynomial (monic by default)")
    sp.add_argument("--raw-sign", action="store_true", help="emit per(A - xI) instead of the monic form")
    sp.add_argument("--threads", type=int, default=1)
    sp = matrix_cmd("rank", cmd_rank, "permanental rank")
    sp.add_argument("--principal-only", action="store_true")
    sp.add_argument("--witness", action="store_true")
    matrix_cmd("nullity", cmd_nullity, "permanental nullity")
    graph_cmd("balance", cmd_balance, "balance test with certificate")
    graph_cmd("parity", cmd_parity, "cycle parity class")
    sp = graph_cmd("sachs", cmd_sachs, "signed Sachs coefficient s_k")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--split", action="store_true", help="report E_k and O_k")
    matrix_cmd("verify", cmd_verify, "verify every applicable theorem on one matrix")

    sp = sub.add_parser("batch", help="verify seeded random instances")
    gen_options(sp)
    sp.add_argument("--report-dir", default=None, help="write instances.csv, summary.json and a figure here")
    sp.set_defaults(func=cmd_batch)
    sp = sub.add_parser("search", help="search seeded instances for rho + eta != n")
    gen_options(sp)
    sp.set_defaults(func=cmd_search)
    sp = sub.add_parser("gen", help="write one seeded instance")
    gen_options(sp, count=False)
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_gen)
    sp = sub.add_parser("example", help="print a named worked example")
    sp.add_argument("name", choices=sorted(NAMED_EXAMPLES))
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_example)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        args.func(args)
    except TheoremViolation as exc:
        print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
        print(json.dumps(exc.reproducer, indent=2))
        return EXIT_VIOLATION
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, ZeroDivisionError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
