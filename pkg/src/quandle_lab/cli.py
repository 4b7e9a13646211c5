"""``quandle-lab`` command line.

Exit status: 0 success, 1 a table/harness mismatch, 2 usage or data error
(including an exceeded time budget).
"""
from __future__ import annotations

import argparse
import json
import signal
import sys
import time

from .braids import BraidError, BraidWord, load_expected, load_knot_table, state_sum, table_harness
from .cohomology import (CohomologyError, cocycle_basis, cohomology_dim,
                         cohomology_group_integral, cohomology_group_mod, format_cocycle, _is_prime)
from .data import DataError, load_cocycle, read_cocycle_file
from .groupring import GroupRingError
from .quandle import QuandleError, dual, is_isomorphic
from .surfaces import SurfaceError, deform_spun_fig8, twist_spin_chart, twist_spin_movie
from .tables import TABLES, quandle_from_spec, reproduce_tables
from .torus import color_period, PERIOD_FAMILIES, predicted_period, torus_invariant

USER_ERRORS = (BraidError, CohomologyError, DataError, GroupRingError, QuandleError,
               SurfaceError, ValueError, OSError)


class BudgetExceeded(Exception):
    pass


class Output:
    """Collects text lines and the JSON payload for one command."""

    def __init__(self, command: str, inputs: dict, as_json: bool):
        self.command = command
        self.inputs = {k: v for k, v in inputs.items() if v is not None}
        self.as_json = as_json
        self.lines: list[str] = []
        self.payload: dict = {}
        self.status = 0

    def emit(self, started: float, stream=None):
        stream = sys.stdout if stream is None else stream
        if self.as_json:
            doc = {"command": self.command, "inputs": self.inputs}
            doc.update(self.payload)
            doc["elapsed_ms"] = round((time.perf_counter() - started) * 1000, 3)
            stream.write(json.dumps(doc, sort_keys=False) + "\n")
        else:
            stream.write("".join(line + "\n" for line in self.lines))


def _quandle(text):
    if text is None:
        return None
    return quandle_from_spec(text)


def _cocycle(args, q):
    return load_cocycle(args.cocycle, q, modulus=getattr(args, "mod", None),
                        scale=getattr(args, "scale", 1))[0]


def _value(out: Output, value, colorings=None):
    out.payload["value"] = value.to_json()
    if colorings is not None:
        out.payload["colorings"] = colorings
    out.lines.append(str(value))


# --- commands ------------------------------------------------------------------

def cmd_quandle(args, out: Output):
    q = _quandle(args.quandle)
    out.lines.append(f"{q.label}  (order {q.order})")
    for row in q.table.tolist():
        out.lines.append(" ".join(str(v) for v in row))
    payload = {"label": q.label, "order": q.order, "table": q.table.tolist()}
    if args.dual:
        d = dual(q)
        iso = is_isomorphic(q, d)
        out.lines.append(f"self-dual: {'yes ' + str(iso) if iso else 'no'}")
        payload["self_dual"] = iso
    if args.iso:
        other = _quandle(args.iso)
        iso = is_isomorphic(q, other)
        out.lines.append(f"isomorphic to {other.label}: {'yes ' + str(iso) if iso else 'no'}")
        payload["isomorphism"] = iso
    out.payload["value"] = payload


def cmd_cohomology(args, out: Output):
    q = _quandle(args.quandle)
    m = args.mod
    if m is not None and m >= 2 and _is_prime(m):
        dim = cohomology_dim(q, args.degree, m)
        out.lines.append(f"dim = {dim}")
        out.payload["value"] = {"dim": dim}
        if args.group:
            grp = cohomology_group_mod(q, args.degree, m)
            out.lines.append(f"H^{args.degree} = {grp}")
            out.payload["value"]["group"] = str(grp)
        return
    grp = (cohomology_group_integral(q, args.degree) if not m
           else cohomology_group_mod(q, args.degree, m))
    out.lines.append(f"H^{args.degree} = {grp}")
    out.payload["value"] = {"group": str(grp), "free_rank": grp.free_rank, "torsion": list(grp.torsion)}


def cmd_cocycle(args, out: Output):
    if args.check:
        q = _quandle(args.quandle)
        f, meta = read_cocycle_file(args.check, q, args.degree, args.mod)
        out.lines.append(f"cocycle: degree {f.degree} on {f.quandle.label}, "
                         f"{len(f.terms())} terms, coefficients {'Z' if not f.modulus else f'Z_{f.modulus}'}")
        out.payload["value"] = {"cocycle": True, "terms": len(f.terms()), "meta": meta}
        return
    if args.quandle is None or args.degree is None or args.mod is None:
        raise ValueError("cocycle needs --check FILE, or --quandle, --degree and --mod for a basis")
    q = _quandle(args.quandle)
    if not _is_prime(args.mod):
        raise ValueError("a cocycle basis needs a prime --mod")
    basis = cocycle_basis(q, args.degree, args.mod)
    out.payload["value"] = []
    for i, f in enumerate(basis, 1):
        header = {"basis-vector": f"{i}/{len(basis)}", "quandle": args.quandle,
                  "degree": args.degree, "modulus": args.mod}
        out.lines.append(format_cocycle(f, header).rstrip("\n"))
        out.payload["value"].append({"index": i, "terms": [[list(t), c] for t, c in f.terms().items()]})
    if not basis:
        out.lines.append("# no nonzero cocycles")


def cmd_knot(args, out: Output):
    q = _quandle(args.quandle)
    phi = _cocycle(args, q)
    q = phi.quandle
    if args.table:
        records = load_knot_table(args.table)
        expected = load_expected(args.expected, phi.modulus) if args.expected else None
        report = table_harness(q, phi, records, expected)
        out.lines.extend(report.lines())
        out.payload["value"] = [{"name": r.name, "value": r.value.to_json(), "colorings": r.colorings,
                                 "ok": r.ok} for r in report.rows]
        out.status = report.exit_status
        return
    if args.braid is None or args.strands is None:
        raise ValueError("give --braid and --strands, or --table")
    word = BraidWord.parse(args.braid, args.strands)
    value, count = state_sum(q, phi, word, return_count=True)
    _value(out, value, count)


def cmd_torus(args, out: Output):
    q = _quandle(args.quandle)
    phi = _cocycle(args, q)
    value, count = torus_invariant(phi.quandle, phi, args.n, args.k, reduce=not args.no_reduce,
                                   cap=args.cap, return_count=True)
    _value(out, value, count)


def cmd_twistspin(args, out: Output):
    q = _quandle(args.quandle)
    theta = _cocycle(args, q)
    q = theta.quandle
    if args.method in ("chart", "both") and args.k != 2:
        raise ValueError("the chart method computes k = 2 only")
    movie = chart = None
    if args.method in ("movie", "both"):
        movie, count = twist_spin_movie(q, theta, args.m, args.k, return_count=True)
    if args.method in ("chart", "both"):
        chart, ccount = twist_spin_chart(q, theta, args.m, return_count=True)
    if args.method == "both":
        ok = movie.conjugate() == chart
        out.lines += [f"movie: {movie}", f"chart: {chart}",
                      f"conjugate(movie) == chart: {'yes' if ok else 'NO'}"]
        out.payload.update(value=movie.to_json(), chart=chart.to_json(), colorings=count,
                           conjugate_match=ok)
        out.status = 0 if ok else 1
        return
    if movie is not None:
        _value(out, movie, count)
    else:
        _value(out, chart, ccount)


def cmd_fig8(args, out: Output):
    theta = load_cocycle(args.cocycle, None, modulus=args.mod, scale=args.scale)[0]
    _value(out, deform_spun_fig8(theta), 16)


def cmd_period(args, out: Output):
    q = _quandle(args.quandle)
    rep = color_period(q, args.n, args.cap)
    out.lines.append(str(rep))
    out.payload["value"] = {"color_period": rep.color_period, "cap": rep.cap}
    spec = args.quandle.strip()
    if spec in PERIOD_FAMILIES:
        pred = predicted_period(spec, args.n)
        out.lines.append(f"closed form: {pred} ({'match' if pred == rep.color_period else 'MISMATCH'})")
        out.payload["value"]["closed_form"] = pred
        out.status = 0 if pred == rep.color_period else 1


def cmd_table(args, out: Output):
    names = TABLES if args.which == "all" else (args.which,)
    out.payload["value"] = {}
    status = 0
    for name in names:
        rep = reproduce_tables(name)
        lines = rep.lines()
        out.lines.extend(lines if not args.failures_only
                         else [ln for ln in lines if not ln.startswith("PASS")])
        out.payload["value"][name] = {
            "cells": [c.__dict__ for c in rep.cells],
            "failures": len(rep.failures),
        }
        status = max(status, rep.exit_status)
    out.status = status


# --- argument parsing --------------------------------------------------------------

DEFAULT_BUDGET = 600.0


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS so a subcommand's copy of a flag does not reset one given earlier
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--budget", type=float, default=argparse.SUPPRESS,
                        help="time budget in seconds (default 600)")

    p = argparse.ArgumentParser(prog="quandle-lab", parents=[common],
                                description="Quandle cohomology and cocycle invariants of knots and surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("quandle", parents=[common], help="print a quandle table")
    s.add_argument("--quandle", required=True, help="T:n, R:n, S4, A:n:c0,c1,..., L:p:a")
    s.add_argument("--dual", action="store_true", help="also test self-duality")
    s.add_argument("--iso", metavar="SPEC", help="test isomorphism with another quandle")
    s.set_defaults(func=cmd_quandle)

    s = sub.add_parser("cohomology", parents=[common], help="quandle cohomology")
    s.add_argument("--quandle", required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--mod", type=int, help="coefficients Z_mod (omit or 0 for Z)")
    s.add_argument("--group", action="store_true", help="with a prime --mod, also print the group")
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("cocycle", parents=[common], help="cocycle basis or file check")
    s.add_argument("--quandle")
    s.add_argument("--degree", type=int)
    s.add_argument("--mod", type=int)
    s.add_argument("--check", metavar="FILE", help="validate a cocycle file")
    s.set_defaults(func=cmd_cocycle)

    inv = sub.add_parser("invariant", parents=[common], help="state-sum invariants")
    isub = inv.add_subparsers(dest="kind", required=True)

    def cocycle_opts(sp, required=True):
        sp.add_argument("--cocycle", required=required, help="builtin name or cocycle file")
        sp.add_argument("--mod", type=int, help="re-read the cocycle with Z_mod coefficients")
        sp.add_argument("--scale", type=int, default=1, help="multiply the cocycle first")

    s = isub.add_parser("knot", parents=[common], help="closed braid or knot table")
    s.add_argument("--quandle")
    cocycle_opts(s)
    s.add_argument("--braid", help="comma-separated signed letters")
    s.add_argument("--strands", type=int)
    s.add_argument("--table", help="knot table TSV")
    s.add_argument("--expected", help="expected values TSV (name<TAB>value)")
    s.set_defaults(func=cmd_knot)

    s = isub.add_parser("torus", parents=[common], help="torus link T(n, k)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--quandle")
    cocycle_opts(s)
    s.add_argument("--cap", type=int, help="color-period search cap")
    s.add_argument("--no-reduce", action="store_true", help="do not reduce k by the period")
    s.set_defaults(func=cmd_torus)

    s = isub.add_parser("twistspin", parents=[common], help="twist-spun T(2, m)")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--quandle")
    cocycle_opts(s)
    s.add_argument("--method", choices=("movie", "chart", "both"), default="movie")
    s.set_defaults(func=cmd_twistspin)

    s = isub.add_parser("fig8", parents=[common], help="deform-spun figure-eight knot over S4")
    cocycle_opts(s)
    s.set_defaults(func=cmd_fig8)

    s = sub.add_parser("period", parents=[common], help="color period of torus braids")
    s.add_argument("--quandle", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--cap", type=int)
    s.set_defaults(func=cmd_period)

    s = sub.add_parser("table", parents=[common], help="regenerate a reference table")
    s.add_argument("--which", choices=TABLES + ("all",), required=True)
    s.add_argument("--failures-only", action="store_true")
    s.set_defaults(func=cmd_table)
    return p


def _command_name(args) -> str:
    return f"invariant {args.kind}" if args.command == "invariant" else args.command


def _on_alarm(signum, frame):
    raise BudgetExceeded


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    args.json = getattr(args, "json", False)
    args.budget = getattr(args, "budget", DEFAULT_BUDGET)
    if args.budget <= 0:
        print("error: --budget must be positive", file=sys.stderr)
        return 2
    inputs = {k: v for k, v in vars(args).items()
              if k not in ("func", "json", "budget", "command", "kind")}
    out = Output(_command_name(args), inputs, args.json)
    started = time.perf_counter()
    use_alarm = hasattr(signal, "SIGALRM")
    if use_alarm:
        old = signal.signal(signal.SIGALRM, _on_alarm)
    try:
        if use_alarm:
            signal.setitimer(signal.ITIMER_REAL, args.budget)
        args.func(args, out)
    except BudgetExceeded:
        print(f"error: exceeds budget ({args.budget:g} s)", file=sys.stderr)
        return 2
    except USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if use_alarm:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, old)
    out.emit(started)
    return out.status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
