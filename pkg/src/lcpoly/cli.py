"""Command-line front end: expansion, recurrence lookup, LC checks and
identity verification."""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .arith import format_rational, parse_rational
from .characterization import check_lc_membership
from .engine import (DEFAULT_K_MAX, DEFAULT_N_MAX, DEFAULT_SAMPLES, SamplingExhausted, UnknownIdentity,
                     aggregate_ok, get_identity, verify_all, verify_identity)
from .families import (RELATION_EDGES, RELATIONS, FamilyId, InvalidParameter, ParamPoint, UnknownFamily,
                       family_poly, get_family, recurrence_coeffs, sample_params)
from .hyperseries import SeriesError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_params(items: Sequence[str] | None) -> dict:
    out = {}
    for item in items or ():
        sym, sep, val = item.partition("=")
        if not sep or not sym.strip():
            raise UsageError(f"parameter {item!r} is not of the form symbol=value")
        try:
            out[sym.strip()] = parse_rational(val.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise UsageError(f"parameter {item!r}: {e}") from None
    return out


def _family(args) -> FamilyId:
    if not args.family:
        raise UsageError("--family is required")
    return FamilyId.parse(args.family)


def _theta(fam: FamilyId, args, required: bool = True) -> ParamPoint | None:
    values = parse_params(args.param)
    spec = get_family(fam)
    if not values and not required:
        return None
    missing = [p for p in spec.parameters if p not in values]
    extra = [p for p in values if p not in spec.parameters]
    if missing or extra:
        raise UsageError(f"{fam} takes parameters {', '.join(spec.parameters)}"
                         + (f"; missing {', '.join(missing)}" if missing else "")
                         + (f"; unknown {', '.join(extra)}" if extra else ""))
    return ParamPoint(values)


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=False))
    else:
        print(text)


# commands


def cmd_families(args) -> int:
    rows = []
    for fam in FamilyId:
        spec = get_family(fam)
        rows.append({
            "id": fam.value,
            "name": spec.name,
            "parameters": list(spec.parameters),
            "branches": [{"label": b.label, "alpha": b.table_row[0], "beta": b.table_row[1],
                          "gamma": b.table_row[2], "d2": b.table_row[3], "pearson": b.pearson_kind}
                         for b in spec.branches],
        })
    text = "\n".join(f"{r['id']:4s} {r['name']:22s} ({', '.join(r['parameters'])})" for r in rows)
    _emit(rows, args.format, text)
    return EXIT_OK


def cmd_expand(args) -> int:
    fam = _family(args)
    th = _theta(fam, args)
    p = family_poly(fam, args.n, th, normalized=args.normalized, branch=args.branch)
    if args.format == "json":
        _emit({"family": fam.value, "n": args.n, "theta": th.to_json(), "normalized": args.normalized,
               "coeffs": p.to_json()}, "json", "")
    elif args.format == "latex":
        print(p.to_latex())
    else:
        print(p.to_text())
    return EXIT_OK


def cmd_recurrence(args) -> int:
    fam = _family(args)
    th = _theta(fam, args)
    a, b, g = recurrence_coeffs(fam, args.n, th, args.branch)
    obj = {"alpha": format_rational(a), "beta": format_rational(b), "gamma": format_rational(g)}
    if args.format == "latex":
        print(rf"\alpha_{{{args.n}}} = {obj['alpha']},\ \beta_{{{args.n}}} = {obj['beta']},"
              rf"\ \gamma_{{{args.n}}} = {obj['gamma']}")
    else:
        _emit(obj, args.format, f"alpha = {obj['alpha']}, beta = {obj['beta']}, gamma = {obj['gamma']}")
    return EXIT_OK


def cmd_check_lc(args) -> int:
    fam = _family(args)
    th = _theta(fam, args, required=False)
    if th is None:
        th = sample_params(fam, random.Random(f"{args.seed}:check-lc:{fam.value}"))
    n_max = args.nmax if args.nmax is not None else 20
    branches = [args.branch] if args.branch else [b.label for b in get_family(fam).branches]
    reports = [check_lc_membership(fam, th, n_max, b) for b in branches]
    text = "\n".join(f"{r.family} [{r.detail['branch']}] {r.status}: constant {r.detail['constant']}"
                     + (f", root {r.detail['root']}" if "root" in r.detail else "") for r in reports)
    _emit([r.to_json() for r in reports], args.format, text)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def _grid(args):
    if args.n is not None:
        n_range = (args.n, args.n)
    else:
        n_range = (0, args.nmax if args.nmax is not None else DEFAULT_N_MAX)
    return n_range, (1, args.kmax)


def _report_line(r) -> str:
    line = f"{r.identity:24s} {r.status:11s} {r.printed.checked - r.printed.failure_count}/{r.printed.checked}"
    if r.failures:
        f = r.failures[0]
        theta = ", ".join(f"{k}={v}" for k, v in f.theta.items())
        line += f"  first failure n={f.n}" + (f" k={f.k}" if f.k is not None else "") + f" ({theta})"
    return line


def cmd_verify(args) -> int:
    if not args.identity:
        raise UsageError("--identity is required")
    ident = get_identity(args.identity)
    theta = None
    if args.param:
        fam = ident.variants[0].family if len(ident.variants) == 1 else _family(args)
        theta = _theta(fam, args)
    n_range, k_range = _grid(args)
    r = verify_identity(ident, n_range, k_range, args.samples, args.seed, theta=theta)
    _emit(r.to_json(), args.format, _report_line(r))
    return EXIT_OK if r.acceptable else EXIT_FAIL


def cmd_verify_all(args) -> int:
    n_max = args.nmax if args.nmax is not None else DEFAULT_N_MAX
    reports = verify_all(args.family, n_max, args.kmax, args.samples, args.seed, jobs=args.jobs)
    ok = aggregate_ok(reports)
    counts: dict[str, int] = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    obj = {"ok": ok, "seed": args.seed, "counts": counts, "reports": [r.to_json() for r in reports]}
    text = "\n".join(_report_line(r) for r in reports)
    text += "\n" + ", ".join(f"{k}: {v}" for k, v in counts.items())
    _emit(obj, args.format, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_relations(args) -> int:
    edges = [{"source": e.source.value, "target": e.target.value, "kind": e.kind,
              "bidirectional": e.bidirectional, "equation": e.equation} for e in RELATION_EDGES]
    eqs = {k: r.text for k, r in RELATIONS.items()}
    lines = [f"{e['source']:4s} {'<->' if e['bidirectional'] else '-> '} {e['target']:4s} {e['kind']}"
             + (f"  rel.eq{e['equation']}: {eqs[e['equation']]}" if e["equation"] else "") for e in edges]
    _emit({"edges": edges, "equations": eqs}, args.format, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lcpoly", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="text"):
        p.add_argument("--format", choices=("json", "text", "latex"), default=fmt_default)
        p.add_argument("--family")
        p.add_argument("--branch", help="recurrence branch label (e.g. c2=-beta for Meixner)")
        p.add_argument("--param", action="append", metavar="SYM=VAL", help="exact rational, repeatable")
        p.add_argument("--seed", type=int, default=0)
        return p

    common(sub.add_parser("families", help="list the ten families"))

    p = common(sub.add_parser("expand", help="expand p_n as an exact polynomial"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--normalized", action="store_true", help="normalize to 1 at the branch root")

    p = common(sub.add_parser("recurrence", help="three-term recurrence coefficients"))
    p.add_argument("--n", type=int, required=True)

    p = common(sub.add_parser("check-lc", help="alpha_n + beta_n + gamma_n constancy"))
    p.add_argument("--nmax", type=int)

    for name, hlp in (("verify", "verify one identity"), ("verify-all", "verify the registry")):
        p = common(sub.add_parser(name, help=hlp), "text")
        p.add_argument("--identity")
        p.add_argument("--n", type=int, help="single n instead of 0..nmax")
        p.add_argument("--nmax", type=int)
        p.add_argument("--kmax", type=int, default=DEFAULT_K_MAX)
        p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
        p.add_argument("--jobs", type=int, default=1, help="worker processes (output order is fixed)")

    common(sub.add_parser("relations", help="family relation graph"))
    return ap


COMMANDS = {
    "families": cmd_families, "expand": cmd_expand, "recurrence": cmd_recurrence,
    "check-lc": cmd_check_lc, "verify": cmd_verify, "verify-all": cmd_verify_all,
    "relations": cmd_relations,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, UnknownFamily, UnknownIdentity, InvalidParameter, SeriesError,
            SamplingExhausted, ValueError, ZeroDivisionError, KeyError) as e:
        if isinstance(e, UnknownFamily):
            msg = f"unknown family {e.args[0]!r}"
        elif isinstance(e, UnknownIdentity):
            msg = f"unknown identity {e.args[0]!r}"
        else:
            msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"lcpoly: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
