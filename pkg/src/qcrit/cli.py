"""Command-line front end: digit queries, verification sweeps, exploration
and series arithmetic, with text or JSON output.

Exit codes: 0 for success (and for verification sweeps that pass), 1 when
a verification sweep finds a counterexample, 2 for usage errors. In JSON
mode exactly one JSON document is written to standard output. Reports
omit wall-clock timings unless --timing is given, so identical inputs
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import digits as dg
from . import series as sr
from . import theorems as th
from .digits import PrimePower
from .finite_field import field_make

_SUITES = ("equivariance", "logderiv", "admissible-order", "admissible-witness",
           "orbit-min", "cyclic-digits", "projection", "coleman")


def _prime_power(args) -> PrimePower:
    return PrimePower(args.p, args.lam)


def _field(args):
    modulus = None
    if getattr(args, "modulus", None):
        modulus = [int(c) for c in args.modulus.split(",")]
    return field_make(args.p, getattr(args, "n", 1), modulus)


def _parse_element(spec, text: str):
    if "," in text:
        return spec.element([int(c) for c in text.split(",")])
    return spec.from_index(int(text))


def _load_json(value: str) -> dict:
    if value == "-":
        return json.load(sys.stdin)
    path = Path(value)
    if path.exists():
        return json.loads(path.read_text())
    return json.loads(value)


def _digit_str(ds: list[int]) -> str:
    sep = "" if not ds or max(ds) < 10 else "."
    return sep.join(str(d) for d in ds)


# ---------------------------------------------------------------------------
# Handlers: each returns (exit_code, json_payload, text)
# ---------------------------------------------------------------------------

def _cmd_criticals(args):
    pq = _prime_power(args)
    if args.base:
        members = dg.critical_base_set(pq)
        kind = "base"
    else:
        members = dg.critical_members(pq, args.bound or pq.q)
        kind = "closure"
    payload = {"p": pq.p, "lambda": pq.lam, "q": pq.q, "kind": kind,
               "set": members}
    if kind == "closure":
        payload["bound"] = args.bound or pq.q
    label = "base critical set" if args.base else "critical integers"
    text = f"{label} for q={pq.q}: " + "{" + ", ".join(map(str, members)) + "}"
    return 0, payload, text


def _cmd_is_critical(args):
    pq = _prime_power(args)
    k = args.k
    verdict = dg.is_critical(k, pq)
    mu = dg.orbit_min(k, pq)
    rows = []
    for i in range(pq.lam):
        r = dg.min_residue(k * pq.p ** i, pq)
        row = {"i": i, "value": r,
               "digits": dg.to_digits(r, pq.p, width=pq.lam)}
        if r % pq.p:
            v = dg.coprime_part(r + 1, pq.p) - 1
            row["kept"] = True
            row["struck_value"] = v
            row["struck_digits"] = dg.to_digits(v, pq.p)
        else:
            row["kept"] = False
        rows.append(row)
    payload = {"p": pq.p, "lambda": pq.lam, "q": pq.q, "k": k,
               "critical": verdict, "mu": mu,
               "core_k": dg.p_core(k, pq.p),
               "core_mu": dg.p_core(mu, pq.p),
               "cyclic_class": rows}
    lines = [f"{k} is {''if verdict else 'not '}{pq.q}-critical "
             f"(orbit minimum {mu})"]
    for row in rows:
        s = _digit_str(row["digits"])
        if row["kept"]:
            lines.append(f"  rotate {s} -> strike -> "
                         f"{_digit_str(row['struck_digits'])} = {row['struck_value']}")
        else:
            lines.append(f"  rotate {s} -> ignore: ends in 0")
    return 0, payload, "\n".join(lines)


def _cmd_mu(args):
    pq = _prime_power(args)
    mu = dg.orbit_min(args.c, pq)
    payload = {"p": pq.p, "lambda": pq.lam, "q": pq.q, "c": args.c, "mu": mu,
               "core": dg.p_core(mu, pq.p)}
    return 0, payload, f"orbit minimum of {args.c} for q={pq.q}: {mu}"


def _cmd_core(args):
    v = dg.p_core(args.n, args.p)
    return 0, {"p": args.p, "n": args.n, "core": v}, \
        f"{args.p}-core of {args.n}: {v}"


def _cmd_defect(args):
    v = dg.p_defect(args.n, args.p)
    return 0, {"p": args.p, "n": args.n, "defect": v}, \
        f"{args.p}-defect of {args.n}: {v}"


def _cmd_cmp(args):
    c = dg.digital_cmp(args.m, args.n, args.p)
    rel = {dg.LESS: "<", dg.EQUAL: "=", dg.GREATER: ">"}[c]
    return 0, {"p": args.p, "m": args.m, "n": args.n, "cmp": c,
               "relation": rel}, f"{args.m} {rel}_{args.p} {args.n}"


def _cmd_lucas(args):
    v = dg.lucas_binom(args.m, args.k, args.p)
    return 0, {"p": args.p, "m": args.m, "k": args.k, "value": v}, \
        f"binomial({args.m}, {args.k}) mod {args.p} = {v}"


def _cmd_admissible(args):
    quads = []
    for quad in dg.admissible_quadruples(args.p, args.m_bound, args.ell_bound):
        quads.append(list(quad))
        if args.limit and len(quads) >= args.limit:
            break
    payload = {"p": args.p, "m_bound": args.m_bound,
               "ell_bound": args.ell_bound, "count": len(quads),
               "quadruples": quads}
    lines = [f"{len(quads)} admissible quadruples (j, k, ell, m):"]
    lines += [f"  {tuple(qd)}" for qd in quads[:50]]
    if len(quads) > 50:
        lines.append(f"  ... {len(quads) - 50} more")
    return 0, payload, "\n".join(lines)


def _cmd_witness(args):
    quad = dg.AdmissibleQuadruple(args.j, args.k, args.ell, args.m)
    w = dg.admissible_witness(quad, args.p)
    payload = {"quad": list(quad),
               "witness": {"e": w.e, "f": w.f, "g": w.g, "r": w.r}}
    return 0, payload, (f"witness for {tuple(quad)}: "
                        f"e={w.e} f={w.f} g={w.g} r={w.r}")


def _run_suite(name: str, args, pq: PrimePower, spec) -> th.VerifyReport:
    m_bound, ell_bound = th.desk_bounds(args.p)
    if args.m_bound:
        m_bound = args.m_bound
    if args.ell_bound:
        ell_bound = args.ell_bound
    if name == "equivariance":
        return th.verify_equivariance(pq, spec, args.prec,
                                      args.trials or 50, args.seed)
    if name == "logderiv":
        return th.verify_logderiv(spec, args.prec, args.trials or 100,
                                  args.seed)
    if name == "admissible-order":
        return th.verify_admissible_order(args.p, m_bound, ell_bound)
    if name == "admissible-witness":
        return th.verify_admissible_witness(args.p, m_bound, ell_bound)
    if name == "orbit-min":
        return th.verify_orbit_min(pq, args.c_bound, args.oracle_bound)
    if name == "cyclic-digits":
        return th.verify_cyclic_digits(pq, args.bound)
    if name == "projection":
        return th.verify_projection_formula(pq, spec, args.proj_prec,
                                            args.k_bound, args.proj_ell_bound)
    if name == "coleman":
        ext = args.ext_degree
        if ext is None:
            ext = spec.n // pq.lam if spec.n % pq.lam == 0 else 1
        return th.verify_coleman(pq, ext, args.prec, args.trials or 25,
                                 args.seed)
    raise ValueError(f"unknown statement {name!r}")


def _cmd_verify(args):
    pq = _prime_power(args)
    spec = _field(args)
    names = list(_SUITES) if args.statement == "all" else [args.statement]
    reports = [_run_suite(name, args, pq, spec) for name in names]
    ok = all(r.passed for r in reports)
    payload = {"pass": ok,
               "reports": [r.to_json_dict(include_timing=args.timing)
                           for r in reports]}
    lines = []
    for r in reports:
        lines.append(r.summary())
        for ce in r.counterexamples[:5]:
            lines.append(f"    counterexample: {json.dumps(ce, sort_keys=True)}")
    lines.append("ALL PASS" if ok else "FAILURES FOUND")
    return (0 if ok else 1), payload, "\n".join(lines)


def _cmd_explore(args):
    pq = _prime_power(args)
    spec = _field(args)
    rows = th.explore_generators(pq, spec, args.k_bound, args.prec)
    payload = {"p": pq.p, "lambda": pq.lam, "q": pq.q, "n": spec.n,
               "k_bound": args.k_bound, "prec": args.prec, "rows": rows}
    lines = [f"{len(rows)} generator rows (k, alpha, lead, core, defect, critical):"]
    for row in rows:
        lines.append(f"  k={row['k']:>5} alpha={row['alpha']} "
                     f"lead={row['lead_exponent']:>6} core={row['core']:>5} "
                     f"defect={row['defect']:>2} "
                     f"{'critical' if row['critical'] else ''}")
    return 0, payload, "\n".join(lines)


def _cmd_series(args):
    pq = PrimePower(args.p, args.lam) if args.lam else None
    if args.series_op == "eval":
        spec = _field(args)
        kind = args.kind
        if pq is None and kind in ("twisted-orbit", "projection-formula",
                                   "random-gamma"):
            raise ValueError(f"series kind {kind!r} requires --lambda")
        if kind == "artin-hasse":
            out = sr.artin_hasse(args.p, args.prec, spec)
        elif kind == "orbit":
            out = sr.orbit_series(args.k, _parse_element(spec, args.alpha),
                                  args.prec)
        elif kind == "twisted-orbit":
            out = sr.twisted_orbit_series(
                args.k, _parse_element(spec, args.alpha), args.ell,
                _parse_element(spec, args.beta), pq, args.prec)
        elif kind == "projection-formula":
            out = sr.critical_projection_formula(
                args.k, _parse_element(spec, args.alpha), args.ell,
                _parse_element(spec, args.beta), pq, args.prec)
        elif kind == "random-unit":
            out = sr.random_unit(spec, args.prec, args.seed)
        elif kind == "random-gamma":
            out = sr.random_gamma(pq, spec, args.prec, args.seed, args.factors)
        else:
            raise ValueError(f"unknown series kind {kind!r}")
    elif args.series_op == "compose":
        f = sr.TruncSeries.from_json(_load_json(args.f))
        g = sr.TruncSeries.from_json(_load_json(args.g))
        out = f.compose(g)
    elif args.series_op == "invert":
        g = sr.AdditiveSeries.from_json(_load_json(args.g))
        out = g.inverse()
    elif args.series_op == "logderiv":
        f = sr.TruncSeries.from_json(_load_json(args.f))
        out = sr.log_deriv(f)
    elif args.series_op == "psi":
        f = sr.TruncSeries.from_json(_load_json(args.f))
        out = sr.critical_projection(f, pq)
    else:
        raise ValueError(f"unknown series operation {args.series_op!r}")
    return 0, out.to_json(), str(out)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_pq(sub, lam_required: bool = True):
    sub.add_argument("--p", type=int, required=True, help="prime")
    sub.add_argument("--lambda", dest="lam", type=int,
                     required=lam_required, default=None,
                     help="exponent: q = p^lambda")


def _add_field(sub):
    sub.add_argument("--n", type=int, default=1,
                     help="coefficient field degree over F_p")
    sub.add_argument("--modulus", type=str, default=None,
                     help="comma-separated modulus coefficients, ascending")


def build_parser() -> argparse.ArgumentParser:
    # The output options are accepted both before and after the subcommand;
    # the subcommand copies use SUPPRESS so they never clobber a value
    # parsed at the top level.
    out_opts = argparse.ArgumentParser(add_help=False)
    out_opts.add_argument("--format", choices=("text", "json"),
                          default=argparse.SUPPRESS,
                          help="output format (env QCRIT_FORMAT)")
    out_opts.add_argument("--output", type=str, default=argparse.SUPPRESS,
                          help="write output to this file instead of stdout")
    parser = argparse.ArgumentParser(
        prog="qcrit",
        description="Digit combinatorics and power series over finite "
                    "fields, with verification sweeps.")
    parser.add_argument("--format", choices=("text", "json"),
                        default=os.environ.get("QCRIT_FORMAT", "text"),
                        help="output format (env QCRIT_FORMAT)")
    parser.add_argument("--output", type=str, default=None,
                        help="write output to this file instead of stdout")
    cmds = parser.add_subparsers(dest="command", required=True)

    c = cmds.add_parser("criticals", parents=[out_opts], help="list critical integers")
    _add_pq(c)
    c.add_argument("--base", action="store_true",
                   help="base set only (members below q)")
    c.add_argument("--bound", type=int, default=None,
                   help="upper bound for the full set (default q)")
    c.set_defaults(handler=_cmd_criticals)

    c = cmds.add_parser("is-critical", parents=[out_opts], help="criticality test with the "
                                            "cyclic digit table")
    c.add_argument("k", type=int)
    _add_pq(c)
    c.set_defaults(handler=_cmd_is_critical)

    c = cmds.add_parser("mu", parents=[out_opts], help="digital minimum of a residue orbit")
    c.add_argument("c", type=int)
    _add_pq(c)
    c.set_defaults(handler=_cmd_mu)

    c = cmds.add_parser("core", parents=[out_opts], help="digit core")
    c.add_argument("n", type=int)
    c.add_argument("--p", type=int, required=True)
    c.set_defaults(handler=_cmd_core)

    c = cmds.add_parser("defect", parents=[out_opts], help="digit defect")
    c.add_argument("n", type=int)
    c.add_argument("--p", type=int, required=True)
    c.set_defaults(handler=_cmd_defect)

    c = cmds.add_parser("cmp", parents=[out_opts], help="digital well-ordering comparison")
    c.add_argument("m", type=int)
    c.add_argument("n", type=int)
    c.add_argument("--p", type=int, required=True)
    c.set_defaults(handler=_cmd_cmp)

    c = cmds.add_parser("lucas", parents=[out_opts], help="binomial coefficient mod p")
    c.add_argument("m", type=int)
    c.add_argument("k", type=int)
    c.add_argument("--p", type=int, required=True)
    c.set_defaults(handler=_cmd_lucas)

    c = cmds.add_parser("admissible", parents=[out_opts], help="enumerate admissible quadruples")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--m-bound", type=int, default=64)
    c.add_argument("--ell-bound", type=int, default=8)
    c.add_argument("--limit", type=int, default=0,
                   help="stop after this many (0 = no limit)")
    c.set_defaults(handler=_cmd_admissible)

    c = cmds.add_parser("witness", parents=[out_opts], help="carry witness of an admissible "
                                        "quadruple")
    c.add_argument("j", type=int)
    c.add_argument("k", type=int)
    c.add_argument("ell", type=int)
    c.add_argument("m", type=int)
    c.add_argument("--p", type=int, required=True)
    c.set_defaults(handler=_cmd_witness)

    c = cmds.add_parser("verify", parents=[out_opts], help="run verification sweeps")
    c.add_argument("statement", choices=("all",) + _SUITES)
    _add_pq(c)
    _add_field(c)
    c.add_argument("--prec", type=int, default=128)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--trials", type=int, default=None)
    c.add_argument("--m-bound", type=int, default=None)
    c.add_argument("--ell-bound", type=int, default=None)
    c.add_argument("--c-bound", type=int, default=1000)
    c.add_argument("--oracle-bound", type=int, default=10000)
    c.add_argument("--bound", type=int, default=10000)
    c.add_argument("--k-bound", type=int, default=31)
    c.add_argument("--proj-ell-bound", type=int, default=3)
    c.add_argument("--proj-prec", type=int, default=256)
    c.add_argument("--ext-degree", type=int, default=None)
    c.add_argument("--timing", action="store_true",
                   help="include wall-clock timings in JSON output")
    c.set_defaults(handler=_cmd_verify)

    c = cmds.add_parser("explore", parents=[out_opts], help="tabulate digital leading terms of "
                                        "generator images")
    _add_pq(c)
    _add_field(c)
    c.add_argument("--k-bound", type=int, default=63)
    c.add_argument("--prec", type=int, default=128)
    c.set_defaults(handler=_cmd_explore)

    c = cmds.add_parser("series", parents=[out_opts], help="series arithmetic on JSON documents")
    ops = c.add_subparsers(dest="series_op", required=True)
    ev = ops.add_parser("eval", parents=[out_opts], help="build a named series")
    ev.add_argument("--kind", required=True,
                    choices=("artin-hasse", "orbit", "twisted-orbit",
                             "projection-formula", "random-unit",
                             "random-gamma"))
    ev.add_argument("--p", type=int, required=True)
    ev.add_argument("--lambda", dest="lam", type=int, default=None)
    _add_field(ev)
    ev.add_argument("--prec", type=int, default=32)
    ev.add_argument("--k", type=int, default=1)
    ev.add_argument("--ell", type=int, default=1)
    ev.add_argument("--alpha", type=str, default="1",
                    help="element: index or comma-separated coordinates")
    ev.add_argument("--beta", type=str, default="1")
    ev.add_argument("--seed", type=int, default=0)
    ev.add_argument("--factors", type=int, default=2)
    ev.set_defaults(handler=_cmd_series)
    for name, argnames in (("compose", ("--f", "--g")),
                           ("invert", ("--g",)),
                           ("logderiv", ("--f",)),
                           ("psi", ("--f",))):
        op = ops.add_parser(name, parents=[out_opts])
        for a in argnames:
            op.add_argument(a, type=str, required=True,
                            help="JSON document, file path, or - for stdin")
        if name == "psi":
            op.add_argument("--p", type=int, required=True)
            op.add_argument("--lambda", dest="lam", type=int, required=True)
        else:
            op.add_argument("--p", type=int, default=0)
            op.add_argument("--lambda", dest="lam", type=int, default=None)
        op.set_defaults(handler=_cmd_series)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        code, payload, text = args.handler(args)
    except (ValueError, ZeroDivisionError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rendered = (json.dumps(payload, sort_keys=True)
                if args.format == "json" else text)
    if args.output:
        Path(args.output).write_text(rendered + "\n")
    else:
        print(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())
