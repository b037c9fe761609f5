"""Command line front end: ``hyparr <subcommand> [options]``.

Results go to stdout (JSON with ``--json``), diagnostics to stderr.  Exit
status is 0 on success, 1 on domain errors and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from typing import Sequence

from . import arrangement as arr
from .checks import CHECKS, run_checks
from .enumpoly import (
    DEFAULT_POINT_BUDGET,
    InterpolationError,
    PointBudgetExceeded,
    bivariate_json,
    char_from_tutte,
    coboundary,
    coboundary_from_counts,
    point_histogram,
    tutte,
)
from .lattice import DEFAULT_SUBSET_CAP, LatticeBudgetExceeded, build_lattice, characteristic_polynomial, comb_equivalent
from .polyring import ParseError, format_poly, parse_poly, parse_product, term_order
from .primescan import jacobian_lucky_excluded, prime_report
from .strong_gb import DEFAULT_DEGREE_CAP, GBBudgetExceeded, strong_groebner

SCHEMA = 1
log = logging.getLogger("hyparr")


class UsageError(Exception):
    pass


def infer_variables(texts: Sequence[str]) -> list[str]:
    """x, y, z, w up to the last one used; x1..xk for indexed names."""
    names = set()
    for t in texts:
        names |= set(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", t))
    letters = ["x", "y", "z", "w"]
    if names <= set(letters):
        k = max((letters.index(v) for v in names), default=0) + 1
        return letters[:k]
    indexed = [re.fullmatch(r"x(\d+)", v) for v in names]
    if all(indexed):
        return [f"x{i}" for i in range(1, max(int(m.group(1)) for m in indexed) + 1)]
    return sorted(names)


def _variables(args, texts) -> list[str]:
    if args.vars:
        return [v.strip() for v in args.vars.split(",") if v.strip()]
    return infer_variables(texts)


def load_arrangement(args, central: bool = False) -> arr.Arrangement:
    """Read -e/-f input; affine input is coned when ``central`` is asked for."""
    if args.file and args.expr:
        raise UsageError("use either -e or -f, not both")
    if args.file:
        try:
            a = arr.load(args.file)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from None
    elif args.expr:
        variables = _variables(args, args.expr)
        forms = []
        for text in args.expr:
            forms.extend(parse_product(text, variables))
        a = arr.build(forms, len(variables), variables)
    else:
        raise UsageError("no arrangement given (use -e or -f)")
    if central and not a.is_central:
        print("warning: affine arrangement; coning before computing", file=sys.stderr)
        a = arr.cone(a)
    return a


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        payload = {"schema": SCHEMA, "command": args.command, **payload}
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_parse(args):
    a = load_arrangement(args)
    forms = [format_poly(f, a.variables) for f in a.forms]
    _emit(args, {
        "vars": list(a.variables),
        "forms": forms,
        "matrix": a.matrix.tolist(),
        "central": a.central,
        "essential": a.is_essential(),
    }, "\n".join(forms))


def cmd_lattice(args):
    a = load_arrangement(args)
    target = arr.reduce(a, args.prime) if args.prime else a
    m = build_lattice(target, args.subset_cap)
    recs = m.records()
    lines = [f"rank {r['rank']}  mu {r['mu']:>3}  hyperplanes {r['hyperplanes']}" for r in recs]
    _emit(args, {"field": args.prime or 0, "flats": recs}, "\n".join(lines))


def cmd_charpoly(args):
    a = load_arrangement(args)
    target = arr.reduce(a, args.prime) if args.prime else a
    chi = characteristic_polynomial(build_lattice(target, args.subset_cap))
    via = char_from_tutte(target, tutte(target, args.subset_cap))
    _emit(args, {"charpoly": chi.tolist(), "via_tutte": via.tolist(), "agree": chi == via},
          f"{chi}\n{chi.tolist()}")


def cmd_tutte(args):
    a = load_arrangement(args)
    t = tutte(a, args.subset_cap)
    _emit(args, {"tutte": bivariate_json(t)}, format_poly(t, ["x", "y"]))


def cmd_coboundary(args):
    a = load_arrangement(args)
    c = coboundary(a, args.subset_cap)
    _emit(args, {"coboundary": bivariate_json(c)}, format_poly(c, ["x", "y"]))


def _prime_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"bad prime list {text!r}") from None


def cmd_ffmethod(args):
    a = load_arrangement(args, central=True)
    if not args.primes:
        raise UsageError("ffmethod needs --primes")
    primes = _prime_list(args.primes)
    order = term_order(args.order)
    c = coboundary_from_counts(a, primes, order, budget=args.point_budget)
    hists = {str(p): point_histogram(a, p, args.point_budget) for p in primes}
    direct = coboundary(a, args.subset_cap)
    _emit(args, {"coboundary": bivariate_json(c), "histograms": hists, "matches_subset_expansion": c == direct},
          format_poly(c, ["x", "y"]))


def cmd_count(args):
    a = load_arrangement(args)
    if args.q is None:
        raise UsageError("count needs --q")
    hist = point_histogram(a, args.q, args.point_budget)
    _emit(args, {"q": args.q, "complement": hist[0], "histogram": hist}, str(hist[0]))


def cmd_primes(args):
    a = load_arrangement(args, central=True)
    rep = prime_report(a, term_order(args.order), workers=args.threads)
    data = rep.to_json()
    text = (f"non-good primes: {data['nongood']}\n"
            + "".join(f"not (sigma,{k})-lucky: {v}\n" for k, v in data["nonlucky"].items())
            + f"rho0 = {data['rho0']}")
    _emit(args, data, text)


def cmd_equiv(args):
    a = load_arrangement(args, central=True)
    if not args.prime:
        raise UsageError("equiv needs --prime")
    p = args.prime
    ap = arr.reduce(a, p, check_good=False)
    res = comb_equivalent(a, ap)
    rep = prime_report(a, term_order(args.order), ks=(a.l,), workers=args.threads)
    data = {
        "prime": p,
        "equivalent": res.equivalent,
        "witness": list(res.witness) if res.witness else None,
        "good": p not in rep.nongood,
        "lucky": p not in rep.nonlucky_by_k[a.l],
        "coprime_to_rho0": rep.rho0 % p != 0,
    }
    text = f"equivalent mod {p}: {res.equivalent}" + (f" (witness {list(res.witness)})" if res.witness else "")
    _emit(args, data, text)


def cmd_gb(args):
    if not args.expr:
        raise UsageError("gb needs at least one -e generator")
    variables = _variables(args, args.expr)
    gens = [parse_poly(t, variables) for t in args.expr]
    basis = strong_groebner(gens, term_order(args.order), degree_cap=args.degree_cap)
    strs = [format_poly(g, variables, basis.order) for g in basis]
    _emit(args, {
        "vars": variables,
        "order": str(basis.order),
        "basis": strs,
        "leading_coefficients": basis.leading_coefficients,
        "excluded_primes": sorted(basis.excluded_primes()),
    }, "\n".join(strs))


def cmd_jacobian(args):
    a = load_arrangement(args, central=True)
    primes = jacobian_lucky_excluded(a, term_order(args.order), include_q=args.include_q,
                                     degree_cap=args.degree_cap)
    _emit(args, {"excluded_primes": sorted(primes), "include_q": args.include_q}, str(sorted(primes)))


def cmd_check(args):
    extra = [load_arrangement(args, central=True)] if (args.expr or args.file) else []
    results = run_checks(args.only, seed=args.seed, count=args.count, order=term_order(args.order), extra=extra)
    ok = all(r.passed for r in results)
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.cases} cases)"
             + "".join(f"\n    {f}" for f in r.failures[:5]) for r in results]
    _emit(args, {"passed": ok, "seed": args.seed, "results": [r.to_json() for r in results]}, "\n".join(lines))
    return 0 if ok else 1


COMMANDS = {
    "parse": cmd_parse,
    "lattice": cmd_lattice,
    "charpoly": cmd_charpoly,
    "tutte": cmd_tutte,
    "coboundary": cmd_coboundary,
    "ffmethod": cmd_ffmethod,
    "count": cmd_count,
    "primes": cmd_primes,
    "equiv": cmd_equiv,
    "gb": cmd_gb,
    "jacobian": cmd_jacobian,
    "check": cmd_check,
}


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-e", dest="expr", action="append", default=[], metavar="POLY",
                        help="factor or product of factors (repeatable)")
    common.add_argument("-f", dest="file", metavar="FILE", help="JSON arrangement file")
    common.add_argument("--vars", help="comma-separated variable names")
    common.add_argument("--order", choices=["lex", "degrevlex"], default="lex")
    common.add_argument("--prime", type=_positive)
    common.add_argument("--q", type=_positive)
    common.add_argument("--primes")
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--subset-cap", type=_positive, default=DEFAULT_SUBSET_CAP)
    common.add_argument("--point-budget", type=_positive, default=DEFAULT_POINT_BUDGET)
    common.add_argument("--degree-cap", type=_positive, default=DEFAULT_DEGREE_CAP)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="hyparr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "jacobian":
            p.add_argument("--include-q", action="store_true", help="add Q itself to the generators")
        if name == "check":
            p.add_argument("--only", action="append", choices=sorted(CHECKS))
            p.add_argument("--count", type=_positive, default=50, help="random arrangements")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        rc = COMMANDS[args.command](args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (arr.ArrangementError, InterpolationError, GBBudgetExceeded, LatticeBudgetExceeded,
            PointBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
