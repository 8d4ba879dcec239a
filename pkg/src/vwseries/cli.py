"""Command-line front end.

    vwseries series NAME --order N
    vwseries universal --rank R --side vertical --order N [--refined]
    vwseries verify RELATION|all --rank R [--ell L] --order N
    vwseries assemble --rank R --surface SURF --component vertical|horizontal|full|psi
    vwseries localize --rank R --order N [--surface P2]
    vwseries donaldson --rank R --surface SURF | --flux ... | --identities
    vwseries fixtures [--rank R] [--check]

SURF is a JSON descriptor path, "k3", "k3:a,b" (c1 in the hyperbolic plane),
or "mgt:chi,K2[,Kc1]" for the minimal-general-type preset.  The number of
worker processes for the localization sums is read from VWSERIES_THREADS.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .biseries import BiSeries
from .cyclotomic import CyclotomicScalar
from .puiseux import PuiseuxSeries

EXIT_FAIL = 1
EXIT_USAGE = 2


def _frac(s: str) -> Fraction:
    try:
        x = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from None
    if x <= 0:
        raise argparse.ArgumentTypeError("order must be positive")
    return x


def _ints(s: str) -> tuple:
    return tuple(int(x) for x in s.split(",") if x != "")


def threads() -> int:
    try:
        return max(1, int(os.environ.get("VWSERIES_THREADS", "1")))
    except ValueError:
        return 1


def parse_surface(text: str, c1=None):
    from .surface import k3_like, load_surface, minimal_general_type, surface_validate
    if text.startswith("mgt:"):
        vals = _ints(text[4:])
        if len(vals) not in (2, 3):
            raise ValueError("mgt takes chi,K2[,Kc1]")
        S = minimal_general_type(*vals)
    elif text == "k3" or text.startswith("k3:"):
        S = k3_like(_ints(text[3:]) if text.startswith("k3:") else (0, 0))
    else:
        S = load_surface(text)
    surface_validate(S, strict=True)
    return S if c1 is None else S.with_c1(c1)


# ---- serialization --------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, CyclotomicScalar):
        return str(x.to_rational()) if x.is_rational() else x.to_json()
    if isinstance(x, PuiseuxSeries):
        return x.to_json()
    if isinstance(x, BiSeries):
        return {str(e): str(c) for e, c in sorted(x.terms().items())}
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _coeff_text(c) -> str:
    if isinstance(c, CyclotomicScalar) and c.is_rational():
        return str(c.to_rational())
    return str(c)


def series_rows(named: dict) -> tuple[list, list]:
    """Exponent-indexed table of several series: (header, rows)."""
    exps = sorted({e for s in named.values() for e in s.terms()})
    header = ["exponent"] + list(named)
    rows = []
    for e in exps:
        row = [str(e)]
        for s in named.values():
            t = s.terms()
            row.append(_coeff_text(t[e]) if e in t else "0")
        rows.append(row)
    return header, rows


def emit_series(named: dict, fmt: str, out, rank: int | None = None) -> None:
    if fmt == "json":
        json.dump({k: _jsonable(v) for k, v in named.items()}, out, indent=1)
        out.write("\n")
    elif fmt == "csv":
        header, rows = series_rows(named)
        w = csv.writer(out)
        w.writerow(header)
        w.writerows(rows)
    else:
        for name, s in named.items():
            out.write(f"{name}: order {s.order}\n")
            for e, c in sorted(s.terms().items()):
                out.write(f"  q^{e}: {_coeff_text(c)}\n")


def emit_reports(reports: list, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(_jsonable(reports), out, indent=1)
        out.write("\n")
    elif fmt == "csv":
        keys = sorted({k for r in reports for k in r})
        w = csv.DictWriter(out, fieldnames=keys)
        w.writeheader()
        for r in reports:
            w.writerow({k: _jsonable(v) for k, v in r.items()})
    else:
        for r in reports:
            status = "PASS" if r.get("passed") else "FAIL"
            rest = ", ".join(f"{k}={_jsonable(v)}" for k, v in r.items() if k != "passed")
            out.write(f"{status}  {rest}\n")


# ---- subcommands ------------------------------------------------------------------

def cmd_series(args, out) -> int:
    from .modular import resolve_series
    s = resolve_series(args.name, args.order)
    emit_series({args.name: s}, args.output, out)
    return 0


def cmd_universal(args, out) -> int:
    from .relations import abar_closed_form, normalized_b
    from .universal import all_subsets, build_set, normalize_universal, normalized_refined
    u = build_set(args.rank, args.side, args.order, refined=args.refined)
    if args.subsets:
        named = {}
        for sub in all_subsets(args.rank):
            x = u.subset(sub)
            x = x.at_y_one() if args.refined else x
            name = f"{u.letter}[{''.join(map(str, sub))}]"
            named[name] = x if args.raw else x.shift_by(-x.valuation).scale(x.leading_coefficient().inverse())
    elif args.raw:
        named = u.named()
    elif args.refined:
        named = normalized_refined(u)
    else:
        named = normalize_universal(u)
        if args.side == "vertical":
            order = u.order
            named = {"A": abar_closed_form(args.rank, order), "B": normalized_b(u, order), **named}
    emit_series(named, args.output, out, args.rank)
    return 0


def verify_all(order=None) -> list:
    """Every relation and identity suite at its standard order."""
    from .donaldson import rank5_identity_check
    from .modular import theta_identity_check
    from .relations import (check_abar, check_blowup, check_nesting, check_rank5_extra, check_rank6_set,
                            check_rank7_set, check_subset_sum, check_symmetry, check_y_one, check_y_symmetry,
                            compare_fixtures)
    o10 = Fraction(10) if order is None else Fraction(order)
    o8 = Fraction(8) if order is None else Fraction(order)
    reps = []
    for r in (2, 3, 4, 5):
        reps.extend(compare_fixtures(r, order))
        reps.append(check_abar(r))
        reps.append(check_symmetry(r, o10))
        for ell in range(r // 2 + 1):
            reps.append(check_subset_sum(r, ell, o10))
            reps.append(check_blowup(r, ell, o8))
    reps.extend(check_rank5_extra(o8, "vertical"))
    reps.extend(check_rank6_set(o10))
    reps.extend(check_rank7_set(o10))
    reps.extend(check_nesting(3, 2, o10))
    for r in (2, 3, 4):
        reps.append(check_y_one(r, o8))
        reps.append(check_y_symmetry(r, o8))
    for m in (1, 2, 3, 4):
        reps.append(dict(theta_identity_check("keysum", m, o10), relation="keysum"))
        for k in (0, 1, 2):
            for ell in range(m + 1):
                reps.append(dict(theta_identity_check("thlk", m, o10, k, ell), relation="thlk"))
    reps.append(dict(rank5_identity_check(), relation="rank5_identities"))
    return reps


def cmd_verify(args, out) -> int:
    from .relations import verify_relations
    if args.relation == "all":
        reps = verify_all(args.order)
    else:
        order = Fraction(10) if args.order is None else args.order
        reps = verify_relations(args.relation, args.rank, order, args.ell, args.s, args.side, args.refined)
    emit_reports(reps, args.output, out)
    return 0 if all(r.get("passed") for r in reps) else EXIT_FAIL


def cmd_assemble(args, out) -> int:
    from . import surface as sf
    S = parse_surface(args.surface, _ints(args.c1) if args.c1 else None)
    order = Fraction(8) if args.order is None else args.order
    if args.evir:
        lo, hi = _ints(args.evir)
        preds = sf.evir_predictions(args.rank, S, None, range(lo, hi + 1))
        reps = [{"c2": c2, "value": v, "flags": flags, "passed": not flags} for c2, v, flags in preds]
        emit_reports(reps, args.output, out)
        return 0
    comp = args.component
    if comp == "vertical":
        res = (sf.refined_z_vertical if args.refined else sf.z_vertical)(args.rank, S, None, order)
    elif args.refined:
        raise ValueError("refined assembly is only available for the vertical component")
    elif comp == "horizontal":
        res = sf.z_horizontal(args.rank, S, None, order)
    elif comp == "psi":
        res = sf.psi_series(args.rank, S, None, order)
    else:
        res = sf.z_full(args.rank, S, None, order)
    if args.output == "text":
        out.write(f"component {res.component}, grading offset q^{res.grading_offset}\n")
    name = f"Z_{comp}" if comp != "psi" else "psi"
    emit_series({name: res.series}, args.output, out)
    return 0


def cmd_localize(args, out) -> int:
    from .localization import compare_with_fixtures, extract_universal
    from .localization.oracle import default_configurations
    order = int(Fraction(4) if args.order is None else args.order)
    configs = default_configurations(args.rank)
    if args.surface:
        name = {"p2": "P2", "p1xp1": "P1xP1", "f1": "F1"}.get(args.surface.lower(), args.surface)
        configs.sort(key=lambda c: c.surface != name)
    res = extract_universal(args.rank, order, configs, seed=args.seed, workers=threads())
    named = {k: v for k, v in res.series.items() if k in ("A", "B", "C0") or k.startswith("C")}
    if args.output == "text":
        out.write(res.fixture_text())
        for name, ok, d in compare_with_fixtures(res):
            out.write(f"# {name}: {'matches' if ok else 'differs from'} embedded table"
                      f"{'' if ok else f' at q^{d}'}\n")
    else:
        emit_series(named, args.output, out)
    return 0


def cmd_donaldson(args, out) -> int:
    from . import donaldson as dn
    if args.identities:
        reps = [dn.rank5_identity_check()]
    elif args.flux:
        c = _ints(args.c) if args.c else None
        m = args.m
        closed = dn.flux_sum(args.rank, "closed_form", args.b2, args.signature, c=c, m=m)
        brute = dn.flux_sum(args.rank, "brute_force", args.b2, args.signature, c=c, m=m)
        reps = [{"check": "flux", "rank": args.rank, "b2": args.b2, "m": m, "closed_form": str(closed),
                 "brute_force": str(brute), "passed": closed == brute}]
    else:
        S = parse_surface(args.surface or "mgt:3,2,1", _ints(args.c1) if args.c1 else None)
        reps = [dn.donaldson_check(args.rank, S)]
    emit_reports(reps, args.output, out)
    return 0 if all(r["passed"] for r in reps) else EXIT_FAIL


def cmd_fixtures(args, out) -> int:
    from .fixtures import available_ranks, embedded_fixtures, format_fixture
    from .relations import compare_fixtures
    ranks = [args.rank] if args.rank else available_ranks()
    if args.check:
        reps = [rep for r in ranks if r <= 5 for rep in compare_fixtures(r, args.order)]
        emit_reports(reps, args.output, out)
        return 0 if all(r["passed"] for r in reps) else EXIT_FAIL
    fx = embedded_fixtures()
    named = {f"r{r}_{n}": t.series() for (r, n), t in sorted(fx.items()) if r in ranks}
    if args.output == "text":
        for (r, n), t in sorted(fx.items()):
            if r in ranks:
                out.write(format_fixture(r, n, t.series(), t.order))
    else:
        emit_series(named, args.output, out)
    return 0


# ---- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vwseries", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, rank=True):
        sp.add_argument("--order", type=_frac, default=None)
        sp.add_argument("--output", choices=("text", "json", "csv"), default="text")
        if rank:
            sp.add_argument("--rank", type=int, default=2)

    sp = sub.add_parser("series", help="expand a named q-series")
    sp.add_argument("name")
    common(sp, rank=False)
    sp.set_defaults(func=cmd_series, order_default=Fraction(10))

    sp = sub.add_parser("universal", help="build the universal C or D series")
    common(sp)
    sp.add_argument("--side", choices=("vertical", "horizontal"), default="vertical")
    sp.add_argument("--refined", action="store_true")
    sp.add_argument("--raw", action="store_true", help="do not normalize by the leading monomial")
    sp.add_argument("--subsets", action="store_true", help="emit the 2^(r-1) subset series C_I instead of the pairs")
    sp.set_defaults(func=cmd_universal, order_default=Fraction(10))

    sp = sub.add_parser("verify", help="run a relation suite, or 'all'")
    sp.add_argument("relation")
    common(sp)
    sp.add_argument("--ell", type=int, default=0)
    sp.add_argument("--s", type=int, default=2, help="second rank for the nesting check")
    sp.add_argument("--side", choices=("vertical", "horizontal"), default="vertical")
    sp.add_argument("--refined", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("assemble", help="assemble a generating function on a surface")
    common(sp)
    sp.add_argument("--surface", required=True)
    sp.add_argument("--c1", default=None, help="comma-separated coordinates of c1")
    sp.add_argument("--component", choices=("vertical", "horizontal", "full", "psi"), default="vertical")
    sp.add_argument("--refined", action="store_true")
    sp.add_argument("--evir", default=None, help="c2 range lo,hi for virtual Euler characteristic predictions")
    sp.set_defaults(func=cmd_assemble)

    sp = sub.add_parser("localize", help="extract universal series by torus localization")
    common(sp)
    sp.add_argument("--surface", default=None, help="preset to list first: p2, p1xp1, f1")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_localize)

    sp = sub.add_parser("donaldson", help="leading terms, flux sums, rank-5 identities")
    common(sp)
    sp.add_argument("--surface", default=None)
    sp.add_argument("--c1", default=None)
    sp.add_argument("--flux", action="store_true")
    sp.add_argument("--b2", type=int, default=2)
    sp.add_argument("--signature", type=int, default=0)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--c", default=None)
    sp.add_argument("--identities", action="store_true")
    sp.set_defaults(func=cmd_donaldson)

    sp = sub.add_parser("fixtures", help="print the embedded tables or check closed forms against them")
    common(sp, rank=False)
    sp.add_argument("--rank", type=int, default=None)
    sp.add_argument("--check", action="store_true")
    sp.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.order is None and getattr(args, "order_default", None) is not None:
        args.order = args.order_default
    try:
        return args.func(args, out)
    except (ValueError, KeyError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv) -> tuple[int, str]:
    """Run the CLI in-process and capture its output."""
    buf = io.StringIO()
    try:
        status = main(argv, buf)
    except SystemExit as exc:  # argparse usage errors
        status = exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return status, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
