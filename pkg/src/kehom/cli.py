"""Command-line interface.

Exit status: 0 on success, 1 when a verification or cross-route comparison
fails, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .homology import (
    ROUTES,
    HomologyDecomposition,
    NotUnitarizableError,
    OutOfScopeError,
    h_enright_finite,
    h_route_g,
    normalize_finite,
    twist_weight,
)
from .partitions import format_half, parse_pair, parse_partition
from .weights import WeightLabel, gamma_weight, parse_level, weight_to_json, zeta_data
from .weylgroup import enumerate_w0, format_element, length
from . import verify as verify_mod

SCHEMA = "ke/1"


class InputError(Exception):
    """Invalid command-line input; the message names the offending field."""


def _family(args) -> str:
    if args.family not in ("a", "c", "d"):
        raise InputError(f"--family: expected a, c or d, got {args.family!r}")
    return args.family


def _label(args) -> WeightLabel:
    fam = _family(args)
    try:
        lam = parse_pair(args.lam) if fam == "a" else parse_partition(args.lam)
    except ValueError as exc:
        raise InputError(f"--lam: {exc}") from None
    try:
        d = parse_level(args.d)
    except ValueError as exc:
        raise InputError(f"--d: {exc}") from None
    return WeightLabel.make(fam, lam, d)


def _require_D(label: WeightLabel):
    if not label.in_D():
        raise InputError(f"--lam/--d: {label} is outside the parameter set D({label.family})")


def _dump(obj) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, indent=2, sort_keys=True)


def _render_decomposition(name: str, dec: HomologyDecomposition) -> list[str]:
    lines = [f"[{name}] H_{dec.degree}: {len(dec)} summand(s)"]
    for s in dec.summands:
        mu = f"  mu={s.mu}" if s.mu is not None else ""
        lines.append(f"  {s.weight}{mu}")
    return lines


# -- commands -----------------------------------------------------------------

def cmd_homology(args) -> int:
    label = _label(args)
    routes = ["g", "relabel", "bar", "enright"] if args.route == "all" else [args.route]
    if "enright" in routes and args.n is None:
        if args.route == "enright":
            raise InputError("--n: the enright route needs a finite rank")
        routes.remove("enright")
    if any(r != "enright" for r in routes):
        _require_D(label)
    out: dict[str, HomologyDecomposition] = {}
    for r in routes:
        if r == "enright":
            try:
                out[r] = h_enright_finite(label, args.m, args.n, args.k, det_twist=args.twist,
                                          verify=args.verify)
            except (NotUnitarizableError, OutOfScopeError) as exc:
                raise InputError(f"--lam/--d/--n: {exc}") from None
            except ValueError as exc:
                raise InputError(f"--m/--n/--twist: {exc}") from None
        else:
            out[r] = ROUTES[r](label, args.k)
    infinite = [out[r] for r in routes if r != "enright"]
    agree = all(infinite[0].same_as(x) for x in infinite[1:]) if infinite else True
    if args.format == "json":
        print(_dump({
            "command": "homology",
            "family": label.family,
            "lam": str(label.lam),
            "d": format_half(label.d),
            "k": args.k,
            "routes": {r: dec.to_json() for r, dec in out.items()},
            "agree": agree,
        }))
    else:
        for r, dec in out.items():
            print("\n".join(_render_decomposition(r, dec)))
        if len(infinite) > 1:
            print(f"routes agree: {agree}")
    return 0 if agree else 1


def cmd_enumerate(args) -> int:
    fam = _family(args)
    if args.k < 0:
        raise InputError("--k: must be nonnegative")
    elems = enumerate_w0(fam, args.k)
    if args.format == "json":
        print(_dump({"command": "enumerate-weyl", "family": fam, "k": args.k,
                     "elements": [format_element(w) for w in elems]}))
    else:
        for w in elems:
            print(f"{format_element(w)}  (length {length(w)})")
        print(f"{len(elems)} element(s)")
    return 0


def _seq_json(seq) -> dict:
    return {"head": [format_half(x) for x in seq.head], "tail_intercept": format_half(seq.tail_intercept),
            "direction": seq.direction}


def cmd_zeta(args) -> int:
    label = _label(args)
    _require_D(label)
    z = zeta_data(label)
    data = {"zeta": _seq_json(z.zeta), "zbar": _seq_json(z.zbar),
            "pairs": sorted([list(p) for p in z.n_pairs])}
    if label.family == "a":
        data.update({"zeta_minus": _seq_json(z.zeta_neg), "zbar_minus": _seq_json(z.zbar_neg),
                     "J_plus": z.j_plus.describe(), "J_minus": z.j_minus.describe()})
    else:
        data.update({"J": z.j_set.describe(), "J0": z.j0_set.describe()})
    if args.format == "json":
        print(_dump({"command": "zeta", "family": label.family, "lam": str(label.lam),
                     "d": format_half(label.d), **data}))
    else:
        for key, val in data.items():
            if isinstance(val, dict):
                head = ", ".join(val["head"]) or "-"
                print(f"{key}: head ({head}), tail {val['tail_intercept']} {'-' if val['direction'] < 0 else '+'} i")
            else:
                print(f"{key}: {val}")
    return 0


def cmd_truncate(args) -> int:
    label = _label(args)
    _require_D(label)
    if args.n is None:
        raise InputError("--n: truncation needs a finite rank")
    if label.family == "a" and args.m is None:
        raise InputError("--m: family a needs --m")
    try:
        fl = normalize_finite(label, args.m, args.n)
        gamma = twist_weight(gamma_weight(fl.label, fl.m, fl.n), fl.twist)
    except ValueError as exc:
        raise InputError(f"--lam/--n: {exc}") from None
    rows = []
    for s in h_route_g(label, args.k).summands:
        try:
            g = gamma_weight(WeightLabel(label.tag, s.mu, label.d), args.m, args.n)
            rows.append({"mu": str(s.mu), "survives": True, "gamma": weight_to_json(g)})
        except ValueError:
            rows.append({"mu": str(s.mu), "survives": False, "gamma": None})
    if args.format == "json":
        print(_dump({"command": "truncate", "gamma": weight_to_json(gamma), "k": args.k, "summands": rows}))
    else:
        print(f"Gamma = {gamma}")
        for row in rows:
            print(f"  mu={row['mu']}: {'kept' if row['survives'] else 'dropped'}")
    return 0


def cmd_verify(args) -> int:
    cfg = verify_mod.config_from_env(verify_mod.QUICK if args.quick else verify_mod.FULL)
    results = verify_mod.run_all(cfg, None if args.format == "json" else (lambda r: print(r.line(), flush=True)))
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(_dump({"command": "verify", "passed": ok, "criteria": [
            {"number": r.number, "name": r.name, "passed": r.passed, "checks": r.checked,
             "failures": r.failures[:10]} for r in results]}))
    else:
        print("ALL PASS" if ok else "SOME CRITERIA FAILED")
    return 0 if ok else 1


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kehom", description="Homology of unitarizable modules via super duality.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, label=True):
        p.add_argument("--family", required=True, help="a, c or d")
        if label:
            p.add_argument("--lam", default="", help="partition '2,1' or pair 'minus|plus' for family a")
            p.add_argument("--d", required=True, help="level, e.g. 3 or 5/2")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("homology", help="homology decomposition in degree k")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--route", choices=("g", "relabel", "bar", "enright", "all"), default="all")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--twist", type=Fraction, default=Fraction(0), help="determinant twist (family a)")
    p.add_argument("--verify", action="store_true", help="cross-check the finite path")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("enumerate-weyl", help="minimal coset representatives of length k")
    common(p, label=False)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("zeta", help="zeta sequences and pairing sets")
    common(p)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("truncate", help="finite-rank weight and truncation filter")
    common(p)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("verify", help="run the acceptance sweeps")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
