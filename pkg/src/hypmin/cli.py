"""Command-line interface.

Subcommands: disc, minimize [--pointed], check --prime, normalize
--prime, verify --prime --depth.  Output is a JSON document on stdout
(or plain text with --format text); diagnostics go to stderr.  Exit
codes: 0 success, 2 invalid or singular curve, 3 incomplete
factorization, 4 oracle timeout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import localize, oracle
from .minimize import minimize as _minimize
from .pointed import minimize_pointed as _minimize_pointed
from .arith import FactoredInteger, factorize, val_p
from .curve import discriminant, validate, validate_pointed
from .errors import (
    DegreeError,
    FactorizationIncompleteError,
    HypminError,
    OracleTimeoutError,
    SingularCurveError,
)
from .zpoly import poly

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_FACTOR = 3
EXIT_TIMEOUT = 4


def _parse_coeffs(s):
    s = s.strip()
    if not s:
        return ()
    return poly(int(t) for t in s.split(","))


def _parse_factors(s):
    return tuple(int(t) for t in s.split(",")) if s else ()


def _curve_args(ns):
    if ns.stdin:
        doc = json.load(sys.stdin)
        g = int(doc["genus"])
        q = poly(int(c) for c in doc.get("q", []))
        p = poly(int(c) for c in doc.get("p", []))
        hints = tuple(int(x) for x in doc.get("factors", []))
    else:
        if ns.genus is None or ns.p is None:
            raise DegreeError("missing --genus/--q/--p (or use --stdin)")
        g = ns.genus
        q = _parse_coeffs(ns.q if ns.q is not None else "")
        p = _parse_coeffs(ns.p)
        hints = _parse_factors(ns.factors)
    return g, q, p, hints


def _fac_doc(fac):
    return {
        "sign": fac.sign,
        "factors": [[p, e] for p, e in fac.factors],
        "cofactor": fac.cofactor,
    }


def _reports_doc(reports):
    return [
        {
            "prime": r.p,
            "epsilon": r.epsilon,
            "v_before": r.v_delta_before,
            "v_after": r.v_delta_after,
        }
        for r in sorted(reports, key=lambda r: r.p)
    ]


def _emit(doc, fmt):
    if fmt == "json":
        json.dump(doc, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        _emit_text(doc, "")


def _emit_text(doc, prefix):
    if isinstance(doc, dict):
        for k in sorted(doc):
            v = doc[k]
            if isinstance(v, (dict, list)):
                print(f"{prefix}{k}:")
                _emit_text(v, prefix + "  ")
            else:
                print(f"{prefix}{k}: {v}")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)):
                _emit_text(v, prefix + "  ")
            else:
                print(f"{prefix}{v}")
    else:
        print(f"{prefix}{doc}")


def _cmd_disc(ns):
    g, q, p, hints = _curve_args(ns)
    eq = validate(g, q, p)
    delta = discriminant(eq)
    fac = factorize(abs(delta), hints)
    sign = 1 if delta > 0 else -1
    fac = FactoredInteger(sign, fac.factors, fac.cofactor)
    doc = {"genus": g, "q": list(eq.q), "p": list(eq.p), "disc": _fac_doc(fac)}
    _emit(doc, ns.format)
    return EXIT_OK


def _cmd_minimize(ns):
    g, q, p, hints = _curve_args(ns)
    if ns.pointed:
        eq = validate_pointed(g, q, p)
        res = _minimize_pointed(eq, hints)
        change_doc = {
            "matrix": [res.change.u ** 2, res.change.c, 0, 1],
            "e": res.change.u ** (2 * g + 1),
            "h": list(res.change.h),
        }
    else:
        eq = validate(g, q, p)
        res = _minimize(eq, hints)
        change_doc = {
            "matrix": list(res.change.m),
            "e": res.change.e,
            "h": list(res.change.h),
        }
    doc = {
        "genus": g,
        "q": list(res.eq_min.q),
        "p": list(res.eq_min.p),
        "change": change_doc,
        "disc": _fac_doc(res.delta_min),
        "reports": _reports_doc(res.reports),
    }
    _emit(doc, ns.format)
    return EXIT_OK


def _cmd_check(ns):
    g, q, p, hints = _curve_args(ns)
    eq = validate(g, q, p)
    verdict = localize.is_minimal_at(eq, ns.prime)
    doc = {
        "genus": g,
        "prime": ns.prime,
        "status": verdict.status.value,
        "unique": localize.is_unique_minimal_at(eq, ns.prime),
    }
    if verdict.witness is not None:
        doc["witness"] = list(verdict.witness)
    _emit(doc, ns.format)
    return EXIT_OK


def _cmd_normalize(ns):
    g, q, p, hints = _curve_args(ns)
    eq = validate(g, q, p)
    if ns.prime == 2:
        q1, p1, e0, eps = localize.normalize_even(g, eq.q, eq.p)
        doc = {
            "genus": g,
            "prime": 2,
            "q": list(q1),
            "p": list(p1),
            "e": e0,
            "epsilon": eps,
        }
    else:
        f, s = localize.normalize_odd(eq.f())
        doc = {
            "genus": g,
            "prime": ns.prime,
            "f": list(f),
            "e": s,
            "epsilon": int(min(val_p(c, ns.prime) for c in f if c)) % 2 if f else 0,
        }
    _emit(doc, ns.format)
    return EXIT_OK


def _cmd_verify(ns):
    g, q, p, hints = _curve_args(ns)
    eq = validate(g, q, p)
    res = _minimize(eq, hints)
    v_min = val_p(abs(res.delta_min.value()), ns.prime)
    v_oracle = oracle.bfs_local_min(eq, ns.prime, ns.depth)
    doc = {
        "genus": g,
        "prime": ns.prime,
        "depth": ns.depth,
        "v_minimize": v_min,
        "v_oracle": v_oracle,
        "agree": v_min == v_oracle,
    }
    _emit(doc, ns.format)
    return EXIT_OK


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="hypmin",
        description="Minimal Weierstrass equations of hyperelliptic curves over Q.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--genus", type=int)
        sp.add_argument("--q", help="ascending coefficients, comma separated; empty = 0")
        sp.add_argument("--p", help="ascending coefficients, comma separated")
        sp.add_argument("--factors", help="known prime factors of the discriminant")
        sp.add_argument("--stdin", action="store_true", help="read a JSON curve from stdin")
        sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = sub.add_parser("disc", help="factored discriminant")
    common(sp)
    sp.set_defaults(func=_cmd_disc)

    sp = sub.add_parser("minimize", help="globally minimal equation")
    common(sp)
    sp.add_argument("--pointed", action="store_true")
    sp.set_defaults(func=_cmd_minimize)

    sp = sub.add_parser("check", help="minimality verdict at one prime")
    common(sp)
    sp.add_argument("--prime", type=int, required=True)
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("normalize", help="local normal form at one prime")
    common(sp)
    sp.add_argument("--prime", type=int, required=True)
    sp.set_defaults(func=_cmd_normalize)

    sp = sub.add_parser("verify", help="cross-check against the brute-force search")
    common(sp)
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--depth", type=int, default=3)
    sp.set_defaults(func=_cmd_verify)
    return ap


def run(argv=None):
    ap = _build_parser()
    ns = ap.parse_args(argv)
    try:
        return ns.func(ns)
    except (DegreeError, SingularCurveError, ValueError) as exc:
        print(f"error: invalid-curve: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FactorizationIncompleteError as exc:
        print(f"error: incomplete-factorization: {exc}", file=sys.stderr)
        return EXIT_FACTOR
    except OracleTimeoutError as exc:
        print(f"error: oracle-timeout: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except HypminError as exc:
        print(f"error: internal: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
