"""Command-line front end with machine-readable, byte-reproducible reports.

Every subcommand prints one report to stdout — JSON by default, CSV (one
header row + one data row) or key = value text on request — and exits 0
when its checks pass, 1 on a failed check or a structured numeric error
({"error": kind, "detail": ...}), 2 on usage errors.  All floats are
serialized with 17 significant digits and all JSON keys are sorted, so a
fixed argument vector (plus seed) reproduces identical bytes.

Tolerance resolution: an explicit --tol wins, else the GAMMALAB_TOL
environment variable, else a per-family default (1e-10 identities, 1e-8
series/quadrature, 1e-7 transforms, 1e-9 real traces, 1e-8 complex).
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys
from fractions import Fraction

from . import closure as closure_mod
from . import mellin as mellin_mod
from . import schlomilch
from . import stern as stern_mod
from .core import gamma
from .errors import (
    ConvergenceError,
    DepthError,
    DomainError,
    EmptyGridError,
    PoleError,
    ResourceError,
    TraceDepthError,
)
from .identities import IdentityReport, SampleSpec, parse_identity_tag, verify_grid
from .intervals import as_fraction
from .landau import (
    complex_reduce_trace,
    landau_construct,
    quarter_set_membership,
    quarter_set_trace,
    trace_evaluate,
    validate_trace,
)

_DEFAULTS = {
    "identities": 1e-10,
    "series": 1e-8,
    "mellin": 1e-7,
    "trace": 1e-9,
    "complex_trace": 1e-8,
}

_ERROR_KINDS = (
    (PoleError, "pole"),
    (EmptyGridError, "empty_grid"),
    (DomainError, "domain"),
    (ConvergenceError, "convergence"),
    (ResourceError, "resource"),
    (TraceDepthError, "trace_depth"),
    (DepthError, "depth"),
    (ZeroDivisionError, "pole"),
    (OverflowError, "overflow"),
)


# ---------------------------------------------------------------------------
# argument parsing helpers (all failures here are usage errors, exit 2)


def _arg_rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (DomainError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _arg_complex(text: str) -> complex:
    """Parse "re,im" pairs, plain reals, or exact rationals into a complex."""
    try:
        if "," in text:
            re_s, im_s = text.split(",", 1)
            return complex(float(re_s), float(im_s))
        if "/" in text:
            return complex(float(Fraction(text)))
        return complex(float(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _arg_identity(text: str) -> str:
    try:
        parse_identity_tag(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _arg_grid(text: str):
    """Grid spec "count:relo:rehi:imlo:imhi"."""
    parts = text.split(":")
    if len(parts) != 5:
        raise argparse.ArgumentTypeError(
            f"grid spec must be count:relo:rehi:imlo:imhi, got {text!r}"
        )
    try:
        count = int(parts[0])
        relo, rehi, imlo, imhi = (float(p) for p in parts[1:])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid spec {text!r}") from None
    if count < 1 or rehi < relo or imhi < imlo:
        raise argparse.ArgumentTypeError(f"degenerate grid spec {text!r}")
    return count, (relo, rehi), (imlo, imhi)


def _arg_points(text: str) -> tuple:
    items = [p for p in text.split(",") if p]
    if not items:
        raise argparse.ArgumentTypeError("empty point list")
    return tuple(_arg_rational(p) for p in items)


# ---------------------------------------------------------------------------
# serialization


def _format_float(x: float) -> str:
    if x != x or x in (math.inf, -math.inf):
        raise ValueError(f"non-finite value {x!r} in report")
    s = "%.17g" % x
    # "%.17g" may yield bare exponents like 1e+16 — valid JSON either way
    return s


def _to_json(obj) -> str:
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, str):
        out = ['"']
        for ch in obj:
            if ch == '"':
                out.append('\\"')
            elif ch == "\\":
                out.append("\\\\")
            elif ord(ch) < 0x20:
                out.append("\\u%04x" % ord(ch))
            else:
                out.append(ch)
        out.append('"')
        return "".join(out)
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_to_json(v) for v in obj) + "]"
    if isinstance(obj, dict):
        items = sorted(obj.items())
        return "{" + ",".join(
            _to_json(str(k)) + ":" + _to_json(v) for k, v in items
        ) + "}"
    raise TypeError(f"unserializable report value {obj!r}")


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}{k}.")
    elif isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        yield prefix[:-1], obj


def _scalar_text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return _format_float(v)
    return str(v)


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(_to_json(report) + "\n")
        return
    pairs = list(_flatten(report))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([k for k, _ in pairs])
        writer.writerow([_scalar_text(v) for _, v in pairs])
        sys.stdout.write(buf.getvalue())
        return
    for k, v in pairs:
        sys.stdout.write(f"{k} = {_scalar_text(v)}\n")


def _pair(z: complex) -> list:
    z = complex(z)
    return [z.real, z.imag]


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (exit_code, report_dict)


def _cmd_eval(args, tol):
    value = gamma(args.z if args.z.imag != 0.0 else args.z.real)
    value = complex(value)
    return 0, {
        "z": _pair(args.z),
        "gamma": _pair(value),
        "modulus": abs(value),
    }


def _cmd_verify(args, tol):
    if args.grid is not None:
        count, re_range, im_range = args.grid
        spec = SampleSpec(
            count=count, re_range=re_range, im_range=im_range, seed=args.seed
        )
    elif parse_identity_tag(args.identity)[0] == "comb":
        # real-only identity with domain (0, 1/4): sampling the generic
        # box would leave almost every draw outside the admissible window
        spec = SampleSpec(
            count=args.samples, re_range=(0.0, 0.25), seed=args.seed
        )
    else:
        spec = SampleSpec(count=args.samples, seed=args.seed)
    report: IdentityReport = verify_grid(args.identity, spec, tol)
    return (0 if report.passed else 1), report.to_json_dict()


def _cmd_schlomilch_finite(args, tol):
    lhs = schlomilch.schlomilch_finite_lhs(args.m, args.z)
    rhs = schlomilch.schlomilch_finite_rhs(args.m, args.z)
    residual = abs(lhs - rhs) / max(abs(lhs), abs(rhs))
    ok = residual <= tol
    return (0 if ok else 1), {
        "m": args.m,
        "z": _pair(args.z),
        "lhs": _pair(lhs),
        "rhs": _pair(rhs),
        "residual": residual,
        "tolerance": tol,
        "pass": ok,
    }


def _cmd_schlomilch_general(args, tol):
    w = complex(args.w)
    z = complex(args.z)
    closed = schlomilch.generalized_lhs(w, z)
    series = schlomilch.generalized_series(w, z, tolerance=tol, max_terms=args.max_terms)
    residual = abs(closed - series.value) / max(abs(closed), abs(series.value))
    ok = series.converged and residual <= tol
    return (0 if ok else 1), {
        "w": _pair(w),
        "z": _pair(z),
        "closed_form": _pair(closed),
        "series": series.to_json_dict(),
        "residual": residual,
        "tolerance": tol,
        "pass": ok,
    }


def _cmd_schlomilch_binom(args, tol):
    lhs, rhs, equal = schlomilch.binomial_identity_check(args.m, args.l)
    return (0 if equal else 1), {
        "m": args.m,
        "l": args.l,
        "lhs": str(lhs),
        "rhs": str(rhs),
        "equal": equal,
    }


def _cmd_landau_construct(args, tol):
    fs = landau_construct(args.delta, node_budget=args.node_budget)
    return 0, fs.to_json_dict()


def _trace_report(head: dict, value, trace, reference, tol, membership):
    residual = abs(value - reference) / abs(reference)
    checked = validate_trace(trace, membership)
    ok = residual <= tol
    report = dict(head)
    report.update(
        {
            "value": _pair(value),
            "reference": _pair(reference),
            "residual": residual,
            "direct_leaves": trace.direct_count,
            "nodes": trace.node_count,
            "validated_nodes": checked,
            "tolerance": tol,
            "pass": ok,
        }
    )
    return (0 if ok else 1), report


def _cmd_landau_trace(args, tol):
    fs = landau_construct(args.delta, node_budget=args.node_budget)
    value, trace = trace_evaluate(args.x, fs)
    code, report = _trace_report(
        {"x": str(args.x), "delta": str(args.delta)},
        value,
        trace,
        gamma(float(args.x)),
        tol,
        lambda a: a in fs.leaf_union,
    )
    if args.emit_trace:
        report["trace"] = trace.to_json_dict()
    return code, report


def _cmd_landau_quarter(args, tol):
    value, trace = quarter_set_trace(args.x)
    code, report = _trace_report(
        {"x": args.x},
        value,
        trace,
        gamma(args.x),
        tol,
        quarter_set_membership,
    )
    if args.emit_trace:
        report["trace"] = trace.to_json_dict()
    return code, report


def _cmd_complex_trace(args, tol):
    fs = landau_construct(args.delta, node_budget=args.node_budget)
    z = args.z
    value, trace = complex_reduce_trace(z, fs)

    def membership(a):
        return (
            isinstance(a, complex)
            and abs(a.imag) < 1.0
            and Fraction(a.real) in fs.leaf_union
        )

    code, report = _trace_report(
        {"z": _pair(z), "delta": str(args.delta)},
        value,
        trace,
        gamma(z),
        tol,
        membership,
    )
    if args.emit_trace:
        report["trace"] = trace.to_json_dict()
    return code, report


def _cmd_stern(args, tol):
    independent = stern_mod.independent_count(args.m)
    expected = stern_mod.totient(args.m) // 2
    return (0 if independent == expected else 1), {
        "m": args.m,
        "independent": independent,
        "expected": expected,
    }


def _cmd_closure(args, tol):
    pts = closure_mod.affine_closure(
        args.points, args.depth, args.max_n, budget=args.budget
    )
    K = closure_mod.branching_factor(args.max_n)
    bound = len(args.points) * K**args.depth
    within = len(pts) <= bound
    return (0 if within else 1), {
        "points": [str(p) for p in args.points],
        "depth": args.depth,
        "max_n": args.max_n,
        "K": K,
        "cardinality": len(pts),
        "bound": bound,
        "within_bound": within,
        "elements": [str(p) for p in sorted(pts)],
    }


def _cmd_mellin(args, tol):
    spec = mellin_mod.catalog_entry(args.phi)
    transform = mellin_mod.mellin_transform(spec, args.s)
    closed = mellin_mod.rmt_closed_form(spec, args.s)
    residual = abs(transform - closed) / max(abs(transform), abs(closed))
    ok = residual <= tol
    return (0 if ok else 1), {
        "phi": spec.id,
        "s": args.s,
        "transform": transform,
        "closed_form": closed,
        "residual": residual,
        "tolerance": tol,
        "pass": ok,
    }


# ---------------------------------------------------------------------------
# parser assembly


def _add_common(p, family):
    p.add_argument("--tol", type=float, default=None,
                   help=f"residual tolerance (default {_DEFAULTS[family]:g})")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json",
                   help="report format (default json)")
    p.set_defaults(family=family)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammalab",
        description="Gamma-function identity laboratory: evaluate, verify, "
        "construct fundamental sets, and replay derivation traces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate Gamma at a point")
    p.add_argument("--z", type=_arg_complex, required=True,
                   help="argument, as RE or RE,IM or P/Q")
    _add_common(p, "identities")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("verify", help="residual-check one identity on a seeded sample")
    p.add_argument("--identity", type=_arg_identity, required=True,
                   help="functional|reflection|duplication|comb|mult:N|sine:K|cosine:M")
    p.add_argument("--grid", type=_arg_grid, default=None,
                   help="sample region as count:relo:rehi:imlo:imhi")
    p.add_argument("--samples", type=int, default=200,
                   help="sample count when --grid is not given (default 200)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    _add_common(p, "identities")
    p.set_defaults(handler=_cmd_verify)

    ps = sub.add_parser("schlomilch", help="factorial-series identities")
    ssub = ps.add_subparsers(dest="subcommand", required=True)

    p = ssub.add_parser("finite", help="degree-m finite identity at z")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--z", type=_arg_complex, required=True)
    _add_common(p, "series")
    p.set_defaults(handler=_cmd_schlomilch_finite)

    p = ssub.add_parser("general", help="two-parameter series vs closed form")
    p.add_argument("--w", type=_arg_complex, required=True)
    p.add_argument("--z", type=_arg_complex, required=True)
    p.add_argument("--max-terms", type=int, default=500)
    _add_common(p, "series")
    p.set_defaults(handler=_cmd_schlomilch_general)

    p = ssub.add_parser("binom", help="exact binomial corollary at (m, l)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    _add_common(p, "series")
    p.set_defaults(handler=_cmd_schlomilch_binom)

    pl = sub.add_parser("landau", help="fundamental-set construction and traces")
    lsub = pl.add_subparsers(dest="subcommand", required=True)

    p = lsub.add_parser("construct", help="build the measure-<delta set")
    p.add_argument("--delta", type=_arg_rational, required=True)
    p.add_argument("--node-budget", type=int, default=200_000)
    _add_common(p, "trace")
    p.set_defaults(handler=_cmd_landau_construct)

    p = lsub.add_parser("trace", help="derive Gamma(x) from the constructed set")
    p.add_argument("--x", type=_arg_rational, required=True)
    p.add_argument("--delta", type=_arg_rational, required=True)
    p.add_argument("--node-budget", type=int, default=200_000)
    p.add_argument("--emit-trace", action="store_true",
                   help="include the full derivation tree in the report")
    _add_common(p, "trace")
    p.set_defaults(handler=_cmd_landau_trace)

    p = lsub.add_parser("quarter", help="derive Gamma(x) from (0,1/4] + {1/3, 1}")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--emit-trace", action="store_true")
    _add_common(p, "trace")
    p.set_defaults(handler=_cmd_landau_quarter)

    p = sub.add_parser("stern", help="count independent log-gamma values mod m")
    p.add_argument("--m", type=int, required=True)
    _add_common(p, "identities")
    p.set_defaults(handler=_cmd_stern)

    p = sub.add_parser("closure", help="finite affine closure of rational points")
    p.add_argument("--points", type=_arg_points, required=True,
                   help="comma-separated rationals, e.g. 1/3,2/5")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--budget", type=int, default=100_000)
    _add_common(p, "identities")
    p.set_defaults(handler=_cmd_closure)

    p = sub.add_parser("mellin", help="master-theorem residual for a catalog phi")
    p.add_argument("--phi", required=True, help="one|geom:A|exp|log1p")
    p.add_argument("--s", type=float, required=True)
    _add_common(p, "mellin")
    p.set_defaults(handler=_cmd_mellin)

    p = sub.add_parser("complex-trace", help="reduce Gamma(z) to strip evaluations")
    p.add_argument("--z", type=_arg_complex, required=True,
                   help="RE,IM (use --z=RE,IM when RE is negative)")
    p.add_argument("--delta", type=_arg_rational, required=True)
    p.add_argument("--node-budget", type=int, default=200_000)
    p.add_argument("--emit-trace", action="store_true")
    _add_common(p, "complex_trace")
    p.set_defaults(handler=_cmd_complex_trace)

    return parser


def _resolve_tolerance(parser, args) -> float:
    if args.tol is not None:
        if not args.tol > 0:
            parser.error(f"--tol must be > 0, got {args.tol}")
        return args.tol
    env = os.environ.get("GAMMALAB_TOL")
    if env is not None:
        try:
            tol = float(env)
        except ValueError:
            parser.error(f"GAMMALAB_TOL is not a number: {env!r}")
        if not tol > 0:
            parser.error(f"GAMMALAB_TOL must be > 0, got {env!r}")
        return tol
    return _DEFAULTS[args.family]


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    tol = _resolve_tolerance(parser, args)
    try:
        code, report = args.handler(args, tol)
    except tuple(exc for exc, _ in _ERROR_KINDS) as exc:
        for exc_type, kind in _ERROR_KINDS:
            if isinstance(exc, exc_type):
                _emit({"error": kind, "detail": str(exc)}, args.format)
                return 1
        raise  # pragma: no cover
    _emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
