"""Command-line front end.

Exit codes: 0 success, 1 identity failure or round-trip mismatch, 2 usage
error (bad flags or malformed input objects), 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import identities
from .bijections import (
    PHI_ALPHABET,
    SigmaAlphabet,
    Word,
    elevate,
    elevate_inverse,
    multi_elevate,
    multi_elevate_inverse,
    phi,
    phi_inverse,
    sigma,
    sigma_inverse,
)
from .compositions import Composition, enumerate_compositions
from .errors import EnumerationLimitError, MotzkinError
from .marked import MarkedPartialPath, enumerate_marked_paths
from .matrices import recurrence_matrix, riordan_matrix, weighted_riordan_array
from .paths import (
    DEFAULT_ENUMERATION_CAP,
    LatticePath,
    PathClass,
    PathKind,
    WeightSpec,
    count_paths,
    count_weighted,
    enumerate_paths,
    enumeration_cap,
    weight,
)
from .series import rational_series, solve_motzkin_gf

ENV_CAP = "MF_ENUM_CAP"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

MAPS = ("phi", "phi-inv", "elevate", "elevate-inv", "multi-elevate", "multi-elevate-inv", "sigma", "sigma-inv")
ROUNDTRIP_MAPS = ("phi", "elevate", "multi-elevate", "sigma")


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--cap", type=_nonneg, default=None,
                        help=f"enumeration cap (default ${ENV_CAP} or {DEFAULT_ENUMERATION_CAP})")

    parser = argparse.ArgumentParser(prog="weighted-motzkin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count and enumerate paths")
    p.add_argument("--class", dest="path_class", required=True, choices=[k.value for k in PathKind])
    p.add_argument("--length", type=_nonneg, required=True)
    p.add_argument("--end-level", type=int)
    p.add_argument("--a", type=_nonneg, help="horizontal weight")
    p.add_argument("--b", type=_positive, help="down weight")
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--colors", type=_nonneg, help="up-step colors of a colored Dyck path")
    p.add_argument("--horizontal-colors", type=_positive)
    p.add_argument("--list", action="store_true", help="print every path")

    p = sub.add_parser("matrix", parents=[common], help="build a triangular matrix")
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--rows", type=_nonneg, required=True)
    p.add_argument("--method", choices=("recurrence", "riordan", "colored"), default="recurrence")

    p = sub.add_parser("verify", parents=[common], help="verify an identity")
    p.add_argument("--identity", required=True, choices=sorted(identities.IDENTITIES))
    for name in ("k", "t", "rows", "i", "m"):
        p.add_argument(f"--{name}", type=int)

    p = sub.add_parser("biject", parents=[common], help="apply a bijection to one object")
    p.add_argument("--map", required=True, choices=MAPS)
    p.add_argument("--input", help="JSON file (default: standard input)")
    p.add_argument("--t", type=int, help="color parameter for sigma")

    p = sub.add_parser("roundtrip", parents=[common], help="exhaustive round trip of a bijection")
    p.add_argument("--map", required=True, choices=ROUNDTRIP_MAPS)
    p.add_argument("--max-length", type=_nonneg, required=True, help="maximum path length in steps")
    p.add_argument("--t", type=int, default=2, help="color parameter for sigma")
    p.add_argument("--a", type=_nonneg, default=2)
    p.add_argument("--b", type=_positive, default=1)
    p.add_argument("--m", type=_nonneg, default=2, help="maximum number of marks")

    p = sub.add_parser("series", parents=[common], help="print series coefficients")
    p.add_argument("--kind", choices=("motzkin", "rational"), required=True)
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--numer", type=_int_list, default=[1])
    p.add_argument("--denom", type=_int_list)
    p.add_argument("--order", type=_nonneg, default=10)
    return parser


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _csv_line(values) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(values)
    return buf.getvalue()


def _weights(args) -> WeightSpec:
    if args.k is not None or args.t is not None:
        if args.k is None or args.t is None or args.a is not None or args.b is not None:
            raise UsageError("give either --k and --t, or --a and --b")
        return WeightSpec.from_kt(args.k, args.t)
    return WeightSpec(1 if args.a is None else args.a, 1 if args.b is None else args.b)


def cmd_count(args, out) -> int:
    kind = PathKind(args.path_class)
    if kind is PathKind.COLORED_DYCK:
        if args.colors is None:
            raise UsageError("colored-dyck needs --colors")
        cls = PathClass.colored_dyck(args.colors)
    else:
        if args.colors is not None:
            raise UsageError("--colors only applies to colored-dyck")
        cls = PathClass(kind, horizontal_colors=args.horizontal_colors)
    cls = cls.with_end_level(args.end_level)
    w = _weights(args)
    if args.list:
        paths = list(enumerate_paths(cls, args.length))
        if args.format == "json":
            _emit(out, _dump({"paths": [str(p) for p in paths]}))
        elif args.format == "csv":
            out.write("".join(_csv_line([str(p), weight(p, w)]) for p in paths))
        else:
            out.write("".join(f"{p}\n" for p in paths))
        return EXIT_OK
    result = {
        "class": kind.value,
        "length": args.length,
        "end_level": cls.target,
        "a": w.a,
        "b": w.b,
        "count": count_paths(cls, args.length),
        "weighted": count_weighted(cls, args.length, weights=w),
    }
    if args.format == "json":
        _emit(out, _dump(result))
    elif args.format == "csv":
        out.write(_csv_line(result.keys()) + _csv_line(result.values()))
    else:
        out.write("".join(f"{k}: {v}\n" for k, v in result.items()))
    return EXIT_OK


def cmd_matrix(args, out) -> int:
    if args.method == "colored":
        M = identities.colored_matrix(args.t, args.rows)
    else:
        if args.k is None:
            raise UsageError(f"--method {args.method} needs --k")
        if args.method == "recurrence":
            M = recurrence_matrix(args.k, args.t, args.rows)
        else:
            M = riordan_matrix(weighted_riordan_array(args.k, args.t, max(args.rows - 1, 1)), args.rows)
    if args.format == "json":
        _emit(out, _dump(M.to_json()))
    elif args.format == "csv":
        out.write(M.to_csv())
    elif M.size:
        _emit(out, str(M))
    return EXIT_OK


_VERIFY_PARAMS = {
    "weighted": ("k", "t", "rows"),
    "rooted-sum": ("i",),
    "cameron": ("i", "m"),
    "cameron-general": ("i", "m", "k"),
    "colored": ("t", "rows"),
    "cross-check": ("k", "t", "rows"),
}


def cmd_verify(args, out) -> int:
    names = _VERIFY_PARAMS[args.identity]
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"identity {args.identity} needs {' '.join(missing)}")
    extra = [f"--{n}" for n in ("k", "t", "rows", "i", "m") if n not in names and getattr(args, n) is not None]
    if extra:
        raise UsageError(f"identity {args.identity} does not take {' '.join(extra)}")
    report = identities.IDENTITIES[args.identity](*(getattr(args, n) for n in names))
    if args.format == "json":
        _emit(out, report.dumps())
    elif args.format == "csv":
        out.write(_csv_line(["i", "lhs", "rhs", "verdict", "methods", "skipped"]))
        for r in report.rows:
            d = r.to_json()
            out.write(_csv_line([d["i"], d["lhs"], d["rhs"], d["verdict"], " ".join(d["methods"]), " ".join(d["skipped"])]))
    else:
        out.write("".join(line + "\n" for line in report.lines()))
        _emit(out, f"{report.identity}: {'PASS' if report.passed else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _read_input(args, stdin):
    text = open(args.input, encoding="utf-8").read() if args.input else stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text.strip()


def _need_t(args) -> int:
    if args.t is None:
        raise UsageError(f"--map {args.map} needs --t")
    return args.t


def _word_text(obj) -> str:
    if isinstance(obj, dict):
        obj = obj.get("word")
    if not isinstance(obj, str):
        raise UsageError("expected a word as a JSON string or {\"word\": ...}")
    return obj


def cmd_biject(args, out, stdin) -> int:
    obj = _read_input(args, stdin)
    name = args.map
    if name == "phi":
        result = phi(Composition.from_json(obj))
    elif name == "phi-inv":
        result = phi_inverse(Word.parse(_word_text(obj), PHI_ALPHABET))
    elif name == "elevate":
        if not isinstance(obj, dict) or "line" not in obj:
            raise UsageError('elevate expects {"path": ..., "line": p}')
        result = elevate(LatticePath.from_json(obj["path"]), int(obj["line"]))
    elif name == "elevate-inv":
        q, line = elevate_inverse(LatticePath.from_json(obj))
        result = {"path": q.to_json(), "line": line}
    elif name == "multi-elevate":
        result = multi_elevate(MarkedPartialPath.from_json(obj))
    elif name == "multi-elevate-inv":
        result = multi_elevate_inverse(LatticePath.from_json(obj))
    elif name == "sigma":
        result = sigma(Composition.from_json(obj), _need_t(args))
    else:
        t = _need_t(args)
        result = sigma_inverse(Word.parse(_word_text(obj), SigmaAlphabet(t)), t)

    if isinstance(result, Word):
        _emit(out, _dump({"word": str(result)}) if args.format == "json" else str(result))
    elif isinstance(result, LatticePath):
        _emit(out, _dump(result.to_json()) if args.format == "json" else str(result))
    elif isinstance(result, dict):
        _emit(out, _dump(result))
    else:
        _emit(out, _dump(result.to_json()))
    return EXIT_OK


def _roundtrip_rows(args):
    """Yield (length, domain size, image size, mismatches) per length."""
    n_max = args.max_length
    if args.map in ("phi", "sigma"):
        t = args.t
        for n in range(2, n_max + 1, 2):
            if args.map == "phi":
                dom = list(enumerate_compositions(n, rooted=True))
                fwd, inv = phi, phi_inverse
            else:
                dom = list(enumerate_compositions(n, color_count=t * t - t, t=t))
                fwd, inv = (lambda c: sigma(c, t)), (lambda w: sigma_inverse(w, t))
            images = [fwd(c) for c in dom]
            bad = sum(1 for c, w in zip(dom, images) if inv(w) != c or len(w) != n // 2 - 1)
            words = {str(w) for w in images}
            yield n, len(dom), len(words), bad
    elif args.map == "elevate":
        w = WeightSpec(args.a, args.b)
        for n in range(n_max + 1):
            bad = dom = 0
            images = set()
            for p in enumerate_paths(PathClass.partial_motzkin(), n):
                for line in range(p.end_level + 1):
                    dom += 1
                    f = elevate(p, line)
                    images.add(str(f))
                    if elevate_inverse(f) != (p, line) or weight(f, w) != w.b**line * weight(p, w):
                        bad += 1
            for f in enumerate_paths(PathClass.free_motzkin(), n):
                if elevate(*elevate_inverse(f)) != f:
                    bad += 1
            yield n, dom, len(images), bad
    else:
        free = PathClass.free_motzkin(horizontal_colors=3)
        for n in range(n_max + 1):
            bad = dom = 0
            images = set()
            for m in range(args.m + 1):
                for mp in enumerate_marked_paths(n, m):
                    dom += 1
                    f = multi_elevate(mp)
                    images.add(str(f))
                    if multi_elevate_inverse(f) != mp:
                        bad += 1
            for f in enumerate_paths(free, n):
                if f.count("H", 3) <= args.m and multi_elevate(multi_elevate_inverse(f)) != f:
                    bad += 1
            yield n, dom, len(images), bad


def cmd_roundtrip(args, out) -> int:
    rows = list(_roundtrip_rows(args))
    ok = all(bad == 0 and dom == img for _, dom, img, bad in rows)
    if args.format == "json":
        _emit(out, _dump({
            "map": args.map,
            "rows": [{"length": n, "objects": d, "images": i, "mismatches": b} for n, d, i, b in rows],
            "passed": ok,
        }))
    elif args.format == "csv":
        out.write(_csv_line(["length", "objects", "images", "mismatches"]))
        out.write("".join(_csv_line(r) for r in rows))
    else:
        out.write("".join(f"length={n:<3} objects={d}  images={i}  mismatches={b}\n" for n, d, i, b in rows))
        _emit(out, f"{args.map}: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_series(args, out) -> int:
    if args.kind == "motzkin":
        if args.alpha is None or args.beta is None:
            raise UsageError("--kind motzkin needs --alpha and --beta")
        s = solve_motzkin_gf(args.alpha, args.beta, args.order)
    else:
        if args.denom is None:
            raise UsageError("--kind rational needs --denom")
        s = rational_series(args.numer, args.denom, args.order)
    if args.format == "json":
        _emit(out, _dump(s.to_json()))
    elif args.format == "csv":
        out.write(_csv_line(str(c) for c in s.coefficients))
    else:
        out.write("".join(f"{n} {c}\n" for n, c in enumerate(s.coefficients)))
    return EXIT_OK


def _cap_from(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get(ENV_CAP)
    if env is None:
        return DEFAULT_ENUMERATION_CAP
    try:
        cap = int(env)
    except ValueError:
        raise UsageError(f"{ENV_CAP} must be an integer, got {env!r}") from None
    if cap < 0:
        raise UsageError(f"{ENV_CAP} must be nonnegative")
    return cap


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    handlers = {
        "count": cmd_count,
        "matrix": cmd_matrix,
        "verify": cmd_verify,
        "roundtrip": cmd_roundtrip,
        "series": cmd_series,
    }
    try:
        with enumeration_cap(_cap_from(args)):
            if args.command == "biject":
                return cmd_biject(args, stdout, stdin)
            return handlers[args.command](args, stdout)
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CAP
    except (UsageError, MotzkinError, OSError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
