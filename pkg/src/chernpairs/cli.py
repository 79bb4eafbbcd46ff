"""Command line front end.

Exit codes: 0 on success (and a passing ``verify``), 1 when ``verify``
finds a failure, 2 on usage or input errors.  Defaults for ``--prime`` and
``--seed`` come from ``CHERN_PRIME`` / ``CHERN_SEED`` when set; explicit
flags win.

TSV columns of ``table``: ``y status case t l``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import chern as cl
from .globalgen import is_gg
from .linalg import DEFAULT_PRIME
from .luroth import luroth_gaps
from .pointfile import PointFileError, load_point_set
from .points import (
    h0_ideal,
    h1_ideal,
    hilbert_function,
    is_cb,
    numerical_character,
)

FORMATS = ("plain", "tsv", "json")


class UsageError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not an integer") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _opt(v) -> str:
    return "-" if v is None else str(v)


def cmd_classify(args, out):
    res = cl.classify(args.c, args.y)
    if args.format == "json":
        print(_dump(res.as_dict()), file=out)
        return 0
    verdict = "effective" if res.effective else "gap"
    if args.format == "tsv":
        print("\t".join(["c", "y", "status", "case", "t", "l"]), file=out)
        print("\t".join(map(str, [args.c, args.y, verdict, res.case.value, _opt(res.t), _opt(res.l)])), file=out)
        return 0
    if not args.explain:
        print(verdict, file=out)
        return 0
    parts = [verdict, f"case={res.case.value}"]
    if res.t is not None:
        parts.append(f"t={res.t}")
    if res.split_a is not None:
        parts.append(f"split={res.split_a}x{args.c - res.split_a}")
    if res.l is not None:
        parts.append(f"l={res.l}")
    if res.luroth_gap is not None:
        a, lo, hi = res.luroth_gap
        parts.append(f"luroth_gap=LS({res.t - 1})[a={a}]:[{lo},{hi}]")
    elif res.l is not None and res.l < 0:
        parts.append("luroth_gap=negative_degree")
    if res.dual_y is not None:
        parts.append(f"dual_y={res.dual_y}")
    print(" ".join(parts), file=out)
    return 0


def cmd_table(args, out):
    if args.c < 0:
        raise UsageError("c must be >= 0")
    rows = [cl.classify(args.c, y) for y in range(args.c * args.c + 1)]
    if args.format == "json":
        print(_dump([r.as_dict() for r in rows]), file=out)
        return 0
    sep = "\t" if args.format == "tsv" else " "
    if args.format == "tsv":
        print(sep.join(["y", "status", "case", "t", "l"]), file=out)
    for r in rows:
        status = "effective" if r.effective else "gap"
        print(sep.join([str(r.pair.y), status, r.case.value, _opt(r.t), _opt(r.l)]), file=out)
    return 0


def cmd_gaps(args, out):
    if args.c < 0:
        raise UsageError("c must be >= 0")
    cc = args.c * args.c
    ys = cl.gap_set(args.c).values()
    if args.format == "json":
        print(_dump([{"window_gap": y, "dual_gap": cc - y} for y in ys]), file=out)
        return 0
    if args.format == "tsv":
        print("window_gap\tdual_gap", file=out)
        for y in ys:
            print(f"{y}\t{cc - y}", file=out)
        return 0
    for y in ys:
        print(f"{y} {cc - y}", file=out)
    return 0


def cmd_luroth(args, out):
    if args.d < 1:
        raise UsageError("d must be >= 1")
    gaps = luroth_gaps(args.d)
    if args.format == "json":
        print(_dump([list(iv) for iv in gaps]), file=out)
    elif args.format == "tsv":
        print("lo\thi", file=out)
        for lo, hi in gaps:
            print(f"{lo}\t{hi}", file=out)
    elif gaps:
        print(str(gaps), file=out)
    return 0


def cmd_bidegrees(args, out):
    if args.c < 1:
        raise UsageError("c must be >= 1")
    pairs = cl.bidegrees(args.c)
    emb = set(cl.embedding_bidegrees(args.c))
    if args.format == "json":
        print(_dump({"c": args.c, "bidegrees": [list(p) for p in pairs], "embedding": [list(p) for p in sorted(emb)]}), file=out)
        return 0
    sep = "\t" if args.format == "tsv" else " "
    if args.format == "tsv":
        print(sep.join(["y", "c2_minus_y", "embedding"]), file=out)
    for y, z in pairs:
        print(sep.join([str(y), str(z), "yes" if (y, z) in emb else "no"]), file=out)
    return 0


def _pt(pt) -> list[str]:
    return [str(x) for x in pt]


def cmd_points(args, out):
    Z = load_point_set(args.file)
    what = args.what
    if what in ("cb", "gg") and args.degree is None:
        raise UsageError(f"'points {what}' needs --degree")
    if what == "hilbert":
        top = args.degree if args.degree is not None else Z.degree
        H = hilbert_function(Z, top)
        ns = [args.degree] if args.degree is not None else list(range(top + 1))
        rows = [{"n": n, "hilbert": H[n], "h0_ideal": h0_ideal(Z, n), "h1_ideal": h1_ideal(Z, n)} for n in ns]
        if args.format == "json":
            print(_dump({"degree": Z.degree, "rows": rows}), file=out)
        else:
            sep = "\t" if args.format == "tsv" else " "
            if args.format == "tsv":
                print(sep.join(["n", "hilbert", "h0_ideal", "h1_ideal"]), file=out)
            for r in rows:
                print(sep.join(str(r[k]) for k in ("n", "hilbert", "h0_ideal", "h1_ideal")), file=out)
        return 0
    if what == "character":
        ch = numerical_character(Z)
        if args.format == "json":
            print(_dump({"character": list(ch.entries), "sigma": ch.sigma, "degree": Z.degree}), file=out)
        else:
            print(str(ch), file=out)
        return 0
    if what == "cb":
        res = is_cb(Z, args.degree)
        report = {"degree": args.degree, "holds": res.holds, "witness": None}
        if res.witness is not None:
            pt, curve = res.witness
            report["witness"] = {"point": _pt(pt), "curve": [str(c) for c in curve.coefficients]}
        if args.format == "json":
            print(_dump(report), file=out)
        else:
            print("true" if res.holds else "false", file=out)
            if res.witness is not None:
                pt, curve = res.witness
                print(f"witness point=({':'.join(_pt(pt))}) curve={curve}", file=out)
        return 0
    res = is_gg(Z, args.degree, seed=args.seed)
    report = {"degree": args.degree, "verdict": res.verdict.value, "point": _pt(res.point) if res.point else None}
    report.update(res.details)
    if args.format == "json":
        print(_dump(report), file=out)
    else:
        print(res.verdict.value, file=out)
        if res.point is not None:
            print(f"point=({':'.join(_pt(res.point))})", file=out)
    return 0


def cmd_verify(args, out):
    from .verify import Config, run_all, validate

    cfg = Config(seed=args.seed, max_c=args.max_c, trials=args.trials, prime=args.prime)
    try:
        validate(cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    results = run_all(cfg)
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        print(
            _dump(
                {
                    "config": vars(cfg),
                    "suites": [
                        {"name": r.name, "passed": r.passed, "failed": r.failed, "informative": r.informative, "notes": r.notes}
                        for r in results
                    ],
                    "ok": not failed,
                }
            ),
            file=out,
        )
    else:
        print(f"verify seed={cfg.seed} max_c={cfg.max_c} trials={cfg.trials} prime={cfg.prime}", file=out)
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            extra = f" informative={r.informative}" if r.informative is not None else ""
            print(f"{status} {r.name} passed={r.passed} failed={r.failed}{extra}", file=out)
            for note in r.notes:
                print(f"    {note}", file=out)
        print("all suites passed" if not failed else f"{len(failed)} suite(s) failed", file=out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chernpairs",
        description="Chern classes of globally generated rank two bundles on P^2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, default):
        p.add_argument("--format", choices=FORMATS, default=default)

    p = sub.add_parser("classify", help="decide one pair (c, y)")
    p.add_argument("c", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--explain", action="store_true")
    fmt(p, "plain")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="classify every y in [0, c^2]")
    p.add_argument("c", type=int)
    fmt(p, "tsv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gaps", help="window gaps with their dual images")
    p.add_argument("c", type=int)
    fmt(p, "plain")
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("luroth", help="gap intervals of the Lüroth semigroup LS(d)")
    p.add_argument("d", type=int)
    fmt(p, "plain")
    p.set_defaults(func=cmd_luroth)

    p = sub.add_parser("bidegrees", help="bidegrees (y, c^2 - y) and the embedding cases")
    p.add_argument("c", type=int)
    fmt(p, "plain")
    p.set_defaults(func=cmd_bidegrees)

    p = sub.add_parser("points", help="invariants of a point-set file")
    p.add_argument("what", choices=("hilbert", "character", "cb", "gg"))
    p.add_argument("file")
    p.add_argument("--degree", "-n", type=int)
    p.add_argument("--seed", type=int, default=None)
    fmt(p, "plain")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("verify", help="run every property suite")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-c", type=int, default=100)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--prime", type=int, default=None)
    fmt(p, "plain")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _env_int("CHERN_SEED", 0)
        if getattr(args, "prime", 0) is None:
            args.prime = _env_int("CHERN_PRIME", DEFAULT_PRIME)
        return args.func(args, out)
    except (UsageError, PointFileError) as exc:
        print(f"chernpairs: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"chernpairs: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
