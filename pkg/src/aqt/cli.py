"""
Command line: aqt <subcommand> [options].

Exit status is 0 on success, 1 when a verification finds a mismatch and 2 on
bad input (the message names the violated invariant).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import comb

from . import arr, paths, qt, regions, stats, verify
from .afperm import Window
from .errors import AqtError, BudgetExceeded, UnknownFamily

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
DESK_LIMIT = 10 ** 6


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _csv(header: list, rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _fmt(args) -> str:
    return args.format or "json"


def _pairs(text: str | None) -> list[tuple[int, int]] | None:
    if not text:
        return None
    try:
        return [tuple(int(x) for x in item.split(":")) for item in text.split(",")]
    except ValueError:
        raise UsageError(f"bad --pairs {text!r}; expected n:m,n:m,...") from None


# subcommands: each returns (text, exit status)

def cmd_stat(args) -> tuple[str, int]:
    w = Window.parse(args.window, args.n)
    rec = stats.record(w, args.m_max)
    if _fmt(args) == "csv":
        flat = {k: v for k, v in rec.items() if k != "shi_m"}
        flat.update({f"shi_m{k}": v for k, v in rec["shi_m"].items()})
        keys = sorted(flat)
        row = [",".join(map(str, v)) if isinstance(v, list) else v for v in (flat[k] for k in keys)]
        return _csv(keys, [row]), EXIT_OK
    if _fmt(args) == "pretty":
        lines = [f"{k:>20}  {rec[k]}" for k in sorted(rec)]
        return "\n".join(lines), EXIT_OK
    return _dump(rec), EXIT_OK


def _source(args):
    p = args.m * args.n - 1 if args.negative else args.m * args.n + 1
    size = p ** (args.n - 1)
    if size > min(args.budget, DESK_LIMIT):
        raise BudgetExceeded(f"D^{p}({args.n}) has {size} alcoves, over the cap")
    ws = regions.shi_source(args.n, args.m, args.negative, args.positive_only, args.budget)
    return qt.genfun(ws, args.m, args.negative)


def cmd_table(args) -> tuple[str, int]:
    g = _source(args)
    mat = g.matrix(qt.t_offset(args.n, args.m, args.negative))
    cols = list(range(len(mat[0]) if mat else 0))
    if _fmt(args) == "csv":
        return _csv(["shi\\ish_inv"] + cols, [[r] + row for r, row in enumerate(mat)]), EXIT_OK
    if _fmt(args) == "pretty":
        width = max(len(str(x)) for row in mat for x in row + cols)
        head = "    | " + " ".join(f"{c:>{width}}" for c in cols)
        body = [f"{r:>3} | " + " ".join(f"{x if x else '':>{width}}" for x in row)
                for r, row in enumerate(mat)]
        return "\n".join([head, "-" * len(head)] + body), EXIT_OK
    return _dump({"n": args.n, "m": args.m, "negative": args.negative,
                  "positive_only": args.positive_only, "matrix": mat}), EXIT_OK


def cmd_genfun(args) -> tuple[str, int]:
    g = _source(args)
    off = qt.t_offset(args.n, args.m, args.negative)
    spec = qt.specialize_antidiagonal(g, off)
    if _fmt(args) == "pretty":
        return f"{g}\nq^{off} * F(q, 1/q) = {spec}", EXIT_OK
    if _fmt(args) == "csv":
        return _csv(["q_exp", "t_exp", "coeff"], g.to_json()["terms"]), EXIT_OK
    return _dump({"n": args.n, "m": args.m, "negative": args.negative,
                  "positive_only": args.positive_only, "t_offset": off,
                  "terms": g.to_json()["terms"], "antidiagonal": list(spec.coeffs),
                  "symmetric": qt.is_qt_symmetric(g)}), EXIT_OK


def cmd_enumerate(args) -> tuple[str, int]:
    if args.p is not None:
        ws = regions.enumerate_simplex(regions.SimplexSpec(args.n, args.p), args.budget)
        if _fmt(args) == "csv":
            return _csv(["window"], [[str(w)] for w in ws]), EXIT_OK
        if _fmt(args) == "pretty":
            return "\n".join(f"[{w}]" for w in ws), EXIT_OK
        return _dump({"p": args.p, "n": args.n, "alcoves": [list(w.values) for w in ws]}), EXIT_OK
    chambers = regions.enumerate_chambers(args.n, args.m, args.budget)
    rows = [[c.descriptor.digest(), str(c.minimum), c.length,
             regions.is_bounded_chamber(c.descriptor)] for c in chambers]
    if _fmt(args) == "json":
        keys = ["descriptor_hash", "min_window", "length", "bounded"]
        out = [dict(zip(keys, r)) for r in rows]
        for d, c in zip(out, chambers):
            d["min_window"] = list(c.minimum.values)
        return _dump({"n": args.n, "m": args.m, "chambers": out}), EXIT_OK
    rows = [[h, w, ln, str(b).lower()] for h, w, ln, b in rows]
    return _csv(["descriptor-hash", "min-window", "length", "bounded"], rows), EXIT_OK


def _charpoly(args) -> tuple[dict, qt.QPoly]:
    if args.family not in arr.FAMILIES:
        raise UnknownFamily(f"unknown family {args.family!r}")
    a = arr.build(args.family, args.n, args.m)
    if args.n > 5:
        raise BudgetExceeded("finite-field counting is capped at n <= 5")
    chi = arr.charpoly_ff(a)
    out = {"family": args.family, "n": args.n, "coeffs": list(chi.coeffs)}
    if args.m is not None:
        out["m"] = args.m
    return out, chi


def cmd_charpoly(args) -> tuple[str, int]:
    out, chi = _charpoly(args)
    if _fmt(args) == "pretty":
        return f"{chi}", EXIT_OK
    if _fmt(args) == "csv":
        return _csv(["degree", "coeff"], list(enumerate(chi.coeffs))), EXIT_OK
    return _dump(out), EXIT_OK


def cmd_counts(args) -> tuple[str, int]:
    out, chi = _charpoly(args)
    out["chambers"], out["bounded"] = arr.zaslavsky_counts(chi, args.n)
    if _fmt(args) == "csv":
        return _csv(["chambers", "bounded"], [[out["chambers"], out["bounded"]]]), EXIT_OK
    if _fmt(args) == "pretty":
        return f"{out['chambers']} chambers, {out['bounded']} bounded", EXIT_OK
    return _dump(out), EXIT_OK


def _path_record(w: Window, p: paths.LabeledPath) -> dict:
    return {"window": list(w.values), "path": p.to_json(), "shi": stats.shi(w),
            "ish": stats.ish(w), "area_prime": paths.area_prime(p),
            "bounce": paths.bounce(p.ideal)}


def cmd_bijection(args) -> tuple[str, int]:
    if args.window:
        w = Window.parse(args.window, args.n)
        pairs = [(w, paths.to_labeled_path(w))]
    elif args.labels:
        labels = tuple(int(x) for x in args.labels.split(","))
        gens = []
        for item in (args.gens or "").split(","):
            if item.strip():
                i, j = item.split("-")
                gens.append((int(i), int(j)))
        ideal = paths.ideal_from_minimal_roots(len(labels), gens)
        p = paths.LabeledPath(labels, ideal)
        pairs = [(paths.from_labeled_path(p), p)]
    else:
        chambers = regions.enumerate_chambers(args.n, 1, args.budget)
        pairs = [(c.minimum, paths.to_labeled_path(c.minimum)) for c in chambers]
    recs = [_path_record(w, p) for w, p in pairs]
    bad = sum(1 for r in recs
              if (comb(len(r["window"]), 2) - r["shi"], r["ish"]) != (r["area_prime"], r["bounce"]))
    status = EXIT_MISMATCH if bad else EXIT_OK
    if _fmt(args) == "pretty":
        blocks = [f"[{w}]  shi={r['shi']} ish={r['ish']}\n{paths.render(p)}"
                  for (w, p), r in zip(pairs, recs)]
        return "\n\n".join(blocks), status
    if _fmt(args) == "csv":
        rows = [[",".join(map(str, r["window"])), ",".join(map(str, r["path"]["w"])),
                 ";".join(f"{a}-{b}" for a, b in r["path"]["ideal"]), r["shi"], r["ish"],
                 r["area_prime"], r["bounce"]] for r in recs]
        return _csv(["window", "labels", "ideal", "shi", "ish", "area_prime", "bounce"], rows), status
    return _dump({"records": recs, "mismatches": bad}), status


def cmd_verify(args) -> tuple[str, int]:
    bounds = verify.Bounds(n_max=args.n_max, pairs=_pairs(args.pairs), seed=args.seed,
                           budget=args.budget)
    if args.samples is not None:
        bounds.samples = args.samples
    report = verify.run(args.suite, bounds)
    status = EXIT_OK if report.ok else EXIT_MISMATCH
    if _fmt(args) == "pretty":
        lines = [f"suite {report.suite}: {'ok' if report.ok else 'MISMATCH'}"]
        for c in report.cases:
            lines.append(f"  {c.status:<17} {c.claim} {_dump(c.parameters)}")
        return "\n".join(lines), status
    if _fmt(args) == "csv":
        rows = [[c.claim, _dump(c.parameters), c.status, _dump(c.expected), _dump(c.actual)]
                for c in report.cases]
        return _csv(["claim", "parameters", "status", "expected", "actual"], rows), status
    return _dump(report.to_json()), status


def _family_args(sp):
    sp.add_argument("--family", required=True, help=f"one of {', '.join(arr.FAMILIES)}")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, default=None)


def _source_args(sp):
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--negative", action="store_true", help="use D^{mn-1}(n)")
    sp.add_argument("--positive-only", action="store_true",
                    help="keep alcoves whose inverse is dominant")


def _common(suffix: str) -> argparse.ArgumentParser:
    # the flags may sit before or after the subcommand; each position gets its own dest
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    for name in ("json", "csv", "pretty"):
        fmt.add_argument(f"--{name}", dest="format" + suffix, action="store_const", const=name)
    common.add_argument("--seed", dest="seed" + suffix, type=int, metavar="SEED")
    common.add_argument("--budget", dest="budget" + suffix, type=int, metavar="N",
                        help="cap on enumerated alcoves")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aqt", parents=[_common("")],
                                     description="Affine permutation statistics and checks.")
    common = _common("_sub")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("stat", parents=[common], help="statistics of one window")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--window", required=True,
                    help='e.g. "1,5,0"; use --window=-1,4,3 when the first entry is negative')
    sp.add_argument("--m-max", type=int, default=None)
    sp.set_defaults(func=cmd_stat)

    sp = sub.add_parser("table", parents=[common], help="joint (shi^m, ish^-1) matrix")
    _source_args(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("genfun", parents=[common], help="q,t generating function")
    _source_args(sp)
    sp.set_defaults(func=cmd_genfun)

    sp = sub.add_parser("enumerate", parents=[common], help="simplex alcoves or Shi^m chambers")
    sp.add_argument("--n", type=int, required=True)
    what = sp.add_mutually_exclusive_group(required=True)
    what.add_argument("--p", type=int, help="alcoves of D^p(n)")
    what.add_argument("--m", type=int, help="chambers of Shi^m(n)")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial")
    _family_args(sp)
    sp.set_defaults(func=cmd_charpoly)

    sp = sub.add_parser("counts", parents=[common], help="chamber counts from the charpoly")
    _family_args(sp)
    sp.set_defaults(func=cmd_counts)

    sp = sub.add_parser("bijection", parents=[common], help="Shi chambers and labeled paths")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--window", help="a representing alcove")
    sp.add_argument("--labels", help="labeled path permutation, e.g. 3,1,2")
    sp.add_argument("--gens", help='minimal roots of the ideal, e.g. "1-3,2-4"')
    sp.set_defaults(func=cmd_bijection)

    sp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    sp.add_argument("--suite", required=True, choices=verify.SUITES)
    sp.add_argument("--n-max", type=int, default=None)
    sp.add_argument("--pairs", help="(n, m) pairs, e.g. 3:2,4:2")
    sp.add_argument("--samples", type=int, default=None, help="random windows")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    defaults = {"format": None, "seed": 0, "budget": regions.DEFAULT_BUDGET}
    for key, default in defaults.items():
        sub = getattr(args, key + "_sub")
        top = getattr(args, key)
        setattr(args, key, sub if sub is not None else top if top is not None else default)
    if args.command == "bijection" and not (args.window or args.labels) and args.n is None:
        print("aqt bijection: give --n, --window or --labels", file=sys.stderr)
        return EXIT_USAGE
    try:
        text, status = args.func(args)
    except (AqtError, UsageError, ValueError) as exc:
        print(f"aqt {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
