"""``cantorval`` command line: classify, sweep, verify and render."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import central, oracle, render, scantor
from .digitset import DigitSet
from .scantor import SCantorParams

SCHEMA = 1
DEFAULT_DEPTH = {"central": 6, "scantor": 3, "render": 5}

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _threads() -> int:
    raw = os.environ.get("CANTORVAL_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"CANTORVAL_THREADS must be an integer, got {raw!r}") from None


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj: dict) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, indent=2) + "\n"


def _central_pair(args) -> tuple[central.CentralCantor, central.CentralCantor]:
    try:
        return central.CentralCantor.parse(args.a), central.CentralCantor.parse(args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _scantor_pair(values: list[int]) -> tuple[SCantorParams, SCantorParams]:
    l1, r1, l2, r2, p = values
    try:
        return SCantorParams(l1, r1, p), SCantorParams(l2, r2, p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _pairs(u) -> list[list[str]] | None:
    return None if u is None else [[str(lo), str(hi)] for lo, hi in u.pairs()]


# ---------------------------------------------------------------- central


def central_report(a: central.CentralCantor, b: central.CentralCantor, depth: int, budget: int) -> dict:
    v = central.classify(a, b, depth_budget=budget)
    verdict = "inconclusive" if v.kind is central.CentralVerdictKind.INCONCLUSIVE else v.kind.value
    ta, tb = central.thickness(a), central.thickness(b)
    top = int(min(depth, a.seq.length, b.seq.length))
    approx = central.difference_at_depth(a, b, top)
    return {
        "a": str(a.seq),
        "b": str(b.seq),
        "verdict": verdict,
        "facts": list(v.facts),
        "reason": v.reason,
        "stabilization_depth": v.stabilization_depth,
        "failing_index": v.failing_index,
        "witness": _pairs(v.witness),
        "conditions": [
            {"n": r.n, "a_next": str(r.a_next), "b_next": str(r.b_next), "d_over_g": str(r.ratio),
             "star": r.star, "star_star": r.star_star}
            for r in central.condition_table(a, b)
        ],
        "thickness": {"a": str(ta), "b": str(tb), "product": str(ta * tb)},
        "newhouse": central.newhouse_test(a, b),
        "depth": top,
        "components_at_depth": len(approx),
        "measure_at_depth": str(approx.measure),
    }


def _central_text(rep: dict) -> str:
    lines = [f"verdict: {rep['verdict']}"]
    if len(rep["facts"]) > 1:
        lines.append("facts: " + ", ".join(rep["facts"]))
    lines.append(f"reason: {rep['reason']}")
    for key in ("stabilization_depth", "failing_index"):
        if rep[key] is not None:
            lines.append(f"{key.replace('_', ' ')}: {rep[key]}")
    if rep["witness"] is not None:
        lines.append("witness: " + " u ".join(f"[{lo}, {hi}]" for lo, hi in rep["witness"]))
    th = rep["thickness"]
    lines.append(f"thickness: a={th['a']} b={th['b']} product={th['product']} newhouse={rep['newhouse']}")
    lines.append(f"depth {rep['depth']}: {rep['components_at_depth']} components, measure {rep['measure_at_depth']}")
    lines.append("  n  a_next  b_next  d/g  (*)  (**)")
    for r in rep["conditions"]:
        lines.append(f"  {r['n']}  {r['a_next']}  {r['b_next']}  {r['d_over_g']}  "
                     f"{'y' if r['star'] else 'n'}  {'y' if r['star_star'] else 'n'}")
    return "\n".join(lines) + "\n"


def cmd_central(args) -> int:
    a, b = _central_pair(args)
    rep = central_report(a, b, args.depth, args.budget)
    _emit(_dump(rep) if args.format == "json" else _central_text(rep), args.output)
    return EXIT_OK


# ---------------------------------------------------------------- scantor


def scantor_report(P1: SCantorParams, P2: SCantorParams) -> dict:
    L, R = scantor.lr_sets(P1, P2)
    return {
        "p1": [P1.l, P1.r, P1.p],
        "p2": [P2.l, P2.r, P2.p],
        "class": scantor.classify(P1, P2).value,
        "conditions": scantor.conditions(P1, P2).as_dict(),
        "digits": list(scantor.difference_digits(P1, P2).digits),
        "L": list(L),
        "R": list(R),
    }


def cmd_scantor(args) -> int:
    P1, P2 = _scantor_pair(args.params)
    rep = scantor_report(P1, P2)
    if args.format == "json":
        text = _dump(rep)
    else:
        conds = " ".join(f"{k}={'T' if v else 'F'}" for k, v in rep["conditions"].items())
        text = (f"class: {rep['class']}\nconditions: {conds}\n"
                f"digits: {{{','.join(map(str, rep['digits']))}}}\n"
                f"L: {rep['L']}\nR: {rep['R']}\n")
    _emit(text, args.output)
    return EXIT_OK


def _sweep_rows(p: int) -> list[tuple[int, int, int, int, int, str]]:
    return [(P1.l, P1.r, P2.l, P2.r, p, scantor.classify(P1, P2).value)
            for P1, P2 in scantor.valid_pairs(p, p_min=p)]


def sweep_rows(p_max: int, p_min: int = 3, threads: int = 1) -> list[tuple]:
    """Rows ``(l1, r1, l2, r2, p, class)`` sorted lexicographically."""
    bases = range(p_min, p_max + 1)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(_sweep_rows, bases))
    else:
        chunks = [_sweep_rows(p) for p in bases]
    return sorted(row for chunk in chunks for row in chunk)


def cmd_sweep(args) -> int:
    if args.p_max < 3 or args.p_min < 3:
        raise UsageError("bases must be >= 3")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["l1", "r1", "l2", "r2", "p", "class"])
    w.writerows(sweep_rows(args.p_max, args.p_min, _threads()))
    _emit(buf.getvalue(), args.output)
    return EXIT_OK


# ---------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    if args.target == "scantor":
        if len(args.params) != 5:
            raise UsageError("verify scantor needs L1 R1 L2 R2 P")
        try:
            values = [int(v) for v in args.params]
        except ValueError:
            raise UsageError(f"integers expected, got {args.params}") from None
        P1, P2 = _scantor_pair(values)
        depth = args.depth if args.depth is not None else DEFAULT_DEPTH["scantor"]
        if depth < 2:
            raise UsageError("verification depth must be >= 2")
        report = oracle.crosscheck_scantor(P1, P2, depth)
    else:
        if len(args.params) != 2:
            raise UsageError("verify central needs A B")
        args.a, args.b = args.params
        a, b = _central_pair(args)
        depth = args.depth if args.depth is not None else DEFAULT_DEPTH["central"]
        report = oracle.crosscheck_central(a, b, central.classify(a, b), depth)
    _emit(_dump(report.to_json()), args.output)
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------- render


def parse_set_spec(text: str) -> DigitSet:
    """``p=7:{...}`` digit literal, or ``l1,r1,l2,r2,p`` for an S-Cantor difference."""
    text = text.strip()
    if text.startswith("p"):
        try:
            return DigitSet.parse(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        values = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"not a set spec: {text!r}") from None
    if len(values) != 5:
        raise UsageError(f"expected l1,r1,l2,r2,p, got {text!r}")
    return scantor.difference_digits(*_scantor_pair(values))


def cmd_render(args) -> int:
    D = parse_set_spec(args.spec)
    try:
        D.require_bounded()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = render.to_csv(D, args.depth) if args.format == "csv" else render.to_svg(D, args.depth)
    _emit(text, args.output)
    return EXIT_OK


# ---------------------------------------------------------------- entry


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cantorval", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def out(p, formats, default):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = sub.add_parser("central", help="classify C(a) - C(b) for central Cantor sets")
    p.add_argument("a", help='ratio sequence "prefix;cycle", e.g. ";1/2,1/4"')
    p.add_argument("b")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH["central"])
    p.add_argument("--budget", type=int, default=central.DEFAULT_DEPTH_BUDGET,
                   help="periods searched before giving up on a drifting ratio")
    out(p, ("text", "json"), "text")
    p.set_defaults(func=cmd_central)

    p = sub.add_parser("scantor", help="classify C(l1,r1,p) - C(l2,r2,p)")
    p.add_argument("params", nargs=5, type=int, metavar="N", help="L1 R1 L2 R2 P")
    out(p, ("text", "json"), "text")
    p.set_defaults(func=cmd_scantor)

    p = sub.add_parser("sweep", help="CSV of classes for every valid tuple")
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--p-min", type=int, default=3)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the brute-force oracle against a verdict")
    p.add_argument("target", choices=("scantor", "central"))
    p.add_argument("params", nargs="+")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw the depth-n covers of a digit set")
    p.add_argument("spec", help='"p=7:{-6,...,6}" or "l1,r1,l2,r2,p"')
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH["render"])
    out(p, ("svg", "csv"), "svg")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "depth", None) is not None and args.depth < 0:
        parser.error("--depth must be >= 0")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
