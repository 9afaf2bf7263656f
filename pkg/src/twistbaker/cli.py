"""Command-line front end.

Subcommands: enumerate, count, rectangles, equidist, mixing, orbit,
chi-sequence, verify.  Reports stream to stdout as JSON or CSV (SVG for
the planar tilings); --out writes a file instead, and the report-style
subcommands accept --figure to render a matplotlib figure alongside the
delimited output.

Exit codes: 0 success, 2 usage or input error, 3 resource cap exceeded,
4 internal invariant or verification failure.

Identical flags produce byte-identical stdout; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import counting, periodic, spectral, stats, symbolic, verify
from .errors import (
    DegenerateSeedError,
    EmptyClassError,
    InvariantViolationError,
    ResourceCapError,
    TwistBakerError,
)
from .rational import parse_rat, rat_str

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_INVARIANT = 4


def _write_output(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _csv_text(rows: list[dict], fieldnames: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _record_csv_rows(records, dim: int):
    fields = (
        ["word"]
        + [f"point_{j + 1}" for j in range(dim)]
        + ["twist", "prime_period", "eigen_class", "chi_log2"]
    )
    rows = []
    for r in records:
        row = {"word": r.word}
        for j, c in enumerate(r.point):
            row[f"point_{j + 1}"] = rat_str(c)
        row.update(
            twist=r.twist,
            prime_period=r.prime_period,
            eigen_class=r.eigen_class,
            chi_log2=rat_str(r.chi_log2),
        )
        rows.append(row)
    return rows, fields


def cmd_enumerate(args) -> int:
    records = periodic.enumerate_fix(
        args.period, args.dim, workers=args.workers, max_period=args.max_period
    )
    if args.eigen_class != "all":
        records = [r for r in records if r.eigen_class == args.eigen_class]
        if not records:
            print(
                f"warning: class {args.eigen_class} is empty at period "
                f"{args.period}",
                file=sys.stderr,
            )
    if args.format == "csv":
        rows, fields = _record_csv_rows(records, args.dim)
        text = _csv_text(rows, fields)
    else:
        text = _json_text(
            {
                "dim": args.dim,
                "period": args.period,
                "class": args.eigen_class,
                "count": len(records),
                "records": [r.to_json() for r in records],
            }
        )
    _write_output(text, args.out)
    return EXIT_OK


def cmd_count(args) -> int:
    report = counting.proportion_report(args.period, args.dim)
    if args.format == "csv":
        rows = report.csv_rows()
        text = _csv_text(rows, ["n", "m", "r", "count", "ratio", "bound"])
    else:
        text = _json_text(report.to_json())
    _write_output(text, args.out)
    if args.figure:
        from . import figures

        figures.save_count_figure(report, args.figure)
    return EXIT_OK


def cmd_rectangles(args) -> int:
    if args.format == "svg" and args.dim != 2:
        print("error: SVG tilings are only defined for --dim 2", file=sys.stderr)
        return EXIT_USAGE
    rects = [symbolic.rectangle(w, args.dim) for w in symbolic.all_words(args.depth)]
    if args.format == "svg":
        from . import figures

        text = figures.rectangles_svg(rects, args.color_suffix)
    elif args.format == "csv":
        rows = []
        for r in rects:
            row = {"word": r.word, "measure": rat_str(r.measure)}
            for j, iv in enumerate(r.intervals):
                row[f"lo_{j + 1}"] = rat_str(iv.lo)
                row[f"hi_{j + 1}"] = rat_str(iv.hi)
            rows.append(row)
        fields = ["word", "measure"] + [
            f"{side}_{j + 1}" for j in range(args.dim) for side in ("lo", "hi")
        ]
        text = _csv_text(rows, fields)
    else:
        text = _json_text(
            {
                "dim": args.dim,
                "depth": args.depth,
                "rectangles": [r.to_json() for r in rects],
            }
        )
    _write_output(text, args.out)
    if args.figure:
        if args.dim != 2:
            print("error: figures require --dim 2", file=sys.stderr)
            return EXIT_USAGE
        from . import figures

        figures.save_rectangles_figure(rects, args.figure, args.color_suffix or 3)
    return EXIT_OK


def cmd_equidist(args) -> int:
    try:
        report = stats.equidistribution_report(
            args.period,
            args.dim,
            args.eigen_class,
            cylinder_depth=args.depth,
        )
    except EmptyClassError as exc:
        print(f"warning: {exc}", file=sys.stderr)
        _write_output(
            _json_text(
                {
                    "dim": args.dim,
                    "period": args.period,
                    "class": args.eigen_class,
                    "undefined": True,
                    "reason": str(exc),
                }
            ),
            args.out,
        )
        return EXIT_OK
    if args.format == "csv":
        rows = [
            {
                "n": report.period,
                "class": report.class_filter,
                "observable": s.name,
                "average": s.average,
                "exact_mean": "" if s.exact_mean is None else rat_str(s.exact_mean),
                "deviation": "" if s.deviation is None else s.deviation,
            }
            for s in report.stats
        ]
        rows.append(
            {
                "n": report.period,
                "class": report.class_filter,
                "observable": f"cylinder_discrepancy_depth_{report.cylinder_depth}",
                "average": float(report.discrepancy),
                "exact_mean": "0",
                "deviation": float(report.discrepancy),
            }
        )
        text = _csv_text(
            rows, ["n", "class", "observable", "average", "exact_mean", "deviation"]
        )
    else:
        text = _json_text(report.to_json())
    _write_output(text, args.out)
    if args.figure:
        from . import figures

        figures.save_equidist_figure(report, args.figure)
    return EXIT_OK


def cmd_mixing(args) -> int:
    series = stats.mixing_correlation(args.u, args.v, args.max_n)
    if args.format == "csv":
        rows = [
            {"n": n, "correlation": rat_str(c), "correlation_float": float(c)}
            for n, c in series
        ]
        text = _csv_text(rows, ["n", "correlation", "correlation_float"])
    else:
        text = _json_text(
            {
                "u": args.u,
                "v": args.v,
                "series": [
                    {"n": n, "correlation": rat_str(c), "float": float(c)}
                    for n, c in series
                ],
            }
        )
    _write_output(text, args.out)
    if args.figure:
        from . import figures

        figures.save_mixing_figure(series, args.u, args.v, args.figure)
    return EXIT_OK


def cmd_orbit(args) -> int:
    seed = tuple(parse_rat(part) for part in args.seed.split(","))
    report = stats.birkhoff_average(seed, args.steps, dim=args.dim)
    if args.format == "csv":
        rows = [
            {
                "observable": s.name,
                "average": s.average,
                "exact_mean": "" if s.exact_mean is None else rat_str(s.exact_mean),
                "deviation": "" if s.deviation is None else s.deviation,
            }
            for s in report.stats
        ]
        rows.append(
            {
                "observable": "freq(R)",
                "average": float(report.r_frequency),
                "exact_mean": "1/2",
                "deviation": abs(float(report.r_frequency) - 0.5),
            }
        )
        text = _csv_text(rows, ["observable", "average", "exact_mean", "deviation"])
    else:
        text = _json_text(report.to_json())
    _write_output(text, args.out)
    if args.figure:
        from . import figures

        figures.save_orbit_figure(report, args.figure)
    return EXIT_OK


def cmd_chi_sequence(args) -> int:
    cfg = stats.TheoremBConfig.default(args.dim, args.count)
    terms = stats.theorem_b_sequence(cfg, args.count, max_symbols=args.max_symbols)
    if args.format == "csv":
        rows = [
            {
                "j": t.j,
                "word_length": t.word_length,
                "chi_log2": rat_str(t.chi_log2),
                "chi": 2.0 ** float(t.chi_log2),
                "bound_log2": rat_str(t.bound_log2),
                "bound": 2.0 ** float(t.bound_log2),
            }
            for t in terms
        ]
        text = _csv_text(
            rows, ["j", "word_length", "chi_log2", "chi", "bound_log2", "bound"]
        )
    else:
        text = _json_text(
            {
                "dim": args.dim,
                "blocks": list(cfg.p_sequence[: args.count]),
                "terms": [t.to_json() for t in terms],
            }
        )
    _write_output(text, args.out)
    if args.figure:
        from . import figures

        figures.save_chi_figure(terms, args.figure)
    return EXIT_OK


def cmd_verify(args) -> int:
    start = time.perf_counter()
    results = verify.run_suite(args.suite, args.dim, args.max_period)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = f"{status}  {res.name}"
        if res.detail:
            line += f"  [{res.detail}]"
        print(line)
    elapsed = time.perf_counter() - start
    failed = sum(1 for r in results if not r.passed)
    print(
        f"{len(results) - failed}/{len(results)} checks passed "
        f"in {elapsed:.2f}s",
        file=sys.stderr,
    )
    return EXIT_OK if failed == 0 else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistbaker",
        description=(
            "Exact periodic-orbit and symbolic-dynamics toolkit for the "
            "twisted baker map."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, figure=True):
        p.add_argument("--dim", type=int, default=2, help="phase-space dimension")
        p.add_argument(
            "--format", choices=("json", "csv", "svg"), default="json"
        )
        p.add_argument("--out", help="write the report to this file")
        if figure:
            p.add_argument(
                "--figure", help="also render a matplotlib figure to this file"
            )

    p = sub.add_parser("enumerate", help="all periodic points of one period")
    add_common(p, figure=False)
    p.add_argument("--period", type=int, required=True)
    p.add_argument(
        "--class",
        dest="eigen_class",
        choices=spectral.CLASS_FILTERS,
        default="all",
    )
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--max-period", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="twist-residue counts at one period")
    add_common(p)
    p.add_argument("--period", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("rectangles", help="the cylinder tiling at one depth")
    add_common(p)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--color-suffix", type=int, default=0)
    p.set_defaults(func=cmd_rectangles)

    p = sub.add_parser("equidist", help="class averages over periodic points")
    add_common(p)
    p.add_argument("--period", type=int, required=True)
    p.add_argument(
        "--class",
        dest="eigen_class",
        choices=spectral.CLASS_FILTERS,
        default="all",
    )
    p.add_argument("--depth", type=int, default=3, help="cylinder histogram depth")
    p.set_defaults(func=cmd_equidist)

    p = sub.add_parser("mixing", help="exact cylinder correlation series")
    add_common(p)
    p.add_argument("--u", required=True, help="first word over {L,R}")
    p.add_argument("--v", required=True, help="second word over {L,R}")
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_mixing)

    p = sub.add_parser("orbit", help="exact Birkhoff averages along one orbit")
    add_common(p)
    p.add_argument(
        "--seed",
        required=True,
        help='comma-separated exact coordinates, e.g. "2/7,3/7"',
    )
    p.add_argument("--steps", type=int, default=100000)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser(
        "chi-sequence", help="expansion-rate decay along biased words"
    )
    add_common(p)
    p.add_argument("--count", type=int, default=6, help="number of blocks")
    p.add_argument(
        "--max-symbols", type=int, default=stats.MAX_CHI_WORD_SYMBOLS
    )
    p.set_defaults(func=cmd_chi_sequence)

    p = sub.add_parser("verify", help="run a named check suite")
    p.add_argument("--suite", choices=verify.SUITES, default="all")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--max-period", type=int, default=10)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DegenerateSeedError, EmptyClassError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvariantViolationError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except TwistBakerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
