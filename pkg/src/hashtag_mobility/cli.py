"""Command-line pipeline: count, correlate, report, synth.

Stages compose through files so each can be re-run independently:

    synth     --seed 42 --out-dir demo/
    count     --corpus demo/tweets.ndjson --out counts.csv
    correlate --counts counts.csv --mobility demo/mobility.csv --out matrix.json
    report    --counts counts.csv --matrix matrix.json --out-dir reports/

Exit codes: 0 success, 1 usage error, 2 data error. Diagnostics go to
stderr; data goes to files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dates import DateWindow
from .errors import HashtagMobilityError
from .lexicon import default_lexicon, load_lexicon_file
from .mobility import parse_mobility_csv
from .report import (
    emit_matrix_report,
    emit_trend_report,
    read_counts_csv,
    read_matrix_json,
    write_counts_csv,
    write_matrix_json,
)
from .series import per_tag_series, total_series
from .stats import correlation_matrix
from .synth import SynthSpec, generate_synthetic
from .tweets import IngestStats, count_lines, merge_counts

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

_FORMATS = ("csv", "json", "svg")


def _window_arg(text: str) -> DateWindow:
    try:
        return DateWindow.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _formats_arg(text: str) -> set[str]:
    formats = {part.strip() for part in text.split(",") if part.strip()}
    unknown = formats - set(_FORMATS)
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown formats: {sorted(unknown)}")
    if not formats:
        raise argparse.ArgumentTypeError("at least one output format is required")
    return formats


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hashtag-mobility",
        description="Daily hashtag-frequency series correlated against mobility data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count lexicon hashtags per day")
    p_count.add_argument("--corpus", nargs="+", required=True, help="NDJSON corpus file(s)")
    p_count.add_argument("--lexicon", help="lexicon file (default: builtin 18 tags)")
    p_count.add_argument(
        "--window", type=_window_arg, default=DateWindow.default(),
        help="inclusive START:END dates (default 2020-01-01:2020-05-26)",
    )
    p_count.add_argument(
        "--dedupe-per-tweet", action="store_true",
        help="count each tag at most once per tweet",
    )
    p_count.add_argument("--out", required=True, help="output counts CSV path")

    p_corr = sub.add_parser("correlate", help="correlate counts against mobility")
    p_corr.add_argument("--counts", required=True, help="counts CSV from `count`")
    p_corr.add_argument("--mobility", required=True, help="mobility report CSV")
    p_corr.add_argument(
        "--window", type=_window_arg, default=DateWindow.default(),
        help="inclusive START:END dates (default 2020-01-01:2020-05-26)",
    )
    p_corr.add_argument(
        "--per-tag", action="store_true",
        help="include one series per tag besides the total",
    )
    p_corr.add_argument("--out", required=True, help="output matrix JSON path")

    p_report = sub.add_parser("report", help="emit trend and matrix reports")
    p_report.add_argument("--counts", required=True, help="counts CSV from `count`")
    p_report.add_argument("--matrix", help="matrix JSON from `correlate`")
    p_report.add_argument("--out-dir", required=True)
    p_report.add_argument(
        "--formats", type=_formats_arg, default={"csv", "json"},
        help="comma-separated subset of csv,json,svg (default csv,json)",
    )

    p_synth = sub.add_parser("synth", help="generate a synthetic corpus + mobility CSV")
    p_synth.add_argument("--seed", type=int, default=42)
    p_synth.add_argument("--days", type=int, default=147)
    p_synth.add_argument("--peak-day", type=int, default=74)
    p_synth.add_argument("--coupling", type=float, default=0.9)
    p_synth.add_argument("--noise", type=float, default=4.0)
    p_synth.add_argument("--base-volume", type=float, default=40.0)
    p_synth.add_argument("--peak-volume", type=float, default=420.0)
    p_synth.add_argument("--out-dir", required=True)
    return parser


def _print_stats(stats: IngestStats, err) -> None:
    print(
        f"read {stats.lines_read} lines: {stats.records_ok} counted, "
        f"{stats.records_skipped} skipped",
        file=err,
    )
    for line_no, reason in stats.first_skip_reasons:
        print(f"  skipped line {line_no}: {reason}", file=err)


def _cmd_count(args, err) -> int:
    lexicon = load_lexicon_file(args.lexicon) if args.lexicon else default_lexicon()
    table = None
    totals = IngestStats()
    for path in args.corpus:
        with open(path, encoding="utf-8") as fh:
            part, stats = count_lines(
                fh, lexicon, args.window, dedupe_per_tweet=args.dedupe_per_tweet
            )
        table = part if table is None else merge_counts(table, part)
        totals.lines_read += stats.lines_read
        totals.records_ok += stats.records_ok
        totals.records_skipped += stats.records_skipped
        totals.first_skip_reasons += stats.first_skip_reasons[
            : max(0, 10 - len(totals.first_skip_reasons))
        ]
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        write_counts_csv(table, fh)
    _print_stats(totals, err)
    return EXIT_OK


def _cmd_correlate(args, err) -> int:
    with open(args.counts, encoding="utf-8") as fh:
        table = read_counts_csv(fh)
    with open(args.mobility, encoding="utf-8") as fh:
        mobility = parse_mobility_csv(fh)
    series = [total_series(table)]
    if args.per_tag:
        series += [per_tag_series(table, tag) for tag in table.lexicon]
    results = correlation_matrix(series, mobility, args.window)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        write_matrix_json(results, fh)
    print(f"wrote {len(results)} correlation cells to {args.out}", file=err)
    return EXIT_OK


def _cmd_report(args, err) -> int:
    with open(args.counts, encoding="utf-8") as fh:
        table = read_counts_csv(fh)
    written = emit_trend_report(table, args.out_dir, formats=args.formats)
    if args.matrix:
        with open(args.matrix, encoding="utf-8") as fh:
            results = read_matrix_json(fh)
        written += emit_matrix_report(results, args.out_dir, formats=args.formats)
    for path in written:
        print(f"wrote {path}", file=err)
    return EXIT_OK


def _cmd_synth(args, err) -> int:
    spec = SynthSpec(
        seed=args.seed,
        days=args.days,
        peak_day=args.peak_day,
        coupling=args.coupling,
        noise=args.noise,
        base_volume=args.base_volume,
        peak_volume=args.peak_volume,
    )
    generated = generate_synthetic(spec, args.out_dir)
    print(
        f"wrote {generated.corpus_path}, {generated.mobility_path}, "
        f"{generated.manifest_path}",
        file=err,
    )
    return EXIT_OK


def run(argv: list[str], err=None) -> int:
    """Run one subcommand; returns the process exit code."""
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    handlers = {
        "count": _cmd_count,
        "correlate": _cmd_correlate,
        "report": _cmd_report,
        "synth": _cmd_synth,
    }
    try:
        return handlers[args.command](args, err)
    except (HashtagMobilityError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DATA


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
