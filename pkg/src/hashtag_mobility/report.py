"""Report emission and the on-disk formats tying pipeline stages together.

Stages compose via files: counting persists a ``date,tag,count`` CSV which
correlation re-reads, correlation persists a matrix JSON which reporting
re-reads. Every writer is deterministic (fixed ordering, LF newlines, no
timestamps) so identical runs produce byte-identical files.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import IO, Iterable, Sequence

from . import svg
from .dates import DateWindow, parse_date
from .errors import BadDate, BadNumber, DuplicateDate, MissingColumn
from .lexicon import HashtagLexicon, InvalidTag, normalize_tag
from .mobility import MobilityCategory
from .series import per_tag_series, total_series
from .stats import CorrelationResult
from .tweets import DailyCountTable, empty_table

COUNTS_HEADER = ["date", "tag", "count"]
MATRIX_HEADER = ["series", "category", "n", "r", "p", "error"]


# -- counts.csv ---------------------------------------------------------------

def write_counts_csv(table: DailyCountTable, stream: IO[str]) -> None:
    """Write the full zero-filled (date, tag) grid in lexicon order.

    Zeros are written out so the date range and governing lexicon survive a
    round trip through :func:`read_counts_csv`.
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(COUNTS_HEADER)
    for day in table.window.days():
        for tag in table.lexicon:
            writer.writerow([day.isoformat(), tag, table.get(day, tag)])


def read_counts_csv(lines: Iterable[str]) -> DailyCountTable:
    """Read a counts CSV back into a table.

    The governing lexicon is inferred from the tags present (first-seen
    order) and the window from the span of dates.
    """
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        raise MissingColumn(COUNTS_HEADER[0]) from None
    position = {name: i for i, name in enumerate(header)}
    for name in COUNTS_HEADER:
        if name not in position:
            raise MissingColumn(name)
    tags: dict[str, None] = {}
    rows: list[tuple] = []
    seen: set[tuple] = set()
    for row_no, row in enumerate(reader, 2):
        if not row:
            continue
        try:
            day = parse_date(row[position["date"]])
        except (ValueError, IndexError):
            raise BadDate(f"row {row_no}: bad date") from None
        raw_tag = row[position["tag"]]
        try:
            tag = normalize_tag(raw_tag)
        except InvalidTag:
            raise InvalidTag(f"row {row_no}: bad tag {raw_tag!r}") from None
        try:
            count = int(row[position["count"]])
        except (ValueError, IndexError):
            raise BadNumber(f"row {row_no}: bad count") from None
        if count < 0:
            raise BadNumber(f"row {row_no}: negative count {count}")
        if (day, tag) in seen:
            raise DuplicateDate(f"row {row_no}: duplicate entry for {day}/{tag}")
        seen.add((day, tag))
        tags.setdefault(tag, None)
        rows.append((day, tag, count))
    if not rows:
        raise BadDate("counts file has no data rows")
    lexicon = HashtagLexicon(tuple(tags), source="file:counts")
    window = DateWindow(min(r[0] for r in rows), max(r[0] for r in rows))
    table = empty_table(lexicon, window)
    for day, tag, count in rows:
        if count:
            table.increment(day, tag, count)
    return table


# -- trend report -------------------------------------------------------------

def emit_trend_report(
    table: DailyCountTable, out_dir, formats: Iterable[str] = ("csv",)
) -> list[Path]:
    """Write trend.csv / totals.csv (and optionally trend.svg) for a table.

    trend.csv has one row per window date with per-tag columns plus the
    total; totals.csv ranks tags by whole-window sum, descending.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    formats = set(formats)
    written: list[Path] = []
    tags = list(table.lexicon)
    total = total_series(table)
    per_tag = {tag: per_tag_series(table, tag) for tag in tags}

    if "csv" in formats:
        trend_path = out_dir / "trend.csv"
        with open(trend_path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["date"] + tags + ["total"])
            for day in table.window.days():
                row = [day.isoformat()]
                row += [str(int(per_tag[tag].points[day])) for tag in tags]
                row.append(str(int(total.points[day])))
                writer.writerow(row)
        written.append(trend_path)

        totals_path = out_dir / "totals.csv"
        sums = {tag: int(sum(per_tag[tag].points.values())) for tag in tags}
        with open(totals_path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["tag", "count"])
            for tag in sorted(sums, key=lambda t: (-sums[t], t)):
                writer.writerow([tag, sums[tag]])
        written.append(totals_path)

    if "svg" in formats:
        chart_series = [("total", total.points)]
        chart_series += [(tag, per_tag[tag].points) for tag in tags]
        svg_path = out_dir / "trend.svg"
        svg_path.write_text(
            svg.line_chart(chart_series, title="Daily hashtag frequency"),
            encoding="utf-8",
        )
        written.append(svg_path)
    return written


# -- correlation matrix report ------------------------------------------------

def format_r(r: float) -> str:
    return f"{r:.6f}"


def format_p(p: float) -> str:
    # scientific notation below 1e-4, fixed six decimals otherwise
    return f"{p:.6e}" if p < 1e-4 else f"{p:.6f}"


def matrix_to_json_obj(results: Sequence[CorrelationResult]) -> list[dict]:
    out = []
    for res in results:
        obj = {
            "series": res.x_label,
            "category": res.y_label,
            "n": res.n,
            "r": res.r,
            "p": res.p,
        }
        if res.error is not None:
            obj["error"] = res.error
        out.append(obj)
    return out


def write_matrix_json(results: Sequence[CorrelationResult], stream: IO[str]) -> None:
    json.dump(matrix_to_json_obj(results), stream, indent=2)
    stream.write("\n")


def read_matrix_json(lines_or_stream) -> list[CorrelationResult]:
    text = (
        lines_or_stream.read()
        if hasattr(lines_or_stream, "read")
        else "".join(lines_or_stream)
    )
    raw = json.loads(text)
    results = []
    for obj in raw:
        results.append(
            CorrelationResult(
                x_label=obj["series"],
                y_label=obj["category"],
                n=int(obj["n"]),
                r=obj.get("r"),
                p=obj.get("p"),
                error=obj.get("error"),
            )
        )
    return results


def write_matrix_csv(results: Sequence[CorrelationResult], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(MATRIX_HEADER)
    for res in results:
        if res.error is None:
            writer.writerow(
                [res.x_label, res.y_label, res.n, format_r(res.r), format_p(res.p), ""]
            )
        else:
            writer.writerow([res.x_label, res.y_label, res.n, "", "", res.error])


def emit_matrix_report(
    results: Sequence[CorrelationResult],
    out_dir,
    formats: Iterable[str] = ("csv", "json"),
) -> list[Path]:
    """Write matrix.csv / matrix.json (and optionally matrix.svg)."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    formats = set(formats)
    written: list[Path] = []
    if "csv" in formats:
        path = out_dir / "matrix.csv"
        with open(path, "w", encoding="utf-8", newline="") as fh:
            write_matrix_csv(results, fh)
        written.append(path)
    if "json" in formats:
        path = out_dir / "matrix.json"
        with open(path, "w", encoding="utf-8", newline="") as fh:
            write_matrix_json(results, fh)
        written.append(path)
    if "svg" in formats:
        rows = list(dict.fromkeys(res.x_label for res in results))
        cols = [c.value for c in MobilityCategory]
        values = {(res.x_label, res.y_label): res.r for res in results}
        marked = {
            (res.x_label, res.y_label): res.significant() for res in results
        }
        path = out_dir / "matrix.svg"
        path.write_text(
            svg.heat_grid(
                rows, cols, values, marked, title="Hashtag vs mobility correlation (r)"
            ),
            encoding="utf-8",
        )
        written.append(path)
    return written
