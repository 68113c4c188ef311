"""Tweet corpus ingestion: NDJSON parsing, hashtag extraction, daily counts.

The corpus is newline-delimited JSON with required fields ``id``,
``created_at`` (RFC 3339), and ``text``, plus an optional ``country_code``.
Malformed lines are skipped and tallied, never fatal: social-media dumps are
assumed dirty. Counting is a pure fold, so disjoint shards of a corpus can
be counted independently and combined with :func:`merge_counts`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import date, datetime, timezone
from typing import Iterable, Iterator, Union

import re

from .dates import DateWindow, parse_rfc3339
from .errors import LexiconMismatch, RangeMismatch
from .lexicon import HashtagLexicon, normalize_tag

# Skip reasons. Parsing-level reasons come out of parse_tweet_line; the
# counting-level reasons (out_of_window) out of count_stream.
MALFORMED_RECORD = "malformed_record"
MISSING_FIELD = "missing_field"  # rendered as "missing_field:<name>"
BAD_TIMESTAMP = "bad_timestamp"
NON_US = "non_us"
OUT_OF_WINDOW = "out_of_window"

# How many (line, reason) pairs IngestStats keeps for diagnostics.
MAX_RECORDED_SKIPS = 10

# A hashtag token is '#' followed by one or more word characters, where the
# '#' sits at start-of-text or after a character outside [A-Za-z0-9_#].
# This keeps fragments like "abc#anchor" and "##x" from counting.
_HASHTAG_RE = re.compile(r"(?<![A-Za-z0-9_#])#([A-Za-z0-9_]+)")

_REQUIRED_FIELDS = ("id", "created_at", "text")


@dataclass(frozen=True)
class TweetRecord:
    """One parsed tweet. ``created_at`` is always UTC-aware."""

    id: str
    created_at: datetime
    text: str

    def utc_date(self) -> date:
        return self.created_at.astimezone(timezone.utc).date()


@dataclass(frozen=True)
class SkippedLine:
    """A corpus line that was dropped, with the reason why."""

    line_no: int
    reason: str


ParseResult = Union[TweetRecord, SkippedLine]


@dataclass
class IngestStats:
    """Bookkeeping for one ingest run: lines_read = records_ok + records_skipped."""

    lines_read: int = 0
    records_ok: int = 0
    records_skipped: int = 0
    first_skip_reasons: list[tuple[int, str]] = field(default_factory=list)

    def record_skip(self, line_no: int, reason: str) -> None:
        self.records_skipped += 1
        if len(self.first_skip_reasons) < MAX_RECORDED_SKIPS:
            self.first_skip_reasons.append((line_no, reason))


def parse_tweet_line(line: str, line_no: int) -> ParseResult:
    """Parse one corpus line into a TweetRecord or a SkippedLine.

    Never raises on bad data: unparseable JSON, wrong shapes, missing
    fields, bad timestamps, and non-US records become skip reasons.
    """
    try:
        obj = json.loads(line)
    except json.JSONDecodeError:
        return SkippedLine(line_no, MALFORMED_RECORD)
    if not isinstance(obj, dict):
        return SkippedLine(line_no, MALFORMED_RECORD)
    for name in _REQUIRED_FIELDS:
        if name not in obj:
            return SkippedLine(line_no, f"{MISSING_FIELD}:{name}")
    tweet_id, created_at, text = obj["id"], obj["created_at"], obj["text"]
    if not isinstance(tweet_id, str) or not tweet_id or not isinstance(text, str):
        return SkippedLine(line_no, MALFORMED_RECORD)
    try:
        timestamp = parse_rfc3339(created_at)
    except ValueError:
        return SkippedLine(line_no, BAD_TIMESTAMP)
    country = obj.get("country_code")
    if country is not None and country != "US":
        return SkippedLine(line_no, NON_US)
    return TweetRecord(id=tweet_id, created_at=timestamp, text=text)


def parse_lines(lines: Iterable[str]) -> Iterator[ParseResult]:
    """Stream-parse a corpus, yielding one result per input line."""
    for line_no, line in enumerate(lines, 1):
        yield parse_tweet_line(line, line_no)


def extract_hashtags(text: str) -> list[str]:
    """Extract canonical hashtag occurrences from tweet text, in order.

    Duplicates are preserved; token bodies that fail normalization are
    dropped (cannot happen with the ASCII token grammar, kept for safety).
    """
    tags = []
    for match in _HASHTAG_RE.finditer(text):
        try:
            tags.append(normalize_tag(match.group(1)))
        except Exception:  # pragma: no cover - grammar guarantees canonical bodies
            continue
    return tags


@dataclass
class DailyCountTable:
    """Per-day, per-tag occurrence counts over an inclusive date window.

    Only nonzero counts are stored; an absent (date, tag) means 0. Every
    stored tag belongs to the governing lexicon and every date lies inside
    ``window``. Treat instances as immutable once returned by an operation.
    """

    lexicon: HashtagLexicon
    window: DateWindow
    counts: dict[date, dict[str, int]] = field(default_factory=dict)

    def get(self, d: date, tag: str) -> int:
        return self.counts.get(d, {}).get(tag, 0)

    def increment(self, d: date, tag: str, by: int = 1) -> None:
        day = self.counts.setdefault(d, {})
        day[tag] = day.get(tag, 0) + by

    def grand_total(self) -> int:
        return sum(sum(day.values()) for day in self.counts.values())


def empty_table(lexicon: HashtagLexicon, window: DateWindow) -> DailyCountTable:
    return DailyCountTable(lexicon=lexicon, window=window)


def count_stream(
    records: Iterable[ParseResult],
    lexicon: HashtagLexicon,
    window: DateWindow,
    dedupe_per_tweet: bool = False,
) -> tuple[DailyCountTable, IngestStats]:
    """Fold parse results into a daily count table.

    Every lexicon hashtag occurrence of an in-window record increments its
    (date, tag) cell; with ``dedupe_per_tweet`` each tag counts at most once
    per tweet. Records outside the window are skipped with reason
    ``out_of_window``; tags outside the lexicon are ignored silently.
    """
    table = empty_table(lexicon, window)
    stats = IngestStats()
    for position, item in enumerate(records, 1):
        stats.lines_read += 1
        if isinstance(item, SkippedLine):
            stats.record_skip(item.line_no, item.reason)
            continue
        day = item.utc_date()
        if day not in window:
            stats.record_skip(position, OUT_OF_WINDOW)
            continue
        stats.records_ok += 1
        tags = extract_hashtags(item.text)
        if dedupe_per_tweet:
            tags = list(dict.fromkeys(tags))
        for tag in tags:
            if tag in lexicon:
                table.increment(day, tag)
    return table, stats


def count_lines(
    lines: Iterable[str],
    lexicon: HashtagLexicon,
    window: DateWindow,
    dedupe_per_tweet: bool = False,
) -> tuple[DailyCountTable, IngestStats]:
    """Parse and count a corpus given as a stream of text lines."""
    return count_stream(
        parse_lines(lines), lexicon, window, dedupe_per_tweet=dedupe_per_tweet
    )


def merge_counts(a: DailyCountTable, b: DailyCountTable) -> DailyCountTable:
    """Pointwise sum of two tables sharing a lexicon and window."""
    if a.lexicon != b.lexicon:
        raise LexiconMismatch("tables are governed by different lexicons")
    if a.window != b.window:
        raise RangeMismatch(f"table windows differ: {a.window} vs {b.window}")
    merged = empty_table(a.lexicon, a.window)
    for source in (a, b):
        for d, day in source.counts.items():
            for tag, count in day.items():
                merged.increment(d, tag, count)
    return merged
