"""Calendar dates, timestamp parsing, and inclusive date windows.

All analysis runs on UTC calendar dates. Timestamps must carry an explicit
UTC offset (``Z`` or ``+hh:mm``); naive timestamps are rejected rather than
guessed at.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, datetime, timedelta, timezone
from typing import Iterator

# Collection window of the tracked-hashtag series: 2020-01-01 through
# 2020-05-26 inclusive (147 days).
DEFAULT_WINDOW_START = date(2020, 1, 1)
DEFAULT_WINDOW_END = date(2020, 5, 26)


def parse_date(text: str) -> date:
    """Parse a strict YYYY-MM-DD date. Raises ValueError otherwise."""
    y, m, d = text.split("-")
    if len(y) != 4 or len(m) != 2 or len(d) != 2:
        raise ValueError(f"not a YYYY-MM-DD date: {text!r}")
    return date(int(y), int(m), int(d))


def parse_rfc3339(text: str) -> datetime:
    """Parse an RFC 3339 timestamp into a UTC-aware datetime.

    Accepts ``Z``/``z`` as well as numeric offsets, and a space in place of
    the ``T`` separator. Raises ValueError for naive or malformed input.
    """
    if not isinstance(text, str) or not text:
        raise ValueError("timestamp must be a non-empty string")
    s = text.strip()
    if s.endswith(("Z", "z")):
        s = s[:-1] + "+00:00"
    dt = datetime.fromisoformat(s)
    if dt.tzinfo is None:
        raise ValueError(f"timestamp lacks a UTC offset: {text!r}")
    return dt.astimezone(timezone.utc)


@dataclass(frozen=True)
class DateWindow:
    """Inclusive [start, end] range of calendar dates."""

    start: date
    end: date

    def __post_init__(self) -> None:
        if self.start > self.end:
            raise ValueError(f"window start {self.start} is after end {self.end}")

    @classmethod
    def parse(cls, text: str) -> "DateWindow":
        """Parse the ``START:END`` form used on the command line."""
        try:
            start_text, end_text = text.split(":")
            return cls(parse_date(start_text), parse_date(end_text))
        except ValueError as exc:
            raise ValueError(f"not a START:END date window: {text!r}") from exc

    @classmethod
    def default(cls) -> "DateWindow":
        return cls(DEFAULT_WINDOW_START, DEFAULT_WINDOW_END)

    def __contains__(self, d: date) -> bool:
        return self.start <= d <= self.end

    def __len__(self) -> int:
        return (self.end - self.start).days + 1

    def days(self) -> Iterator[date]:
        """Yield every date in the window in ascending order."""
        d = self.start
        one = timedelta(days=1)
        while d <= self.end:
            yield d
            d += one

    def __str__(self) -> str:
        return f"{self.start.isoformat()}:{self.end.isoformat()}"
