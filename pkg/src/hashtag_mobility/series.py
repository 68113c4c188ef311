"""Daily value series, totals over count tables, and pairwise alignment.

Missing-data semantics differ by source and matter here: hashtag counts
zero-fill (a day with no matching tweets is a true 0), while mobility series
keep gaps (absence means unmeasured). Alignment therefore uses pairwise
deletion: only dates present in both series survive.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from datetime import date
from typing import IO, Iterable

import numpy as np

from .dates import DateWindow
from .errors import UnknownTag
from .tweets import DailyCountTable

TOTAL_LABEL = "total"


@dataclass(frozen=True)
class DailySeries:
    """A labelled date -> value map, iterated in ascending date order."""

    label: str
    points: dict[date, float]

    def __post_init__(self) -> None:
        for d, v in self.points.items():
            if not math.isfinite(v):
                raise ValueError(f"non-finite value {v!r} at {d}")
        ordered = dict(sorted(self.points.items()))
        object.__setattr__(self, "points", ordered)

    def dates(self) -> list[date]:
        return list(self.points)

    def values(self) -> np.ndarray:
        return np.array(list(self.points.values()), dtype=float)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class AlignedPair:
    """Two equal-length value vectors over a shared ascending date axis."""

    x: np.ndarray
    y: np.ndarray
    dates: tuple[date, ...]

    @property
    def n(self) -> int:
        return len(self.dates)


def total_series(table: DailyCountTable) -> DailySeries:
    """Sum counts over all tags, zero-filled across the table's window."""
    points = {
        d: float(sum(table.counts.get(d, {}).values())) for d in table.window.days()
    }
    return DailySeries(label=TOTAL_LABEL, points=points)


def per_tag_series(table: DailyCountTable, tag: str) -> DailySeries:
    """One tag's daily counts, zero-filled across the table's window."""
    if tag not in table.lexicon:
        raise UnknownTag(f"tag not in governing lexicon: {tag!r}")
    points = {d: float(table.get(d, tag)) for d in table.window.days()}
    return DailySeries(label=tag, points=points)


def align(a: DailySeries, b: DailySeries, window: DateWindow) -> AlignedPair:
    """Pair up the dates inside ``window`` present in both series.

    n may come out 0; downstream statistics enforce their own minimum.
    """
    common = sorted(d for d in a.points if d in b.points and d in window)
    x = np.array([a.points[d] for d in common], dtype=float)
    y = np.array([b.points[d] for d in common], dtype=float)
    return AlignedPair(x=x, y=y, dates=tuple(common))


def write_series_csv(series: Iterable[DailySeries], stream: IO[str]) -> None:
    """Export series as ``date,label,value`` rows, one block per series."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["date", "label", "value"])
    for s in series:
        for d, v in s.points.items():
            writer.writerow([d.isoformat(), s.label, f"{v:g}"])
