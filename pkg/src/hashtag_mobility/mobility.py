"""Google Community Mobility Report parsing.

The report is a CSV of daily percent-change-from-baseline values across six
place categories. Columns are located strictly by header name so that added
columns and reordered headers cannot break parsing; the default row filter
keeps the US national rows (both sub-region fields empty).
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass
from datetime import date
from typing import IO, Iterable

from .dates import DateWindow, parse_date
from .errors import BadDate, BadNumber, DuplicateDate, MissingColumn, NoRowsMatched
from .series import DailySeries


class MobilityCategory(enum.Enum):
    """The six place categories, in report declaration order."""

    RETAIL_AND_RECREATION = "retail_and_recreation"
    GROCERY_AND_PHARMACY = "grocery_and_pharmacy"
    PARKS = "parks"
    TRANSIT_STATIONS = "transit_stations"
    WORKPLACES = "workplaces"
    RESIDENTIAL = "residential"

    @property
    def column(self) -> str:
        return f"{self.value}_percent_change_from_baseline"


_REGION_COLUMNS = ("country_region_code", "sub_region_1", "sub_region_2")
_DATE_COLUMN = "date"


@dataclass(frozen=True)
class MobilitySeries:
    """Per-category daily percent-change series for one region.

    A (category, date) pair is either present with a finite value or absent;
    NaN never enters. Dates iterate in ascending order within each category.
    """

    region: str
    values: dict[MobilityCategory, dict[date, float]]


def parse_mobility_csv(
    lines: Iterable[str],
    country: str = "US",
    sub_region_1: str = "",
    sub_region_2: str = "",
) -> MobilitySeries:
    """Parse the mobility CSV, keeping rows that match the region filter.

    Empty value cells become missing entries. Raises MissingColumn,
    DuplicateDate, BadDate, BadNumber, or NoRowsMatched.
    """
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        raise MissingColumn(_REGION_COLUMNS[0]) from None
    position = {name: i for i, name in enumerate(header)}
    required = list(_REGION_COLUMNS) + [_DATE_COLUMN] + [c.column for c in MobilityCategory]
    for name in required:
        if name not in position:
            raise MissingColumn(name)

    def cell(row: list[str], name: str) -> str:
        i = position[name]
        return row[i] if i < len(row) else ""

    wanted = (country, sub_region_1, sub_region_2)
    values: dict[MobilityCategory, dict[date, float]] = {c: {} for c in MobilityCategory}
    seen_dates: set[date] = set()
    matched = False
    for row_no, row in enumerate(reader, 2):
        if tuple(cell(row, name) for name in _REGION_COLUMNS) != wanted:
            continue
        matched = True
        try:
            day = parse_date(cell(row, _DATE_COLUMN))
        except ValueError:
            raise BadDate(f"row {row_no}: bad date {cell(row, _DATE_COLUMN)!r}") from None
        if day in seen_dates:
            raise DuplicateDate(f"row {row_no}: date {day} appears twice in region")
        seen_dates.add(day)
        for category in MobilityCategory:
            text = cell(row, category.column).strip()
            if not text:
                continue
            try:
                value = float(text)
            except ValueError:
                raise BadNumber(
                    f"row {row_no}, column {category.column}: {text!r}"
                ) from None
            if not math.isfinite(value):
                raise BadNumber(f"row {row_no}, column {category.column}: {text!r}")
            values[category][day] = value
    if not matched:
        raise NoRowsMatched(f"no rows matched region {wanted!r}")
    ordered = {c: dict(sorted(series.items())) for c, series in values.items()}
    region = "/".join(part for part in wanted if part)
    return MobilitySeries(region=region, values=ordered)


def category_series(
    series: MobilitySeries, category: MobilityCategory, window: DateWindow
) -> DailySeries:
    """One category's series restricted to the window; gaps stay missing."""
    points = {
        d: v for d, v in series.values[category].items() if d in window
    }
    return DailySeries(label=category.value, points=points)


def write_mobility_csv(series: MobilitySeries, stream: IO[str]) -> None:
    """Serialize a single-region series back to the report schema.

    Values that are whole numbers render without a decimal point, matching
    the published files; others keep full float precision.
    """
    parts = series.region.split("/") if series.region else [""]
    parts += [""] * (3 - len(parts))
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(
        list(_REGION_COLUMNS) + [_DATE_COLUMN] + [c.column for c in MobilityCategory]
    )
    all_dates = sorted({d for per_cat in series.values.values() for d in per_cat})
    for day in all_dates:
        row = parts[:3] + [day.isoformat()]
        for category in MobilityCategory:
            value = series.values[category].get(day)
            row.append("" if value is None else _format_value(value))
        writer.writerow(row)


def _format_value(value: float) -> str:
    if value == int(value):
        return str(int(value))
    return repr(value)
