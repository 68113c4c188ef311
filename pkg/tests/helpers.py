"""Small construction helpers shared by the test modules."""

from __future__ import annotations

from datetime import date, timedelta

from hashtag_mobility import DailySeries, DateWindow
from hashtag_mobility.tweets import DailyCountTable, empty_table

MOBILITY_COLUMNS = [
    "country_region_code",
    "sub_region_1",
    "sub_region_2",
    "date",
    "retail_and_recreation_percent_change_from_baseline",
    "grocery_and_pharmacy_percent_change_from_baseline",
    "parks_percent_change_from_baseline",
    "transit_stations_percent_change_from_baseline",
    "workplaces_percent_change_from_baseline",
    "residential_percent_change_from_baseline",
]


def window(start: str, days: int) -> DateWindow:
    d0 = date.fromisoformat(start)
    return DateWindow(d0, d0 + timedelta(days=days - 1))


def series(label: str, start: str, values) -> DailySeries:
    d0 = date.fromisoformat(start)
    return DailySeries(
        label, {d0 + timedelta(days=i): float(v) for i, v in enumerate(values)}
    )


def table(lexicon, win: DateWindow, cells: dict) -> DailyCountTable:
    """Build a count table from {(iso_date, tag): count}."""
    t = empty_table(lexicon, win)
    for (iso, tag), count in cells.items():
        t.increment(date.fromisoformat(iso), tag, count)
    return t


def mobility_csv(rows, columns=None) -> list[str]:
    """Render mobility CSV lines from row dicts keyed by column name."""
    columns = columns or MOBILITY_COLUMNS
    lines = [",".join(columns) + "\n"]
    for row in rows:
        lines.append(",".join(str(row.get(c, "")) for c in columns) + "\n")
    return lines


def national_row(iso_date: str, values, country: str = "US") -> dict:
    row = {"country_region_code": country, "date": iso_date}
    for column, value in zip(MOBILITY_COLUMNS[4:], values):
        if value is not None:
            row[column] = value
    return row
