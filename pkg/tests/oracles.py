"""Independent reference implementations used to check the real ones.

Nothing here may call into hashtag_mobility's computation paths: the Pearson
reference works in exact rational arithmetic straight from the definition
formula, and the corpus recount is a character-walk scanner with its own
JSON handling.
"""

from __future__ import annotations

import json
import string
from datetime import datetime, timezone
from fractions import Fraction
from math import isqrt

_SCALE_DIGITS = 36  # reference sqrt carries ~36 decimal digits


def pearson_reference(x, y) -> Fraction:
    """Pearson r straight from the definition, in extended precision.

    All sums are exact rationals (binary floats are exact fractions); the
    final square root is taken with integer isqrt at _SCALE_DIGITS digits,
    so the result is a Fraction within 1e-36 of the true value.
    """
    n = len(x)
    fx = [Fraction(float(v)) for v in x]
    fy = [Fraction(float(v)) for v in y]
    mean_x = sum(fx) / n
    mean_y = sum(fy) / n
    sxy = sum((a - mean_x) * (b - mean_y) for a, b in zip(fx, fy))
    sxx = sum((a - mean_x) ** 2 for a in fx)
    syy = sum((b - mean_y) ** 2 for b in fy)
    if sxy == 0:
        return Fraction(0)
    ratio = sxy * sxy / (sxx * syy)  # r^2, exactly
    scale = 10 ** (2 * _SCALE_DIGITS)
    root = isqrt((ratio.numerator * scale) // ratio.denominator)
    magnitude = Fraction(root, 10 ** _SCALE_DIGITS)
    return magnitude if sxy > 0 else -magnitude


_WORD_CHARS = set(string.ascii_letters + string.digits + "_")


def naive_recount(lines, tags, window) -> dict:
    """Scan-and-filter recount: (date, tag) -> occurrences.

    Character-walk hashtag scanner plus minimal JSON field checks,
    deliberately sharing no code with the package's ingest path.
    """
    tags = set(tags)
    totals: dict = {}
    for line in lines:
        try:
            obj = json.loads(line)
        except json.JSONDecodeError:
            continue
        if not isinstance(obj, dict):
            continue
        if not all(k in obj for k in ("id", "created_at", "text")):
            continue
        if not isinstance(obj["id"], str) or not obj["id"]:
            continue
        if not isinstance(obj["text"], str):
            continue
        try:
            raw = obj["created_at"].strip()
            if raw.endswith(("Z", "z")):
                raw = raw[:-1] + "+00:00"
            ts = datetime.fromisoformat(raw)
        except (ValueError, AttributeError):
            continue
        if ts.tzinfo is None:
            continue
        if obj.get("country_code") not in (None, "US"):
            continue
        day = ts.astimezone(timezone.utc).date()
        if not (window.start <= day <= window.end):
            continue
        text = obj["text"]
        i = 0
        while i < len(text):
            if text[i] == "#" and (
                i == 0 or (text[i - 1] not in _WORD_CHARS and text[i - 1] != "#")
            ):
                j = i + 1
                while j < len(text) and text[j] in _WORD_CHARS:
                    j += 1
                if j > i + 1:
                    tag = text[i + 1 : j].lower()
                    if tag in tags:
                        totals[(day, tag)] = totals.get((day, tag), 0) + 1
                i = j
            else:
                i += 1
    return totals


def table_cells(table) -> dict:
    """Flatten a DailyCountTable to (date, tag) -> count for comparison."""
    return {
        (day, tag): count
        for day, per_tag in table.counts.items()
        for tag, count in per_tag.items()
        if count
    }
