"""Minimal self-contained SVG charts: date-axis line chart and heat grid.

String builders only, no plotting dependency. Output is deterministic for
identical input (fixed-precision coordinates, no timestamps or random ids),
so emitted figures can be compared byte for byte.
"""

from __future__ import annotations

from datetime import date
from typing import Mapping, Optional, Sequence

PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)

_POSITIVE_RGB = (33, 102, 172)  # blue for r > 0
_NEGATIVE_RGB = (178, 24, 43)  # red for r < 0
_MISSING_FILL = "#d9d9d9"


def _esc(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")
    )


def _blend_toward_white(rgb: tuple[int, int, int], strength: float) -> str:
    s = max(0.0, min(1.0, strength))
    r, g, b = (round(255 + (c - 255) * s) for c in rgb)
    return f"#{r:02x}{g:02x}{b:02x}"


def line_chart(
    series: Sequence[tuple[str, Mapping[date, float]]],
    title: str,
    width: int = 960,
    height: int = 540,
) -> str:
    """Render labelled date series as polylines with auto-scaled axes."""
    left, right, top, bottom = 70, 170, 50, 60
    plot_w = width - left - right
    plot_h = height - top - bottom

    all_dates = sorted({d for _, points in series for d in points})
    all_values = [v for _, points in series for v in points.values()]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="#ffffff"/>',
        f'<text x="{width / 2:.1f}" y="28" text-anchor="middle" font-size="18" '
        f'font-family="sans-serif">{_esc(title)}</text>',
    ]
    if not all_dates or not all_values:
        out.append(
            f'<text x="{width / 2:.1f}" y="{height / 2:.1f}" text-anchor="middle" '
            f'font-size="14" font-family="sans-serif">no data</text></svg>'
        )
        return "\n".join(out) + "\n"

    d0, d1 = all_dates[0], all_dates[-1]
    span = max((d1 - d0).days, 1)
    v_min, v_max = min(all_values), max(all_values)
    if v_min == v_max:
        v_min, v_max = v_min - 1.0, v_max + 1.0
    pad = 0.05 * (v_max - v_min)
    v_min, v_max = v_min - pad, v_max + pad

    def px(d: date) -> float:
        return left + (d - d0).days / span * plot_w

    def py(v: float) -> float:
        return top + (v_max - v) / (v_max - v_min) * plot_h

    # horizontal gridlines and y labels
    for i in range(5):
        v = v_min + (v_max - v_min) * i / 4
        y = py(v)
        out.append(
            f'<line x1="{left}" y1="{y:.2f}" x2="{left + plot_w}" y2="{y:.2f}" '
            f'stroke="#e0e0e0" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{left - 8}" y="{y + 4:.2f}" text-anchor="end" font-size="11" '
            f'font-family="sans-serif">{v:.0f}</text>'
        )
    # month ticks on the first of each month present
    for d in all_dates:
        if d.day == 1 or d == d0:
            x = px(d)
            out.append(
                f'<line x1="{x:.2f}" y1="{top + plot_h}" x2="{x:.2f}" y2="{top + plot_h + 5}" '
                f'stroke="#000000" stroke-width="1"/>'
            )
            out.append(
                f'<text x="{x:.2f}" y="{top + plot_h + 18}" text-anchor="middle" '
                f'font-size="11" font-family="sans-serif">{d.isoformat()}</text>'
            )
    out.append(
        f'<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" fill="none" '
        f'stroke="#000000" stroke-width="1"/>'
    )

    for i, (label, points) in enumerate(series):
        if not points:
            continue
        color = PALETTE[i % len(PALETTE)]
        coords = " ".join(
            f"{px(d):.2f},{py(v):.2f}" for d, v in sorted(points.items())
        )
        out.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        ly = top + 14 + i * 16
        out.append(
            f'<line x1="{left + plot_w + 10}" y1="{ly - 4:.0f}" x2="{left + plot_w + 30}" '
            f'y2="{ly - 4:.0f}" stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{left + plot_w + 36}" y="{ly:.0f}" font-size="11" '
            f'font-family="sans-serif">{_esc(label)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def heat_grid(
    row_labels: Sequence[str],
    col_labels: Sequence[str],
    values: Mapping[tuple[str, str], Optional[float]],
    marked: Mapping[tuple[str, str], bool],
    title: str,
    cell_w: int = 110,
    cell_h: int = 44,
) -> str:
    """Render a signed heat grid: blue positive, red negative, gray missing.

    Cells present in ``marked`` with a true value get a bold outline (used
    for significance annotation).
    """
    left, top = 150, 90
    width = left + cell_w * len(col_labels) + 30
    height = top + cell_h * len(row_labels) + 30
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="#ffffff"/>',
        f'<text x="{width / 2:.1f}" y="26" text-anchor="middle" font-size="16" '
        f'font-family="sans-serif">{_esc(title)}</text>',
    ]
    for j, col in enumerate(col_labels):
        x = left + j * cell_w + cell_w / 2
        out.append(
            f'<text x="{x:.1f}" y="{top - 10}" text-anchor="middle" font-size="10" '
            f'font-family="sans-serif">{_esc(col)}</text>'
        )
    for i, row in enumerate(row_labels):
        y = top + i * cell_h
        out.append(
            f'<text x="{left - 8}" y="{y + cell_h / 2 + 4:.1f}" text-anchor="end" '
            f'font-size="11" font-family="sans-serif">{_esc(row)}</text>'
        )
        for j, col in enumerate(col_labels):
            x = left + j * cell_w
            value = values.get((row, col))
            if value is None:
                fill = _MISSING_FILL
                label = "n/a"
            else:
                base = _POSITIVE_RGB if value >= 0 else _NEGATIVE_RGB
                fill = _blend_toward_white(base, abs(value))
                label = f"{value:.3f}"
            out.append(
                f'<rect x="{x}" y="{y}" width="{cell_w}" height="{cell_h}" '
                f'fill="{fill}" stroke="#ffffff" stroke-width="1"/>'
            )
            if marked.get((row, col)):
                out.append(
                    f'<rect x="{x + 2}" y="{y + 2}" width="{cell_w - 4}" height="{cell_h - 4}" '
                    f'fill="none" stroke="#000000" stroke-width="2"/>'
                )
                label += " *"
            text_fill = "#000000" if value is None or abs(value) < 0.6 else "#ffffff"
            out.append(
                f'<text x="{x + cell_w / 2:.1f}" y="{y + cell_h / 2 + 4:.1f}" '
                f'text-anchor="middle" font-size="11" font-family="sans-serif" '
                f'fill="{text_fill}">{label}</text>'
            )
    out.append(
        f'<text x="{left}" y="{height - 8}" font-size="10" font-family="sans-serif" '
        f'fill="#555555">* marks cells with p &lt; 0.05</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
