"""Static SVG line charts with no plotting dependency.

Output is byte-stable: fixed canvas, fixed palette, coordinates rounded to
two decimals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = ["ChartSpec", "Series", "render_svg", "nice_ticks", "WIDTH", "HEIGHT"]

WIDTH, HEIGHT = 800, 600
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 95, 30, 50, 70
PLOT_W = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
PLOT_H = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")

KINDS = ("vd_vs_hd", "north_vs_east", "hookload_profile", "pct_difference")
_PROFILE_KINDS = ("hookload_profile", "pct_difference")


@dataclass(frozen=True)
class Series:
    name: str
    points: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class ChartSpec:
    kind: str
    title: str
    x_label: str
    y_label: str
    series: tuple[Series, ...]
    # depth charts draw y increasing downward
    invert_y: bool = False

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DomainError(f"unknown chart kind {self.kind!r}")
        if not self.series or any(not s.points for s in self.series):
            raise DomainError("chart needs at least one non-empty series")
        if self.kind in _PROFILE_KINDS:
            for s in self.series:
                xs = [p[0] for p in s.points]
                if any(b < a for a, b in zip(xs, xs[1:])):
                    raise DomainError(f"series {s.name!r} x values are not monotone")


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _q(v: float) -> str:
    text = f"{v:.2f}"
    return "0.00" if text == "-0.00" else text


def nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    """Round tick positions covering [lo, hi]."""
    if hi < lo:
        lo, hi = hi, lo
    if hi == lo:
        pad = abs(lo) * 0.05 or 1.0
        lo, hi = lo - pad, hi + pad
    raw = (hi - lo) / max(target - 1, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    first = math.floor(lo / step) * step
    last = math.ceil(hi / step) * step
    n = int(round((last - first) / step))
    return [round(first + k * step, 10) for k in range(n + 1)]


def _tick_label(v: float, step: float) -> str:
    if step >= 1 and float(v).is_integer():
        return f"{int(v):,}"
    decimals = max(0, -int(math.floor(math.log10(step))) + 1)
    return f"{v:,.{decimals}f}"


def render_svg(chart: ChartSpec) -> str:
    xs = [p[0] for s in chart.series for p in s.points]
    ys = [p[1] for s in chart.series for p in s.points]
    xt, yt = nice_ticks(min(xs), max(xs)), nice_ticks(min(ys), max(ys))
    x0, x1, y0, y1 = xt[0], xt[-1], yt[0], yt[-1]

    def px(x: float) -> float:
        return MARGIN_LEFT + (x - x0) / (x1 - x0) * PLOT_W

    def py(y: float) -> float:
        frac = (y - y0) / (y1 - y0)
        if chart.invert_y:
            return MARGIN_TOP + frac * PLOT_H
        return MARGIN_TOP + (1.0 - frac) * PLOT_H

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" data-kind="{chart.kind}" '
        f'data-x-domain="{x0!r} {x1!r}" data-y-domain="{y0!r} {y1!r}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.2f}" y="28" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">{_escape(chart.title)}</text>',
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{PLOT_W}" height="{PLOT_H}" '
        'fill="none" stroke="#333" stroke-width="1"/>',
    ]

    x_step = xt[1] - xt[0] if len(xt) > 1 else 1.0
    y_step = yt[1] - yt[0] if len(yt) > 1 else 1.0
    bottom = MARGIN_TOP + PLOT_H
    for t in xt:
        x = _q(px(t))
        out.append(f'<line x1="{x}" y1="{MARGIN_TOP}" x2="{x}" y2="{bottom}" stroke="#ddd"/>')
        out.append(
            f'<text x="{x}" y="{bottom + 18}" text-anchor="middle" font-family="sans-serif" '
            f'font-size="11">{_tick_label(t, x_step)}</text>'
        )
    for t in yt:
        y = _q(py(t))
        out.append(
            f'<line x1="{MARGIN_LEFT}" y1="{y}" x2="{MARGIN_LEFT + PLOT_W}" y2="{y}" stroke="#ddd"/>'
        )
        out.append(
            f'<text x="{MARGIN_LEFT - 6}" y="{y}" text-anchor="end" dominant-baseline="middle" '
            f'font-family="sans-serif" font-size="11">{_tick_label(t, y_step)}</text>'
        )
    out.append(
        f'<text x="{MARGIN_LEFT + PLOT_W / 2:.2f}" y="{HEIGHT - 20}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">{_escape(chart.x_label)}</text>'
    )
    out.append(
        f'<text x="20" y="{MARGIN_TOP + PLOT_H / 2:.2f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 20 {MARGIN_TOP + PLOT_H / 2:.2f})">{_escape(chart.y_label)}</text>'
    )

    for k, s in enumerate(chart.series):
        color = COLORS[k % len(COLORS)]
        pts = " ".join(f"{_q(px(x))},{_q(py(y))}" for x, y in s.points)
        out.append(
            f'<polyline data-series="{_escape(s.name)}" fill="none" stroke="{color}" '
            f'stroke-width="2" points="{pts}"/>'
        )
        ly = MARGIN_TOP + 18 + 18 * k
        lx = MARGIN_LEFT + PLOT_W - 150
        out.append(
            f'<line x1="{lx}" y1="{ly}" x2="{lx + 24}" y2="{ly}" stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{lx + 30}" y="{ly}" dominant-baseline="middle" font-family="sans-serif" '
            f'font-size="12">{_escape(s.name)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"

