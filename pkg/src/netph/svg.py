"""Static SVG barcode plots."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .persistence import Interval

PANEL_W = 480.0
MARGIN_L = 48.0
MARGIN_R = 24.0
MARGIN_T = 28.0
AXIS_H = 30.0
BAR_GAP = 3.0
MIN_PANEL_H = 60.0
MAX_PANEL_H = 420.0
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")

HEADER = (
    '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
    'width="{w:.1f}" height="{h:.1f}" viewBox="0 0 {w:.1f} {h:.1f}">\n'
    '<rect x="0" y="0" width="{w:.1f}" height="{h:.1f}" style="fill:#ffffff"/>\n'
)


def _x(v: float) -> float:
    return MARGIN_L + v * (PANEL_W - MARGIN_L - MARGIN_R)


def _panel(dim: int, bars: Sequence[Interval], top: float) -> tuple[list[str], float]:
    n = len(bars)
    pitch = BAR_GAP if n * BAR_GAP <= MAX_PANEL_H else MAX_PANEL_H / n
    plot_h = max(MIN_PANEL_H, n * pitch)
    color = COLORS[dim % len(COLORS)]
    stroke = max(0.3, min(2.0, pitch * 0.6))
    out = [
        f'<g id="H{dim}">',
        f'<text x="{MARGIN_L:.1f}" y="{top + 16:.1f}" font-family="sans-serif" '
        f'font-size="12">H{dim} ({n} bars)</text>',
    ]
    y0 = top + MARGIN_T
    for k, iv in enumerate(bars):
        y = y0 + (k + 0.5) * pitch
        x1, x2 = _x(iv.birth), _x(iv.death)
        out.append(
            f'<line x1="{x1:.2f}" y1="{y:.2f}" x2="{x2:.2f}" y2="{y:.2f}" '
            f'stroke="{color}" stroke-width="{stroke:.2f}"/>'
        )
        if iv.essential:
            out.append(
                f'<polygon points="{x2:.2f},{y - 2:.2f} {x2 + 4:.2f},{y:.2f} {x2:.2f},{y + 2:.2f}" '
                f'fill="{color}"/>'
            )
    ya = y0 + plot_h + 4
    out.append(
        f'<line x1="{_x(0):.2f}" y1="{ya:.2f}" x2="{_x(1):.2f}" y2="{ya:.2f}" stroke="#000000" '
        'stroke-width="1"/>'
    )
    for t in range(11):
        v = t / 10
        out.append(
            f'<line x1="{_x(v):.2f}" y1="{ya:.2f}" x2="{_x(v):.2f}" y2="{ya + 4:.2f}" '
            'stroke="#000000" stroke-width="1"/>'
        )
        if t % 2 == 0:
            out.append(
                f'<text x="{_x(v):.2f}" y="{ya + 16:.2f}" font-family="sans-serif" font-size="10" '
                f'text-anchor="middle">{v:.1f}</text>'
            )
    out.append("</g>")
    return out, MARGIN_T + plot_h + AXIS_H


def render_barcode_svg(
    barcodes: Mapping[int, Sequence[Interval]],
    dims: Iterable[int] = (0, 1),
    min_persistence: float | None = None,
) -> str:
    """Render one barcode panel per dimension on a shared ``[0, 1]`` axis.

    Bars are drawn in (birth, death) order; essential bars end at 1 with an
    arrowhead. With ``min_persistence`` set, bars with ``death - birth <=
    min_persistence`` are left out (``0`` hides only zero-length bars).
    """
    body: list[str] = []
    top = 0.0
    for d in dims:
        bars = list(barcodes.get(d, ()))
        if min_persistence is not None:
            bars = [iv for iv in bars if iv.death - iv.birth > min_persistence]
        bars.sort(key=lambda iv: (iv.birth, iv.death, iv.essential))
        lines, h = _panel(d, bars, top)
        body.extend(lines)
        top += h
    return HEADER.format(w=PANEL_W, h=max(top, MIN_PANEL_H)) + "\n".join(body) + "\n</svg>\n"
