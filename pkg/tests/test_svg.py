import xml.etree.ElementTree as ET

from netph.complex import build_filtration, enumerate_cliques
from netph.persistence import Interval, barcodes, compute_persistence
from netph.svg import MARGIN_L, MARGIN_R, PANEL_W, render_barcode_svg

from graphs import cycle

NS = "{http://www.w3.org/2000/svg}"


def bar_lines(svg: str, dim: int):
    root = ET.fromstring(svg)
    group = next(g for g in root.iter(NS + "g") if g.get("id") == f"H{dim}")
    return [ln for ln in group.iter(NS + "line") if ln.get("stroke") != "#000000"], group


def c4_barcodes():
    s = enumerate_cliques(cycle(4))
    fc = build_filtration(s, {x: 0.5 for x in s})
    return barcodes(compute_persistence(fc), fc)


def test_empty_barcode_is_axes_only():
    svg = render_barcode_svg({}, dims=(0,))
    bars, group = bar_lines(svg, 0)
    assert bars == []
    assert len([ln for ln in group.iter(NS + "line")]) == 12  # axis plus 11 ticks


def test_c4_full_length_bars():
    bars = c4_barcodes()
    svg = render_barcode_svg(bars, dims=(0, 1), min_persistence=0)
    right = PANEL_W - MARGIN_R
    for d in (0, 1):
        lines, group = bar_lines(svg, d)
        assert len(lines) == 1
        assert float(lines[0].get("x2")) == right
        assert len(list(group.iter(NS + "polygon"))) == 1


def test_zero_length_bars_suppressed_by_flag():
    bars = c4_barcodes()
    assert len(bar_lines(render_barcode_svg(bars), 0)[0]) == 4
    assert len(bar_lines(render_barcode_svg(bars, min_persistence=0), 0)[0]) == 1


def test_axis_covers_unit_interval():
    iv = Interval(0, 0.0, 0.25, False, 0, 1)
    lines, _ = bar_lines(render_barcode_svg({0: [iv]}, dims=(0,)), 0)
    assert float(lines[0].get("x1")) == MARGIN_L
    assert float(lines[0].get("x2")) == MARGIN_L + 0.25 * (PANEL_W - MARGIN_L - MARGIN_R)


def test_deterministic_and_order_independent():
    bars = c4_barcodes()
    shuffled = {d: list(reversed(v)) for d, v in bars.items()}
    assert render_barcode_svg(bars, (0, 1, 2, 3)) == render_barcode_svg(shuffled, (0, 1, 2, 3))
