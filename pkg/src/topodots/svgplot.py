"""Self-contained SVG renderings of a barcode.

Plain text, fixed layout, no timestamps: a given barcode always serializes
to the same bytes.  Bars and scatter points carry class attributes so tests
(and scripts) can count them.
"""
from __future__ import annotations

from .persistence import Barcode, PersistencePair

_COLORS = {0: "#3b6ea5", 1: "#d2691e"}

_W = 640
_LEFT = 72
_RIGHT = 46
_BAR_H = 6
_BAR_GAP = 4
_LANE_GAP = 26


def _pairs(b: Barcode, include_zero_length: bool) -> list[PersistencePair]:
    return [p for p in b.pairs if include_zero_length or not p.is_zero_length]


def _f(v: float) -> str:
    return f"{v:.2f}"


def barcode_svg(b: Barcode, include_zero_length: bool = False) -> str:
    """One horizontal bar per pair, dimension-0 and dimension-1 lanes.

    Never-dying features run to the right edge and end in an arrowhead.
    """
    from .io import fmt

    lanes = [
        ("dim 0 (pieces)", [p for p in _pairs(b, include_zero_length) if p.dimension == 0]),
        ("dim 1 (holes)", [p for p in _pairs(b, include_zero_length) if p.dimension == 1]),
    ]
    span = _W - _LEFT - _RIGHT

    def x(v: float) -> float:
        return _LEFT + span * (v / b.r_max)

    body = []
    y = 30.0
    for label, pairs in lanes:
        body.append(f'<text x="{_LEFT}" y="{_f(y)}" font-size="12" fill="#333">{label}</text>')
        y += 12
        for p in pairs:
            x0 = x(p.birth)
            x1 = x(b.r_max if p.is_infinite else p.death)
            color = _COLORS[p.dimension]
            body.append(
                f'<rect class="bar" data-dim="{p.dimension}" x="{_f(x0)}" y="{_f(y)}" '
                f'width="{_f(x1 - x0)}" height="{_BAR_H}" fill="{color}"/>'
            )
            if p.is_infinite:
                ym = y + _BAR_H / 2
                body.append(
                    f'<path class="arrow" d="M{_f(x1)},{_f(ym - 5)} L{_f(x1 + 9)},{_f(ym)} '
                    f'L{_f(x1)},{_f(ym + 5)} Z" fill="{color}"/>'
                )
            y += _BAR_H + _BAR_GAP
        y += _LANE_GAP
    axis_y = y
    body.append(
        f'<line x1="{_LEFT}" y1="{_f(axis_y)}" x2="{_W - _RIGHT}" y2="{_f(axis_y)}" '
        'stroke="#333" stroke-width="1"/>'
    )
    for v in (0.0, b.r_max):
        body.append(
            f'<line x1="{_f(x(v))}" y1="{_f(axis_y)}" x2="{_f(x(v))}" y2="{_f(axis_y + 5)}" '
            'stroke="#333" stroke-width="1"/>'
        )
        body.append(
            f'<text x="{_f(x(v))}" y="{_f(axis_y + 18)}" font-size="11" fill="#333" '
            f'text-anchor="middle">{fmt(v)}</text>'
        )
    height = int(axis_y + 30)
    return _document(_W, height, body)


def diagram_svg(b: Barcode, include_zero_length: bool = False) -> str:
    """Birth/death scatter; finite pairs sit strictly above the diagonal.

    Never-dying pairs are drawn as upward triangles pinned to the top edge.
    """
    from .io import fmt

    size = 480
    left, right, top, bottom = 64, 30, 26, 48
    span_x = size - left - right
    span_y = size - top - bottom

    def x(v: float) -> float:
        return left + span_x * (v / b.r_max)

    def y(v: float) -> float:
        return top + span_y * (1 - v / b.r_max)

    body = [
        f'<line x1="{_f(x(0))}" y1="{_f(y(0))}" x2="{_f(x(b.r_max))}" y2="{_f(y(b.r_max))}" '
        'stroke="#999" stroke-width="1"/>',
        f'<line x1="{_f(x(0))}" y1="{_f(y(0))}" x2="{_f(x(b.r_max))}" y2="{_f(y(0))}" '
        'stroke="#333" stroke-width="1"/>',
        f'<line x1="{_f(x(0))}" y1="{_f(y(0))}" x2="{_f(x(0))}" y2="{_f(y(b.r_max))}" '
        'stroke="#333" stroke-width="1"/>',
    ]
    for p in _pairs(b, include_zero_length):
        color = _COLORS[p.dimension]
        if p.is_infinite:
            px, py = x(p.birth), y(b.r_max)
            body.append(
                f'<path class="essential" data-dim="{p.dimension}" '
                f'd="M{_f(px - 5)},{_f(py + 8)} L{_f(px)},{_f(py - 1)} L{_f(px + 5)},{_f(py + 8)} Z" '
                f'fill="{color}"/>'
            )
        else:
            body.append(
                f'<circle class="pt" data-dim="{p.dimension}" data-birth="{fmt(p.birth)}" '
                f'data-death="{fmt(p.death)}" cx="{_f(x(p.birth))}" cy="{_f(y(p.death))}" '
                f'r="3.5" fill="{color}" fill-opacity="0.75"/>'
            )
    for v in (0.0, b.r_max):
        body.append(
            f'<text x="{_f(x(v))}" y="{_f(y(0) + 16)}" font-size="11" fill="#333" '
            f'text-anchor="middle">{fmt(v)}</text>'
        )
        body.append(
            f'<text x="{_f(x(0) - 8)}" y="{_f(y(v) + 4)}" font-size="11" fill="#333" '
            f'text-anchor="end">{fmt(v)}</text>'
        )
    body.append(
        f'<text x="{_f(x(b.r_max / 2))}" y="{size - 10}" font-size="12" fill="#333" '
        'text-anchor="middle">birth radius</text>'
    )
    return _document(size, size, body)


def _document(width: int, height: int, body: list[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
        f'<rect width="{width}" height="{height}" fill="white"/>\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"
