"""Static SVG braid diagrams, read top to bottom (t=0 at the top)."""

from __future__ import annotations

from typing import Iterable, Optional
from xml.sax.saxutils import escape

from .braid import BraidWord

SPACING = 40
ROW = 50
MARGIN = 30
GAP = 0.18  # fraction of a crossing segment left blank around the under-strand's midpoint

BASE_STROKE = "#c0392b"
OTHER_STROKE = "#2c3e50"


def _x(pos: int) -> float:
    return MARGIN + (pos - 1) * SPACING


def _y(row: int) -> float:
    return MARGIN + row * ROW


def _line(x1, y1, x2, y2, color) -> str:
    return (f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
            f'stroke="{color}" stroke-width="3" stroke-linecap="round"/>')


def render_svg(b: BraidWord, base: Optional[Iterable[int]] = None,
               labels: bool = False) -> str:
    """SVG 1.1 markup for ``b``.

    For sigma_i (positive) the strand moving from position i+1 to i passes
    over; for sigma_i^-1 the other one does. Base strands get their own color.
    """
    base = frozenset(base or ())
    rows = max(len(b), 1)
    width = 2 * MARGIN + (b.n - 1) * SPACING + (30 if labels else 0)
    height = 2 * MARGIN + rows * ROW
    color = {s: BASE_STROKE if s in base else OTHER_STROKE for s in range(1, b.n + 1)}

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<title>{escape(b.pretty())} in B_{b.n}</title>',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    at = list(range(1, b.n + 1))
    if not b.letters:
        for p, s in enumerate(at, 1):
            parts.append(_line(_x(p), _y(0), _x(p), _y(1), color[s]))
    for row, (i, e) in enumerate(b.letters):
        y0, y1 = _y(row), _y(row + 1)
        for p, s in enumerate(at, 1):
            if p not in (i, i + 1):
                parts.append(_line(_x(p), y0, _x(p), y1, color[s]))
        left, right = at[i - 1], at[i]
        # left strand travels i -> i+1, right strand travels i+1 -> i
        over_is_right = e > 0
        segs = {left: (_x(i), _x(i + 1)), right: (_x(i + 1), _x(i))}
        under = left if over_is_right else right
        over = right if over_is_right else left
        xa, xb = segs[under]
        for lo, hi in ((0.0, 0.5 - GAP), (0.5 + GAP, 1.0)):
            parts.append(_line(xa + (xb - xa) * lo, y0 + (y1 - y0) * lo,
                               xa + (xb - xa) * hi, y0 + (y1 - y0) * hi, color[under]))
        xa, xb = segs[over]
        parts.append(_line(xa, y0, xb, y1, color[over]))
        if labels and (not base or (left in base) != (right in base)):
            parts.append(f'<text x="{_x(b.n) + 12:.1f}" y="{(y0 + y1) / 2 + 5:.1f}" '
                         f'font-family="sans-serif" font-size="14">{"+1" if e > 0 else "-1"}</text>')
        at[i - 1], at[i] = right, left
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(b: BraidWord, path, base: Optional[Iterable[int]] = None,
              labels: bool = False) -> None:
    with open(path, "w") as fh:
        fh.write(render_svg(b, base, labels))
