"""Static pictures of depth-``n`` covers: SVG rows and an endpoint CSV."""
from __future__ import annotations

import csv
import io
from fractions import Fraction

from .digitset import DigitSet
from .oracle import cover

WIDTH = 1000
ROW_HEIGHT = 24
ROW_GAP = 8
MARGIN = 10


def _x(v: Fraction, lo: Fraction, hi: Fraction) -> str:
    # drawing coordinates only; geometry stays exact everywhere else
    return f"{float((v - lo) / (hi - lo) * WIDTH):.4f}"


def cover_rows(D: DigitSet, depth: int) -> list[list[tuple[Fraction, Fraction]]]:
    """Cover components at depths ``0 .. depth``."""
    return [cover(D, n).union.pairs() for n in range(depth + 1)]


def to_svg(D: DigitSet, depth: int, lo: Fraction = Fraction(-1), hi: Fraction = Fraction(1)) -> str:
    """One row per depth, top to bottom, ``[lo, hi]`` mapped onto a 1000-unit width."""
    rows = cover_rows(D, depth)
    height = 2 * MARGIN + len(rows) * (ROW_HEIGHT + ROW_GAP) - ROW_GAP
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH + 2 * MARGIN}" height="{height}" '
        f'viewBox="{-MARGIN} {-MARGIN} {WIDTH + 2 * MARGIN} {height}">',
        f"<title>cover of {D}, depths 0-{depth}</title>",
    ]
    for n, parts in enumerate(rows):
        y = n * (ROW_HEIGHT + ROW_GAP)
        out.append(f'<g data-depth="{n}">')
        for a, b in parts:
            x0, x1 = _x(a, lo, hi), _x(b, lo, hi)
            w = f"{float(x1) - float(x0):.4f}"
            out.append(f'<rect x="{x0}" y="{y}" width="{w}" height="{ROW_HEIGHT}" '
                       f'data-lo="{a}" data-hi="{b}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_csv(D: DigitSet, depth: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["depth", "lo", "hi"])
    for n, parts in enumerate(cover_rows(D, depth)):
        for a, b in parts:
            w.writerow([n, str(a), str(b)])
    return buf.getvalue()
