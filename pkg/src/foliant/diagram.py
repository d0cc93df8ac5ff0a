"""Weight-diagram exports: plain-text lattice dump and an SVG scatter.

The dump lists one line per support class, ``w0 w1 w2 : monomials``.
The SVG draws the full monomial-basis lattice of the field's degree in
the projection plane (w0 - w2, w1 - w2), with the support highlighted;
it is purely presentational, every datum also exists in the dump.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .foliation import Foliation, gamma_basis
from .stability import WeightSupport, weight_of_monomial, weight_support


def dump_lines(support: WeightSupport) -> List[str]:
    out = []
    for w, monos in support.entries:
        out.append(f"{w.w[0]} {w.w[1]} {w.w[2]} : " + ", ".join(monos))
    return out


def lattice_classes(degree: int) -> Dict[Tuple[int, int], int]:
    """Projected weight classes of the full monomial basis, with the
    number of basis monomials carrying each class."""
    counts: Dict[Tuple[int, int], int] = {}
    for b in gamma_basis(degree):
        for comp, c in enumerate(b.components):
            for e in c.terms:
                p = weight_of_monomial(e, comp).projection()
                counts[p] = counts.get(p, 0) + 1
    return counts


def render_svg(fol: Foliation) -> str:
    """Deterministic scatter of the degree-d weight lattice with the
    support of the given field filled in."""
    d = fol.degree
    support = weight_support(fol)
    sup_pts = {w.projection() for w in support.classes}
    lattice = lattice_classes(d)
    extent = d + 2
    unit = 36
    size = 2 * extent * unit + 2 * unit
    half = size // 2

    def sx(px: int) -> int:
        return half + px * unit

    def sy(py: int) -> int:
        return half - py * unit

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for k in range(-extent, extent + 1):
        parts.append(
            f'<line x1="{sx(k)}" y1="0" x2="{sx(k)}" y2="{size}" '
            f'stroke="#dddddd" stroke-width="1"/>')
        parts.append(
            f'<line x1="0" y1="{sy(k)}" x2="{size}" y2="{sy(k)}" '
            f'stroke="#dddddd" stroke-width="1"/>')
    parts.append(
        f'<line x1="{sx(-extent)}" y1="{sy(0)}" x2="{sx(extent)}" '
        f'y2="{sy(0)}" stroke="#888888" stroke-width="2"/>')
    parts.append(
        f'<line x1="{sx(0)}" y1="{sy(-extent)}" x2="{sx(0)}" '
        f'y2="{sy(extent)}" stroke="#888888" stroke-width="2"/>')
    for p in sorted(lattice):
        count = lattice[p]
        filled = p in sup_pts
        fill = "#d62728" if filled else "#ffffff"
        stroke = "#d62728" if filled else "#555555"
        r = 9 if filled else 6
        parts.append(
            f'<circle cx="{sx(p[0])}" cy="{sy(p[1])}" r="{r}" '
            f'fill="{fill}" stroke="{stroke}" stroke-width="2"/>')
        if count > 1:
            parts.append(
                f'<text x="{sx(p[0]) + 10}" y="{sy(p[1]) - 10}" '
                f'font-size="12" fill="#333333">{count}</text>')
    parts.append(
        f'<circle cx="{sx(0)}" cy="{sy(0)}" r="3" fill="#000000"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
