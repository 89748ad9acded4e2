"""Chord diagrams of 2-uniform words as SVG 1.1.

Position 0 sits at the top of the circle and positions advance clockwise.
Each letter's two positions are joined by a straight ``<line class="chord">``.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .cycles import circle_representation
from .words import Word

SIZE = 400
RADIUS = 150
POINT_RADIUS = 4
LABEL_OFFSET = 18
FONT_SIZE = 14
CHORD_COLOR = "#1f77b4"
POINT_COLOR = "#000000"


def point_xy(i: int, length: int, radius: float = RADIUS) -> tuple[float, float]:
    """Screen coordinates of position ``i``; y grows downward."""
    theta = math.pi / 2 - 2 * math.pi * i / length
    c = SIZE / 2
    return (round(c + radius * math.cos(theta), 3), round(c - radius * math.sin(theta), 3))


def emit_svg(w: Word) -> str:
    rep = circle_representation(w)
    m = rep.length
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f"<!-- chord diagram of: {escape(str(w))} -->",
        f"<!-- style: size={SIZE} radius={RADIUS} point_radius={POINT_RADIUS} "
        f"label_offset={LABEL_OFFSET} font_size={FONT_SIZE} chord={CHORD_COLOR} point={POINT_COLOR} -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<circle class="rim" cx="{SIZE / 2}" cy="{SIZE / 2}" r="{RADIUS}" fill="none" stroke="#999999"/>',
    ]
    for letter, chord in rep.chords.items():
        (x1, y1), (x2, y2) = point_xy(chord.first, m), point_xy(chord.second, m)
        out.append(
            f'<line class="chord" data-letter="{escape(letter)}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="{CHORD_COLOR}" stroke-width="2"/>'
        )
    for i, letter in enumerate(w.letters):
        x, y = point_xy(i, m)
        lx, ly = point_xy(i, m, RADIUS + LABEL_OFFSET)
        out.append(
            f'<g class="point" data-position="{i}">'
            f'<circle cx="{x}" cy="{y}" r="{POINT_RADIUS}" fill="{POINT_COLOR}"/>'
            f'<text x="{lx}" y="{ly}" font-size="{FONT_SIZE}" text-anchor="middle" '
            f'dominant-baseline="central">{escape(letter)}</text></g>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
