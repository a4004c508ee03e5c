"""
Arc diagrams of matchings: points 1...2n on a baseline, every arc a semicircle above it.
Openers are drawn as filled circles, closers as squares.
Rendering does not require the Stoimenow property.
"""
import io
from typing import Union, Tuple, Optional

import numpy as np
from PIL import Image, ImageDraw

from .core import Matching
from .helper import fit_image_size

SPACING = 40  # point k sits at x = SPACING * k
MARGIN = 20
POINT_RADIUS = 5
LABEL_OFFSET = 20

ASCII_SPACING = 3
ASCII_OPENER = '*'
ASCII_CLOSER = '#'

FORMATS = ('ascii', 'svg', 'png')


def render_ascii(m: Matching) -> str:
    """One row per arc, longest arcs on top, then the baseline with markers and a row of point numbers."""
    spacing = max(ASCII_SPACING, len(str(m.size)) + 1)
    arcs = sorted(m.arcs, key=lambda arc: (-arc.span, arc.opener))
    width = spacing * (m.size - 1) + len(str(m.size))
    grid = np.full((len(arcs) + 2, width), ' ', dtype='<U1')
    baseline = len(arcs)
    for row, arc in enumerate(arcs):
        left, right = spacing * (arc.opener - 1), spacing * (arc.closer - 1)
        grid[row, left:right + 1] = '-'
        grid[row, [left, right]] = '+'
    for row, arc in enumerate(arcs):
        for column in (spacing * (arc.opener - 1), spacing * (arc.closer - 1)):
            for below in range(row + 1, baseline):
                if grid[below, column] == ' ':
                    grid[below, column] = '|'
                elif grid[below, column] == '-':
                    grid[below, column] = '+'
    for p in range(1, m.size + 1):
        column = spacing * (p - 1)
        grid[baseline, column] = ASCII_OPENER if m.is_opener(p) else ASCII_CLOSER
        for offset, digit in enumerate(str(p)):
            grid[baseline + 1, column + offset] = digit
    return '\n'.join(''.join(row) for row in grid)


def _geometry(m: Matching) -> Tuple[int, int, int]:
    """Canvas width, canvas height and baseline y."""
    baseline = MARGIN + SPACING // 2 * (m.size - 1)
    return SPACING * (m.size + 1), baseline + LABEL_OFFSET + MARGIN, baseline


def render_svg(m: Matching) -> str:
    width, height, y = _geometry(m)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'  <line x1="{SPACING}" y1="{y}" x2="{SPACING * m.size}" y2="{y}" stroke="gray" stroke-width="1"/>',
    ]
    for arc in m.arcs:
        radius = SPACING // 2 * arc.span
        lines.append(f'  <path d="M {SPACING * arc.opener} {y} A {radius} {radius} 0 0 1 {SPACING * arc.closer} {y}" fill="none" stroke="black" stroke-width="2"/>')
    for p in range(1, m.size + 1):
        x = SPACING * p
        if m.is_opener(p):
            lines.append(f'  <circle cx="{x}" cy="{y}" r="{POINT_RADIUS}" fill="black"/>')
        else:
            lines.append(f'  <rect x="{x - POINT_RADIUS}" y="{y - POINT_RADIUS}" width="{2 * POINT_RADIUS}" height="{2 * POINT_RADIUS}" fill="white" stroke="black" stroke-width="2"/>')
        lines.append(f'  <text x="{x}" y="{y + LABEL_OFFSET}" text-anchor="middle" font-family="monospace" font-size="12">{p}</text>')
    lines.append('</svg>')
    return '\n'.join(lines) + '\n'


def render_image(m: Matching, max_size: Optional[Tuple[int, int]] = None) -> Image.Image:
    """Raster version of `render_svg()`, optionally shrunk to fit into `max_size` = (width, height)."""
    width, height, y = _geometry(m)
    image = Image.new('RGB', (width, height), 'white')
    draw = ImageDraw.Draw(image)
    draw.line([(SPACING, y), (SPACING * m.size, y)], fill='gray', width=1)
    for arc in m.arcs:
        radius = SPACING // 2 * arc.span
        draw.arc([SPACING * arc.opener, y - radius, SPACING * arc.closer, y + radius], start=180, end=360, fill='black', width=2)
    for p in range(1, m.size + 1):
        box = [SPACING * p - POINT_RADIUS, y - POINT_RADIUS, SPACING * p + POINT_RADIUS, y + POINT_RADIUS]
        if m.is_opener(p):
            draw.ellipse(box, fill='black')
        else:
            draw.rectangle(box, fill='white', outline='black', width=2)
        draw.text((SPACING * p - 3 * len(str(p)), y + LABEL_OFFSET - 6), str(p), fill='black')
    if max_size:
        image = image.resize(fit_image_size(image.size, *max_size))
    return image


def render(m: Matching, format: str = 'ascii', max_size: Optional[Tuple[int, int]] = None) -> Union[str, bytes]:
    """Text for 'ascii' and 'svg', PNG file content for 'png'. `max_size` only applies to 'png'."""
    if format == 'ascii':
        return render_ascii(m)
    if format == 'svg':
        return render_svg(m)
    if format == 'png':
        buffer = io.BytesIO()
        render_image(m, max_size).save(buffer, format='PNG')
        return buffer.getvalue()
    raise ValueError(f"Unknown render format '{format}'. Use one of {', '.join(FORMATS)}.")
