import io

import pytest
from PIL import Image

from stoimenow.core import parse_matching
from stoimenow.render import render, render_ascii, render_svg, render_image


def test_ascii_single_arc():
    assert render_ascii(parse_matching("2 1")) == "+--+\n*  #\n1  2"


def test_ascii_draws_nestings():
    assert render_ascii(parse_matching("4 3 2 1")) == "\n".join([
        "+--------+",
        "|  +--+  |",
        "*  *  #  #",
        "1  2  3  4",
    ])


def test_ascii_rows_have_equal_width():
    rows = render_ascii(parse_matching("5 7 8 10 1 12 2 3 13 4 14 6 9 11")).split("\n")
    assert len(rows) == 7 + 2
    assert len({len(row) for row in rows}) == 1
    assert rows[-1].split() == [str(p) for p in range(1, 15)]


def test_svg():
    svg = render_svg(parse_matching("3 4 1 2 6 5"))
    assert svg.startswith('<?xml')
    assert 'width="280" height="160"' in svg
    assert 'd="M 40 120 A 40 40 0 0 1 120 120"' in svg
    assert svg.count('<path') == 3
    assert svg.count('<circle') == 3
    assert svg.count('<rect') == 3
    assert svg == render_svg(parse_matching("1-3,2-4,5-6"))


def test_image():
    image = render_image(parse_matching("3 4 1 2 6 5"))
    assert image.size == (280, 160)
    assert render_image(parse_matching("3 4 1 2 6 5"), (140, 140)).size == (140, 80)


def test_render_formats():
    m = parse_matching("4 3 2 1")
    assert render(m) == render_ascii(m)
    assert render(m, 'svg') == render_svg(m)
    assert render(m, 'png').startswith(b'\x89PNG')
    with pytest.raises(ValueError):
        render(m, 'gif')


def test_png_can_be_shrunk():
    m = parse_matching("3 4 1 2 6 5")
    data = render(m, 'png', max_size=(140, 140))
    with Image.open(io.BytesIO(data)) as image:
        assert image.size == (140, 80)
