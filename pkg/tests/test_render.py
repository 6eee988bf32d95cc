import re

import numpy as np
import pytest

from polysurf.errors import NotPlanar
from polysurf.generators import generate
from polysurf.render import RenderOptions, render_svg, tutte_layout


def segments_cross(p1, p2, q1, q2):
    """Proper crossing of two segments that share no endpoint."""
    def orient(a, b, c):
        return np.sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))

    return orient(p1, p2, q1) * orient(p1, p2, q2) < 0 and orient(q1, q2, p1) * orient(q1, q2, p2) < 0


def edge_segments(layout):
    cx, pos = layout.complex, layout.positions
    segs = set()
    for d, _ in cx.edges:
        f, i = cx.slot(d)
        a, b = cx.corner_vertex[(f, i)], cx.corner_vertex[(f, (i + 1) % cx.sides[f])]
        segs.add((min(a, b), max(a, b)))
    return [(a, b, pos[a], pos[b]) for a, b in sorted(segs)]


@pytest.mark.parametrize("spec", [("pq_ball", 4, 4, 3), ("pq_ball", 7, 3, 2), ("platonic", "dodecahedron"), ("prism", 6)])
def test_layout_is_plane(spec):
    lay = tutte_layout(generate(*spec))
    segs = edge_segments(lay)
    for k, (a, b, p, q) in enumerate(segs):
        for c, d, r, s in segs[k + 1 :]:
            if {a, b} & {c, d}:
                continue
            assert not segments_cross(p, q, r, s)


def test_svg_deterministic_and_complete():
    cx = generate("pq_ball", 7, 3, 2)
    a = render_svg(cx)
    assert a == render_svg(cx)
    assert a.count("<polygon") == cx.num_faces
    assert a.startswith("<svg") and a.rstrip().endswith("</svg>")


def test_closed_complex_drops_one_face():
    cx = generate("platonic", "cube")
    lay = tutte_layout(cx)
    assert lay.dropped_face == 0 and lay.complex.num_faces == 5
    assert render_svg(cx).count("<polygon") == 5


def test_curvature_labels(tmp_path):
    cx = generate("pq_ball", 7, 3, 2)
    out = tmp_path / "ball.svg"
    svg = render_svg(cx, RenderOptions(label_curvature=True, output_path=str(out)))
    assert out.read_text() == svg
    labels = re.findall(r"<text[^>]*>([^<]*)</text>", svg)
    assert len(labels) == len(cx.interior_vertices()) and set(labels) == {"-1/14"}


def test_colours_by_size():
    svg = render_svg(generate("prism", 5))
    fills = set(re.findall(r'fill="(#[0-9a-f]+)"', svg))
    assert len(fills) == 2


def test_not_planar():
    with pytest.raises(NotPlanar):
        render_svg(generate("square_torus"))
