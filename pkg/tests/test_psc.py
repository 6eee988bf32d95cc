import json
from pathlib import Path

import pytest

from polysurf.complex import build_complex
from polysurf.errors import DuplicateSlot, PscSyntaxError, SchemaError, SelfPairedSlot
from polysurf.generators import closed_fixtures, generate
from polysurf.psc import parse_psc, read_psc, semantically_equal, serialize_psc

FIXTURES = Path(__file__).parent / "fixtures"


def doc(faces, gluings, **extra):
    return json.dumps({"format": "psc-1", "faces": faces, "gluings": gluings, **extra}, indent=1)


def test_square_torus_fixture():
    data = read_psc(FIXTURES / "square_torus.psc")
    assert len(data.faces) == 1 and len(data.gluings) == 2
    assert serialize_psc(data) == (FIXTURES / "square_torus.psc").read_text()


def test_slot_index_equal_to_sides_rejected():
    text = doc([{"id": 0, "sides": 4}], [{"a": [0, 0], "b": [0, 4]}])
    with pytest.raises(SchemaError, match=r"gluings\[0\]\.b\[1\]"):
        parse_psc(text)


def test_reversed_defaults_true():
    data = parse_psc(doc([{"id": 0, "sides": 4}], [{"a": [0, 0], "b": [0, 2]}]))
    assert data.gluings[0].reversed is True


def test_syntax_error_cites_line():
    text = '{\n  "format": "psc-1",\n  "faces": [\n    {"id": 0 "sides": 4}\n  ]\n}\n'
    with pytest.raises(PscSyntaxError, match="line 4"):
        parse_psc(text)


@pytest.mark.parametrize(
    "text, exc, where",
    [
        (json.dumps({"format": "psc-2", "faces": []}), SchemaError, r"\$\.format"),
        (doc([], []), SchemaError, r"\$\.faces"),
        (doc([{"id": 0, "sides": 2}], []), SchemaError, r"faces\[0\]\.sides"),
        (doc([{"id": 0, "sides": 4}, {"id": 0, "sides": 3}], []), SchemaError, r"faces\[1\]\.id"),
        (doc([{"id": 0, "sides": 4}], [{"a": [1, 0], "b": [0, 1]}]), SchemaError, r"a\[0\]"),
        (doc([{"id": 0, "sides": 4}], [{"a": [0, 0], "b": [0, 1], "reversed": "yes"}]), SchemaError, "reversed"),
        (doc([{"id": 0, "sides": 4}], [{"a": [0, 0], "b": [0, 1]}, {"a": [0, 1], "b": [0, 2]}]), DuplicateSlot, r"gluings\[1\]"),
        (doc([{"id": 0, "sides": 4}], [{"a": [0, 0], "b": [0, 0]}]), SelfPairedSlot, r"gluings\[0\]"),
        (doc([{"id": 0, "sides": 4}], [], extra=1), SchemaError, "unknown field"),
    ],
)
def test_schema_errors(text, exc, where):
    with pytest.raises(exc, match=where):
        parse_psc(text)


def test_round_trip_fixtures_and_generators():
    sources = [read_psc(p) for p in sorted(FIXTURES.glob("*.psc"))]
    sources += [c.gluing_data() for c in closed_fixtures().values()]
    sources += [generate("pq_ball", p, q, 2).gluing_data() for p, q in ((7, 3), (4, 4), (3, 7))]
    sources += [generate("pq_ball", 7, 3, 1, complete_rim=True).gluing_data()]
    for data in sources:
        text = serialize_psc(data)
        again = parse_psc(text)
        assert semantically_equal(data, again)
        assert serialize_psc(again) == text
        build_complex(again)


def test_string_face_ids_and_meta():
    text = doc([{"id": "a", "sides": 3}, {"id": "b", "sides": 3}],
               [{"a": ["a", i], "b": ["b", 2 - i]} for i in range(3)], meta={"note": "pillow"})
    cx = build_complex(parse_psc(text))
    assert cx.num_vertices == 3 and cx.is_closed
