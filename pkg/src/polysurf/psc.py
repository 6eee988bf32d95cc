"""psc-1: a JSON interchange format for gluing data.

    {
      "format": "psc-1",
      "faces": [{"id": 0, "sides": 4}],
      "gluings": [{"a": [0, 0], "b": [0, 2], "reversed": true}]
    }

Face ids are integers or strings.  Slots are ``[face id, side index]`` with
zero-based side indices.  ``reversed`` is optional and defaults to true.
Slots that appear in no gluing are boundary.  Unknown top-level keys other
than ``meta`` (a free-form object, kept but ignored) are rejected.
"""

from __future__ import annotations

import json
from typing import Any

from .complex import Gluing, GluingData, PolygonalComplex, Slot
from .errors import DuplicateSlot, PscSyntaxError, SchemaError, SelfPairedSlot

FORMAT = "psc-1"
_TOP = {"format", "faces", "gluings", "meta"}


def _fail(path: str, msg: str):
    raise SchemaError(f"{path}: {msg}")


def _face_id(value: Any, path: str):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        _fail(path, "face id must be an integer or a string")
    return value


def _int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(path, "expected an integer")
    return value


def parse_psc(text: str) -> GluingData:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PscSyntaxError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        _fail("$", "document must be a JSON object")
    extra = set(doc) - _TOP
    if extra:
        _fail("$", f"unknown field(s) {sorted(extra)}")
    if doc.get("format") != FORMAT:
        _fail("$.format", f"expected {FORMAT!r}, got {doc.get('format')!r}")
    faces_raw = doc.get("faces")
    if not isinstance(faces_raw, list) or not faces_raw:
        _fail("$.faces", "must be a non-empty list")
    faces = []
    sides: dict = {}
    for k, f in enumerate(faces_raw):
        path = f"$.faces[{k}]"
        if not isinstance(f, dict) or set(f) != {"id", "sides"}:
            _fail(path, 'each face must be an object with exactly "id" and "sides"')
        fid = _face_id(f["id"], path + ".id")
        n = _int(f["sides"], path + ".sides")
        if n < 3:
            _fail(path + ".sides", f"a face needs at least 3 sides, got {n}")
        if fid in sides:
            _fail(path + ".id", f"duplicate face id {fid!r}")
        sides[fid] = n
        faces.append((fid, n))
    gl_raw = doc.get("gluings", [])
    if not isinstance(gl_raw, list):
        _fail("$.gluings", "must be a list")
    gluings = []
    used: dict = {}
    for k, g in enumerate(gl_raw):
        path = f"$.gluings[{k}]"
        if not isinstance(g, dict) or not {"a", "b"} <= set(g) or set(g) - {"a", "b", "reversed"}:
            _fail(path, 'each gluing needs "a" and "b" and may carry "reversed"')
        slots = []
        for key in ("a", "b"):
            s = g[key]
            sp = f"{path}.{key}"
            if not isinstance(s, list) or len(s) != 2:
                _fail(sp, "slot must be [face id, side index]")
            fid = _face_id(s[0], sp + "[0]")
            i = _int(s[1], sp + "[1]")
            if fid not in sides:
                _fail(sp + "[0]", f"unknown face id {fid!r}")
            if not 0 <= i < sides[fid]:
                _fail(sp + "[1]", f"side index {i} out of range for a {sides[fid]}-gon")
            if key == "b" and slots[0] == Slot(fid, i):
                raise SelfPairedSlot(f"{path}: slot {[fid, i]} is glued to itself")
            if (fid, i) in used:
                raise DuplicateSlot(f"{sp}: slot {[fid, i]} already used in {used[(fid, i)]}")
            used[(fid, i)] = path
            slots.append(Slot(fid, i))
        rev = g.get("reversed", True)
        if not isinstance(rev, bool):
            _fail(path + ".reversed", "must be true or false")
        gluings.append(Gluing(slots[0], slots[1], rev))
    return GluingData(tuple(faces), tuple(gluings))


def serialize_psc(data: GluingData | PolygonalComplex, meta: dict | None = None) -> str:
    """Deterministic text: one face or gluing per line, input order kept."""
    if isinstance(data, PolygonalComplex):
        data = data.gluing_data()
    dump = lambda x: json.dumps(x, ensure_ascii=False)
    lines = ["{", f'  "format": "{FORMAT}",']
    if meta is not None:
        lines.append(f'  "meta": {dump(meta)},')
    faces = [f'    {{"id": {dump(fid)}, "sides": {n}}}' for fid, n in data.faces]
    lines += ['  "faces": [', ",\n".join(faces), "  ],"]
    gl = [
        f'    {{"a": {dump([g.a.face_id, g.a.side_index])}, "b": {dump([g.b.face_id, g.b.side_index])}, '
        f'"reversed": {dump(bool(g.reversed))}}}'
        for g in data.gluings
    ]
    if gl:
        lines += ['  "gluings": [', ",\n".join(gl), "  ]"]
    else:
        lines.append('  "gluings": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def semantically_equal(a: GluingData, b: GluingData) -> bool:
    """Same faces and same set of gluings (slot order within a pair ignored)."""
    key = lambda g: (frozenset([(g.a.face_id, g.a.side_index), (g.b.face_id, g.b.side_index)]), g.reversed)
    return dict(a.faces) == dict(b.faces) and len(a.faces) == len(b.faces) and (
        sorted(map(key, a.gluings), key=repr) == sorted(map(key, b.gluings), key=repr)
    )


def read_psc(path) -> GluingData:
    with open(path, encoding="utf-8") as fh:
        return parse_psc(fh.read())


def write_psc(path, data, meta: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_psc(data, meta))
