import json
import xml.etree.ElementTree as ET

import pytest

import quasiline as q

FANO = """1 2 3
1 4 5
1 6 7
2 4 6
2 5 7
3 4 7
3 5 6
"""


def test_fano_structure():
    c = q.IncidenceStructure.from_text(FANO)
    assert c.flag_count == 21
    assert c.is_lineal()
    assert c.girth() == 6
    assert c.signature() == (7, 3, 7, 3)


def test_realize_and_map():
    c = q.IncidenceStructure.from_text(FANO)
    seq, d = q.realize(c)
    assert q.classify(seq) in ("Allowable", "GeneralizedAllowable")
    assert len(seq.designated) == 7
    assert q.sequence_from_diagram(d) == seq
    m = q.map_summary(d)
    assert (m["V"], m["E"]) == (7, 21)
    assert sum(m["face_vector"]) == 2 * m["E"]
    assert m["euler"] == m["V"] - m["E"] + m["F"]


def test_json_roundtrip():
    c = q.IncidenceStructure.from_text(FANO)
    _, d = q.realize(c)
    js = d.to_json()
    assert q.WiringDiagram.from_json(json.loads(json.dumps(js))) == d
    assert q.fingerprint(js) == q.fingerprint(d)


def test_sequences():
    s = q.PermSequence(3, [(1, 2), (2, 2), (1, 2)])
    assert q.classify(s) == "Allowable"
    assert s.permutation_after(3) == [3, 2, 1]
    assert q.classify(q.PermSequence(2, [(1, 2)] * 3)) == "GeneralizedAllowable"
    with pytest.raises(q.Error, match="InvalidMove"):
        q.PermSequence(3, [(1, 1)])


def test_pappus_lines_and_straighten():
    pts = {"A1": (0, 0), "A2": (2, 1), "A3": ("5", "5/2"), "B1": (1, 3), "B2": (2, 5), "B3": (4, 9)}
    from fractions import Fraction as F

    def P(v):
        return tuple(F(x) for x in v)

    def line(p, r, label):
        (x1, y1), (x2, y2) = P(p), P(r)
        a, b = y2 - y1, x1 - x2
        return {"label": label, "a": str(a), "b": str(b), "c": str(a * x1 + b * y1)}

    def meet(l, m):
        a1, b1, c1 = (F(l[k]) for k in "abc")
        a2, b2, c2 = (F(m[k]) for k in "abc")
        den = a1 * b2 - b1 * a2
        return ((c1 * b2 - b1 * c2) / den, (a1 * c2 - c1 * a2) / den)

    c, d = line(pts["A1"], pts["B2"], "c"), line(pts["A2"], pts["B1"], "d")
    e, f = line(pts["A1"], pts["B3"], "e"), line(pts["A3"], pts["B1"], "f")
    g, h = line(pts["A2"], pts["B3"], "g"), line(pts["A3"], pts["B2"], "h")
    X, Y, Z = meet(c, d), meet(e, f), meet(g, h)
    lines = [line(pts["A1"], pts["A2"], "a"), line(pts["B1"], pts["B2"], "b"), c, d, e, f, g, h, line(X, Y, "p")]
    allpts = {**{k: P(v) for k, v in pts.items()}, "X": X, "Y": Y, "Z": Z}
    geo = {"lines": lines, "points": [{"label": k, "x": str(x), "y": str(y)} for k, (x, y) in allpts.items()]}
    diagram = q.diagram_from_lines(geo)
    regular = [ev for ev in diagram.events if ev[2] is None and ev[1] == 2]
    assert len(regular) == q.topological_unwanted_bound(9, 3) == 9
    drawing = q.straighten(diagram)
    assert drawing["audit_ok"]
    assert len(drawing["vertices"]) == len(diagram)


def test_digons_refused():
    c = q.IncidenceStructure.from_text("L1: p q r\nL2: p q r\n")
    _, d = q.realize(c)
    with pytest.raises(q.Error, match="HasDigons"):
        q.straighten(d)


def test_sweep_order_is_permutation():
    _, d = q.realize(q.IncidenceStructure.from_text(FANO))
    assert sorted(q.sweep_order(d)) == list(range(len(d)))


def test_svg_parses():
    _, d = q.realize(q.IncidenceStructure.from_text("ab: a b\nbc: b c\nca: c a\n"))
    ns = "{http://www.w3.org/2000/svg}"
    root = ET.fromstring(q.wiring_svg(d))
    assert root.tag == ns + "svg"
    assert len(root.findall(ns + "polyline")) == 3
    assert len([c for c in root.findall(ns + "circle") if c.get("fill") == "black"]) == 3
    drawing = q.straighten(d)
    root = ET.fromstring(q.drawing_svg(d))
    scale = float(root.get("data-scale"))
    ox, oy = (float(v) for v in root.get("data-origin").split(","))
    from fractions import Fraction as F

    for circle, (x, y) in zip(root.findall(ns + "circle"), drawing["vertices"]):
        assert abs(float(circle.get("cx")) - (ox + scale * float(F(x)))) <= 5e-4 + 1e-9
        assert abs(float(circle.get("cy")) - (oy - scale * float(F(y)))) <= 5e-4 + 1e-9
