import json
from fractions import Fraction

from coinduce import algfile
from coinduce.emit import (emit_phi_h_structured, emit_phi_h_tex,
                           emit_structured, emit_tex, parse_structured)
from coinduce.liealg import build_gl, build_simply_laced
from coinduce.realize import Realization, make_character
from coinduce.series import SeriesEngine


def build_ops(d, kind="coinduced", weights="symbolic", trunc=None):
    rep = make_character(d, weights)
    real = Realization(d, rep, kind, truncation=trunc)
    return {i: real.operator(i) for i in range(d.alg.dim)}, rep


def test_tex_sl2_schema(sl2, sl2_tri):
    ops, rep = build_ops(sl2_tri)
    text = emit_tex(ops, sl2_tri, "coinduced", rep.kind)
    assert "T(f_{(1)}) = \\partial_{X_{1}}" in text
    assert "T(h_{1}) = \\lambda_{1} + 2X_{1}\\partial_{X_{1}}" in text
    assert "T(e_{(1)}) = -\\lambda_{1}X_{1}-X_{1}^{2}\\partial_{X_{1}}" in text


def test_tex_empty_operator(sl2_tri):
    from coinduce.realize import DiffOperator

    op = DiffOperator("coinduced", sl2_tri.xspace, 1, (0,))
    from coinduce.emit import tex_operator

    assert tex_operator(op) == "0"


def test_tex_deterministic(sl2_tri):
    ops, rep = build_ops(sl2_tri)
    a = emit_tex(ops, sl2_tri, "coinduced", rep.kind)
    ops2, rep2 = build_ops(sl2_tri)
    b = emit_tex(ops2, sl2_tri, "coinduced", rep2.kind)
    assert a == b


def test_structured_round_trip_coinduced(sl2_tri):
    ops, rep = build_ops(sl2_tri)
    text = emit_structured(ops, sl2_tri, "coinduced", rep)
    back = parse_structured(text, sl2_tri)
    assert back == ops
    # and byte-stable re-emission
    assert emit_structured(back, sl2_tri, "coinduced", rep) == text


def test_structured_round_trip_induced(sl2_tri):
    ops, rep = build_ops(sl2_tri, kind="induced", trunc=6)
    text = emit_structured(ops, sl2_tri, "induced", rep)
    back = parse_structured(text, sl2_tri)
    assert back == ops


def test_structured_round_trip_numeric_gl3(gl3):
    from coinduce.decomp import triangular

    d = triangular(gl3)
    ops, rep = build_ops(d, weights=[1, 2, 3])
    text = emit_structured(ops, d, "coinduced", rep)
    assert parse_structured(text, d) == ops


def test_structured_schema_fields(sl2_tri):
    ops, rep = build_ops(sl2_tri)
    doc = json.loads(emit_structured(ops, sl2_tri, "coinduced", rep))
    assert doc["format"] == "coinduce-operators v1"
    term = doc["generators"][0]["terms"][0]
    assert set(term) == {"coeff", "mono", "deriv", "h"}
    assert isinstance(term["mono"], list)


def test_phi_h_emission(sl2, sl2_tri):
    eng = SeriesEngine(sl2_tri)
    results = {i: eng.phi_h_subalgebra(i) for i in range(sl2.dim)}
    text = emit_phi_h_structured(results, sl2_tri)
    doc = json.loads(text)
    assert doc["format"] == "coinduce-phi-h v1"
    by_label = {g["label"]: g for g in doc["generators"]}
    eterms = by_label["e(1)"]["terms"]
    # phi-part: -X^2 in the f-direction; h-part: e + X h
    assert {"coeff": {"num": -1, "den": 1}, "mono": [2], "deriv": 0, "h": None} in eterms
    assert any(t["h"] is not None for t in eterms)
    tex = emit_phi_h_tex(results, sl2_tri)
    assert "\\varphi(X, e_{(1)})P" in tex


def test_algfile_round_trip(gl11, a2):
    for alg in (gl11, a2):
        text = algfile.dumps(alg)
        back = algfile.loads(text)
        assert back.name == alg.name
        assert [b.label for b in back.basis] == [b.label for b in alg.basis]
        assert back._sc == alg._sc
        assert algfile.dumps(back) == text


def test_algfile_rejects_garbage():
    import pytest
    from coinduce.liealg import AlgebraError

    with pytest.raises(AlgebraError):
        algfile.loads("not a header\n")
    a1 = build_simply_laced("A", 1)
    text = algfile.dumps(a1)
    # breaking antisymmetry in the file is caught by validation
    bad = text + "bracket e(1) h1 : 2*e(1)\n"
    with pytest.raises(AlgebraError):
        algfile.loads(bad)
