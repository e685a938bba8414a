from fractions import Fraction

import pytest

from coinduce.liealg import (AlgebraError, Vec, build_abelian, build_gl,
                             build_gl11, build_simply_laced, cartan_matrix,
                             dynkin_edges, load_custom, positive_roots)


def test_gl_matrix_unit_relations(gl2, gl3):
    e12, e21 = gl2.index_of("E[1,2]"), gl2.index_of("E[2,1]")
    assert gl2.bracket_basis(e12, e21) == {
        gl2.index_of("E[1,1]"): Fraction(1),
        gl2.index_of("E[2,2]"): Fraction(-1),
    }
    a, b = gl3.index_of("E[1,2]"), gl3.index_of("E[2,3]")
    assert gl3.bracket_basis(a, b) == {gl3.index_of("E[1,3]"): Fraction(1)}
    h1, h2 = gl2.index_of("E[1,1]"), gl2.index_of("E[2,2]")
    assert gl2.bracket_basis(h1, h2) == {}


def test_gl_validates(gl3):
    assert gl3.validate() == []


def test_sl2_chevalley_relations(sl2):
    e, f, h = sl2.index_of("e(1)"), sl2.index_of("f(1)"), sl2.index_of("h1")
    assert sl2.bracket_basis(e, f) == {h: Fraction(1)}
    assert sl2.bracket_basis(h, e) == {e: Fraction(2)}
    assert sl2.bracket_basis(h, f) == {f: Fraction(-2)}


def test_root_counts_and_dims():
    for fam, rank, dim in (("A", 2, 8), ("A", 5, 35), ("D", 4, 28), ("D", 5, 45)):
        pos = positive_roots(cartan_matrix(dynkin_edges(fam, rank), rank))
        assert rank + 2 * len(pos) == dim
    # E-series dimensions from the enumerator alone (E7/E8 without building)
    for rank, dim in ((6, 78), (7, 133), (8, 248)):
        pos = positive_roots(cartan_matrix(dynkin_edges("E", rank), rank))
        assert rank + 2 * len(pos) == dim


def test_a2_grading_depth(a2):
    degs = sorted({b.degree for b in a2.basis})
    assert degs == [-2, -1, 0, 1, 2]


def test_e6_shape():
    e6 = build_simply_laced("E", 6)
    assert e6.dim == 78
    assert max(b.degree for b in e6.basis) == 11
    assert min(b.degree for b in e6.basis) == -11


def test_simply_laced_validate(a2, d4):
    assert a2.validate() == []
    assert d4.validate() == []


def test_simply_laced_root_constants_are_unit(d4):
    for (i, j), terms in d4._sc.items():
        di, dj = d4.degree(i), d4.degree(j)
        if di and dj and di + dj:  # root-root bracket landing on a root vector
            assert all(v in (1, -1) for v in terms.values())


def test_cartan_pairings_match_cartan_matrix(a2):
    cm = cartan_matrix(dynkin_edges("A", 2), 2)
    for i in range(2):
        h = a2.index_of(f"h{i + 1}")
        for j, simple in enumerate(((1, 0), (0, 1))):
            e = a2.index_of("e" + "(%d,%d)" % simple)
            got = a2.bracket_basis(h, e).get(e, Fraction(0))
            assert got == cm[i][j]


def test_grading_additivity(d4):
    for (i, j), terms in d4._sc.items():
        for k in terms:
            assert d4.degree(k) == d4.degree(i) + d4.degree(j)


def test_invalid_ranks():
    with pytest.raises(AlgebraError):
        build_simply_laced("E", 5)
    with pytest.raises(AlgebraError):
        build_simply_laced("D", 2)
    with pytest.raises(AlgebraError):
        build_gl(0)


def test_bracket_vec_antisymmetry(sl2):
    e, f, h = sl2.index_of("e(1)"), sl2.index_of("f(1)"), sl2.index_of("h1")
    ef = Vec({e: Fraction(1), f: Fraction(1)})
    assert not sl2.bracket_vec(ef, ef)
    got = sl2.bracket_vec(Vec.basis(h), ef)
    assert got == Vec({e: Fraction(2), f: Fraction(-2)})


def test_load_custom_matches_constructor(sl2):
    spec = {
        "name": "sl2-by-hand",
        "basis": [
            {"label": "f", "parity": 0, "degree": -1},
            {"label": "h", "parity": 0, "degree": 0},
            {"label": "e", "parity": 0, "degree": 1},
        ],
        "brackets": [
            {"left": "e", "right": "f", "terms": {"h": 1}},
            {"left": "h", "right": "e", "terms": {"e": 2}},
            {"left": "h", "right": "f", "terms": {"f": -2}},
        ],
    }
    alg = load_custom(spec)
    assert alg.validate() == []
    # identical structure constants up to the label renaming
    ren = {"f": "f(1)", "h": "h1", "e": "e(1)"}
    for (i, j), terms in alg._sc.items():
        si = sl2.index_of(ren[alg.label(i)])
        sj = sl2.index_of(ren[alg.label(j)])
        want = sl2.bracket_basis(si, sj)
        assert {ren[alg.label(k)]: v for k, v in terms.items()} == {
            sl2.label(k): v for k, v in want.items()
        }


def test_gl11_accepted(gl11):
    assert gl11.validate() == []
    pp, pm = gl11.index_of("psi+"), gl11.index_of("psi-")
    assert gl11.bracket_basis(pp, pm) == {
        gl11.index_of("E11"): Fraction(1),
        gl11.index_of("E22"): Fraction(1),
    }
    # odd self-bracket is allowed data; here it vanishes
    assert gl11.bracket_basis(pp, pp) == {}


def test_antisymmetry_violation_rejected():
    spec = {
        "name": "broken",
        "basis": [{"label": "x", "parity": 0}, {"label": "y", "parity": 0},
                  {"label": "z", "parity": 0}],
        "brackets": [
            {"left": "x", "right": "y", "terms": {"z": 1}},
            {"left": "y", "right": "x", "terms": {"z": 1}},
        ],
    }
    with pytest.raises(AlgebraError, match="antisymmetry"):
        load_custom(spec)


def test_jacobi_violation_reported():
    # perturbing one structure constant of gl(2) breaks Jacobi: double the
    # coefficient of [E11, E12] (grading- and parity-compatible, so the
    # failure is caught by the Jacobi sweep itself)
    gl = build_gl(2)
    bad = dict(gl._sc)
    key = (gl.index_of("E[1,1]"), gl.index_of("E[1,2]"))
    terms = dict(bad[key])
    terms[gl.index_of("E[1,2]")] = terms[gl.index_of("E[1,2]")] + 1
    bad[key] = terms
    from coinduce.liealg import LieSuperAlgebra

    alg = LieSuperAlgebra("gl2-perturbed", gl.basis, bad)
    problems = alg.validate()
    assert any("jacobi" in p for p in problems)


def test_odd_self_bracket_allowed():
    spec = {
        "name": "heis(0|1)",
        "basis": [{"label": "theta", "parity": 1}, {"label": "z", "parity": 0}],
        "brackets": [{"left": "theta", "right": "theta", "terms": {"z": 2}}],
    }
    alg = load_custom(spec)
    assert alg.bracket_basis(0, 0) == {1: Fraction(2)}


def test_abelian():
    ab = build_abelian([0, 1, 0])
    assert ab.validate() == []
    assert ab.bracket_basis(0, 1) == {}
