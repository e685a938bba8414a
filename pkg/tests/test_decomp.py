from fractions import Fraction

import pytest

from coinduce.decomp import DecompositionError, custom, triangular
from coinduce.liealg import Vec, build_abelian, build_gl
from coinduce.superpoly import SuperPoly, pair_monomials


def test_sl2_triangular(sl2, sl2_tri):
    d = sl2_tri
    assert [sl2.label(i) for i in d.minus] == ["f(1)"]
    assert sorted(sl2.label(i) for i in d.h) == ["e(1)", "h1"]
    assert d.is_subalgebra
    assert d.depth == 1


def test_gl3_triangular():
    d = triangular(build_gl(3))
    assert len(d.minus) == 3 and len(d.h) == 6


def test_e6_triangular_counts():
    from coinduce.liealg import build_simply_laced

    d = triangular(build_simply_laced("E", 6))
    assert len(d.minus) == 36 and len(d.h) == 42
    assert d.depth == 11


def test_triangular_needs_grading():
    ab = build_abelian([0, 0])  # no degrees
    with pytest.raises(DecompositionError):
        triangular(ab)


def test_projections(sl2, sl2_tri):
    d = sl2_tri
    e, f = sl2.index_of("e(1)"), sl2.index_of("f(1)")
    v = Vec({e: Fraction(1), f: Fraction(3)})
    assert d.project_minus_vec(v) == Vec({f: Fraction(3)})
    assert d.project_h_vec(v) == Vec({e: Fraction(1)})
    # Pi_- + Pi_h = 1, Pi_- Pi_h = 0
    assert d.project_minus_vec(v) + d.project_h_vec(v) == v
    assert not d.project_minus_vec(d.project_h_vec(v))
    assert d.project_minus_vec(d.project_minus_vec(v)) == d.project_minus_vec(v)


def test_poly_projection(sl2, sl2_tri):
    d = sl2_tri
    e, f = sl2.index_of("e(1)"), sl2.index_of("f(1)")
    p = SuperPoly(d.xspace, {(): Vec({e: Fraction(1)}), (0,): Vec({f: Fraction(1)})})
    assert d.project_minus(p).terms == {(0,): Vec({f: Fraction(1)})}
    assert d.project_h(p).terms == {(): Vec({e: Fraction(1)})}


def test_dual_registry(sl2_tri):
    d = sl2_tri
    for j, b in enumerate(d.minus):
        assert d.var_of_basis[b] == j
        assert pair_monomials((j,), (j,), d.xspace) == 1


def test_triangular_closures(a2, a2_tri):
    d = a2_tri
    for x in d.minus:
        for y in d.minus:
            assert all(k in set(d.minus) for k in a2.bracket_basis(x, y))
    for x in d.h:
        for y in d.h:
            assert all(k in set(d.h) for k in a2.bracket_basis(x, y))


def test_sl3_non_subalgebra_decomposition(a2):
    d = custom(
        a2,
        ["f(1,0)", "f(1,1)", {"f(0,1)": 1, "e(1,0)": 1}],
        ["h1", "h2", "e(1,0)", "e(0,1)", "e(1,1)"],
    )
    assert not d.is_subalgebra
    assert len(d.minus) == 3 and len(d.h) == 5
    assert d.alg.validate() == []


def test_custom_aligned_subalgebra(sl2):
    d = custom(sl2, ["f(1)"], ["h1", "e(1)"])
    assert d.is_subalgebra


def test_custom_rejects_non_direct_sum(sl2):
    with pytest.raises(DecompositionError):
        custom(sl2, ["f(1)", "h1"], ["h1", "e(1)"])
    with pytest.raises(DecompositionError):
        custom(sl2, ["f(1)"], ["e(1)"])  # wrong total count


def test_custom_rejects_open_h(a2):
    # h spanned by the Cartan and one root vector is not closed
    with pytest.raises(DecompositionError, match="not closed"):
        custom(
            a2,
            ["f(1,0)", "f(0,1)", "f(1,1)", "e(1,1)"],
            ["h1", "h2", "e(1,0)", "e(0,1)"],
        )


def test_custom_dependent_vectors_rejected(a2):
    with pytest.raises(DecompositionError, match="dependent|direct"):
        custom(
            a2,
            ["f(1,0)", "f(1,1)", {"f(1,0)": 2}],
            ["h1", "h2", "e(1,0)", "e(0,1)", "e(1,1)"],
        )
