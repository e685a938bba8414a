from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coinduce.superpoly import (SuperPoly, VarSpace, normalize, pair_monomials,
                                partial_monomial)

# two even (0, 2) and two odd (1, 3) indeterminates
SP = VarSpace([0, 1, 0, 1], labels=["x", "t1", "y", "t2"])
EVEN = VarSpace([0, 0, 0])


def test_normalize_examples():
    # odd square vanishes
    assert normalize((1, 1), SP) == (0, None)
    # even factors commute freely
    assert normalize((2, 0), SP) == (1, (0, 2))
    # one odd transposition flips the sign
    assert normalize((3, 1), SP) == (-1, (1, 3))


def test_partial_examples():
    # d/dx (x^3) = 3x^2
    assert partial_monomial((0, 0, 0), 0, SP) == (3, (0, 0))
    # d/dt1 (t1 t2) = t2
    assert partial_monomial((1, 3), 1, SP) == (1, (3,))
    # d/dt2 (t1 t2) = -t1
    assert partial_monomial((1, 3), 3, SP) == (-1, (1,))


def test_pair_examples():
    assert pair_monomials((0,), (0,), SP) == 1
    assert pair_monomials((0, 2), (0, 2), SP) == 1
    assert pair_monomials((0, 0), (0, 0), SP) == 2
    # degree mismatch
    assert pair_monomials((0,), (0, 0), SP) == 0
    # odd-odd pairing picks up the reversal sign
    assert pair_monomials((1, 3), (1, 3), SP) == -1


def test_mul_unit_and_odd_square():
    one = SuperPoly.constant(SP, Fraction(1))
    t1 = SuperPoly.variable(SP, 1)
    p = SuperPoly(SP, {(0, 2): Fraction(2), (1,): Fraction(1)})
    assert one.mul(p) == p
    assert not t1.mul(t1)


def test_mul_commutative_case():
    x = SuperPoly.variable(EVEN, 0)
    one = SuperPoly.constant(EVEN, Fraction(1))
    a = x + one
    b = x - one
    want = x.mul(x) - one
    assert a.mul(b) == want


def test_negate_vars_involution_and_signs():
    p = SuperPoly(SP, {(): Fraction(1), (0,): Fraction(1), (0, 0, 2): Fraction(1)})
    q = p.negate_vars()
    assert q.terms[()] == 1 and q.terms[(0,)] == -1 and q.terms[(0, 0, 2)] == -1
    assert q.negate_vars() == p


def test_truncation_cap():
    x = SuperPoly.variable(EVEN, 0, trunc=2)
    x2 = x.mul(x)
    assert x2.terms == {(0, 0): Fraction(1)}
    assert not x2.mul(x)  # degree 3 exceeds the cap


# -- randomized invariants ------------------------------------------------------

monos = st.lists(st.integers(min_value=0, max_value=3), min_size=0, max_size=5)
coeffs = st.integers(min_value=-4, max_value=4).filter(lambda n: n != 0)


def poly_from(seqs_coeffs):
    p = SuperPoly.zero(SP)
    for seq, c in seqs_coeffs:
        sign, m = normalize(seq, SP)
        if sign:
            term = SuperPoly(SP, {m: Fraction(sign * c)})
            p = p + term
    return p


polys = st.lists(st.tuples(monos, coeffs), min_size=0, max_size=4).map(poly_from)


@settings(max_examples=60, deadline=None)
@given(st.tuples(monos, monos))
def test_supercommutativity_on_monomials(pair):
    s1, s2 = pair
    sa, ma = normalize(s1, SP)
    sb, mb = normalize(s2, SP)
    if not sa or not sb:
        return
    a = SuperPoly(SP, {ma: Fraction(sa)})
    b = SuperPoly(SP, {mb: Fraction(sb)})
    ab = a.mul(b)
    ba = b.mul(a)
    sign = -1 if (SP.mono_parity(ma) and SP.mono_parity(mb)) else 1
    assert ab == sign * ba


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_mul_associative(a, b, c):
    assert a.mul(b.mul(c)) == a.mul(b).mul(c)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=3), st.tuples(monos, monos))
def test_graded_leibniz(i, pair):
    s1, s2 = pair
    sa, ma = normalize(s1, SP)
    sb, mb = normalize(s2, SP)
    if not sa or not sb:
        return
    a = SuperPoly(SP, {ma: Fraction(sa)})
    b = SuperPoly(SP, {mb: Fraction(sb)})
    lhs = a.mul(b).partial(i)
    sign = -1 if (SP.parities[i] and SP.mono_parity(ma)) else 1
    rhs = a.partial(i).mul(b) + sign * a.mul(b.partial(i))
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_pair_degree_selectivity(f, e):
    total = f.pair(e)
    by_degree = Fraction(0)
    for d in range(6):
        fd = SuperPoly(SP, {m: c for m, c in f.terms.items() if len(m) == d})
        ed = SuperPoly(SP, {m: c for m, c in e.terms.items() if len(m) == d})
        by_degree += fd.pair(ed)
    assert total == by_degree


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=3), polys, polys)
def test_fourier_transform_of_left_multiplication(i, f, e):
    """The operator dual to left multiplication by P_i is (-1)^{|X^i|} d/dX^i
    through the evaluation pairing (checked without using the pairing's own
    derivative shortcut; `pair` is an independent permutation sum)."""
    pe = e.lmul_var(i)
    lhs = f.pair(pe)
    if SP.parities[i]:
        # <f, M e> = (-1)^{|M||f|} <M* f, e> with M* = (-1)^{|X^i|} d/dX^i,
        # applied to the parity-homogeneous components of f
        rhs = Fraction(0)
        for par in (0, 1):
            fpar = SuperPoly(SP, {m: c for m, c in f.terms.items() if SP.mono_parity(m) == par})
            sign = (-1 if par else 1) * (-1)  # (-1)^{|P_i||f|} * (-1)^{|X^i|}
            rhs += sign * fpar.partial(i).pair(e)
        assert lhs == rhs
    else:
        assert lhs == f.partial(i).pair(e)
