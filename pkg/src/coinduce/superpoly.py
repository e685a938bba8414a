"""Supercommutative polynomial kernel over graded indeterminates.

Monomials are tuples of variable indices sorted ascending (repeats allowed
for even variables); the parity of each variable lives in a shared
:class:`VarSpace`.  Every product/derivative follows the sign rule: each
transposition of two odd symbols contributes a factor -1, and odd squares
vanish.  Coefficients ("values") may be Fractions, basis vectors, or
matrices; they only need `+`, unary `-`, scalar `*`, `==` and truthiness.

The duality pairing `pair_monomials` is the independent permutation-sum of
the evaluation pairing between a polynomial algebra and the symmetric
algebra it is dual to; it is deliberately *not* implemented through the
derivative operators it is used to cross-check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable, Optional

Monomial = tuple[int, ...]

ONE: Monomial = ()


class VarSpace:
    """Registry of graded indeterminates: labels and parities (0 even, 1 odd)."""

    __slots__ = ("parities", "labels", "all_even", "_caches")

    def __init__(self, parities: Iterable[int], labels: Optional[Iterable[str]] = None):
        self.parities = tuple(int(p) & 1 for p in parities)
        if labels is None:
            self.labels = tuple(f"X{i + 1}" for i in range(len(self.parities)))
        else:
            self.labels = tuple(labels)
        if len(self.labels) != len(self.parities):
            raise ValueError("labels and parities must have equal length")
        self.all_even = not any(self.parities)

    def __len__(self) -> int:
        return len(self.parities)

    def parity(self, i: int) -> int:
        return self.parities[i]

    def mono_parity(self, mono: Monomial) -> int:
        if self.all_even:
            return 0
        return sum(self.parities[i] for i in mono) & 1

    def mono_str(self, mono: Monomial) -> str:
        if not mono:
            return "1"
        out = []
        i = 0
        while i < len(mono):
            j = i
            while j < len(mono) and mono[j] == mono[i]:
                j += 1
            out.append(self.labels[mono[i]] + (f"^{j - i}" if j - i > 1 else ""))
            i = j
        return "*".join(out)


def normalize(factors: Iterable[int], space: VarSpace) -> tuple[int, Optional[Monomial]]:
    """Sort a factor sequence into canonical order.

    Returns (sign, monomial); (0, None) when an odd variable repeats.  The
    sign is -1 to the number of transpositions of two odd factors, which is
    well defined because it equals the parity of the permutation induced on
    the odd factors alone.
    """
    seq = tuple(factors)
    if space.all_even:
        return 1, tuple(sorted(seq))
    odd = [i for i in seq if space.parities[i]]
    if len(set(odd)) != len(odd):
        return 0, None
    inv = 0
    for a in range(len(odd)):
        for b in range(a + 1, len(odd)):
            if odd[a] > odd[b]:
                inv += 1
    return (-1 if inv & 1 else 1), tuple(sorted(seq))


def partial_monomial(mono: Monomial, i: int, space: VarSpace) -> tuple[int, Optional[Monomial]]:
    """Left derivative of a canonical monomial by variable i.

    Moves one copy of X^i to the front (collecting -1 per odd factor jumped
    over when X^i is odd), then strikes it.  Returns (coefficient, monomial)
    with coefficient 0 when the variable is absent; for an even variable the
    coefficient is its multiplicity.
    """
    if i not in mono:
        return 0, None
    pos = mono.index(i)
    rest = mono[:pos] + mono[pos + 1 :]
    if not space.parities[i]:
        return mono.count(i), rest
    jumped = sum(1 for j in mono[:pos] if space.parities[j])
    return (-1 if jumped & 1 else 1), rest


def pair_monomials(fmono: Monomial, emono: Monomial, space: VarSpace) -> Fraction:
    """Evaluation pairing of a dual monomial against a symmetric-algebra one.

    Permutation sum (f_1...f_m)(e_n...e_1) = delta_{mn} sum_sigma
    (-1)^{eps(sigma_odd)} prod f_{sigma(k)}(e_k), where the element monomial
    written ascending is the product e_n...e_1 and f_i(P_j) = delta_ij.
    All-even pairs evaluate to the product of multiplicity factorials.
    """
    n = len(fmono)
    if n != len(emono) or sorted(fmono) != sorted(emono):
        return Fraction(0)
    # e_k for k = 1..n is the (n - k)-th ascending factor
    eseq = tuple(reversed(emono))
    total = 0
    for sigma in permutations(range(n)):
        if any(fmono[sigma[k]] != eseq[k] for k in range(n)):
            continue
        if space.all_even:
            total += 1
            continue
        picks = [sigma[k] for k in range(n) if space.parities[eseq[k]]]
        inv = sum(
            1
            for a in range(len(picks))
            for b in range(a + 1, len(picks))
            if picks[a] > picks[b]
        )
        total += -1 if inv & 1 else 1
    return Fraction(total)


def _min_trunc(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


# -- scalar tower helpers -------------------------------------------------------
# Coefficients higher up the stack mix Fractions with (all-even) weight
# polynomials; these coerce the two levels and collapse constant polynomials
# back to plain Fractions so equality stays canonical.


def canon_scalar(v):
    if isinstance(v, SuperPoly):
        if not v.terms:
            return Fraction(0)
        if len(v.terms) == 1 and ONE in v.terms:
            return v.terms[ONE]
    return v


def _native_rational(x):
    # third-party rationals (gmpy2) may enter via the fast paths; normalize
    # before they can become SuperPoly coefficients
    if isinstance(x, (SuperPoly, Fraction, int)):
        return x
    num = getattr(x, "numerator", None)
    return x if num is None else Fraction(int(num), int(x.denominator))


def coerce_add(a, b):
    if isinstance(a, SuperPoly) and not isinstance(b, SuperPoly):
        b = _native_rational(b)
        return canon_scalar(a + SuperPoly.constant(a.space, b)) if b else canon_scalar(a)
    if isinstance(b, SuperPoly) and not isinstance(a, SuperPoly):
        a = _native_rational(a)
        return canon_scalar(b + SuperPoly.constant(b.space, a)) if a else canon_scalar(b)
    return canon_scalar(a + b)


def coerce_mul(a, b):
    if isinstance(a, SuperPoly):
        if isinstance(b, SuperPoly):
            return canon_scalar(a.mul(b))
        return canon_scalar(_native_rational(b) * a)
    if isinstance(b, SuperPoly):
        return canon_scalar(_native_rational(a) * b)
    return canon_scalar(a * b)


class SuperPoly:
    """Finite sum of monomials with coefficients in an additive value space."""

    __slots__ = ("space", "terms", "trunc")

    def __init__(self, space: VarSpace, terms: Optional[dict] = None, trunc: Optional[int] = None):
        self.space = space
        self.trunc = trunc
        self.terms: dict = {}
        if terms:
            for m, v in terms.items():
                if v and (trunc is None or len(m) <= trunc):
                    self.terms[m] = v

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, space: VarSpace, trunc: Optional[int] = None) -> "SuperPoly":
        return cls(space, None, trunc)

    @classmethod
    def constant(cls, space: VarSpace, value, trunc: Optional[int] = None) -> "SuperPoly":
        return cls(space, {ONE: value}, trunc)

    @classmethod
    def variable(cls, space: VarSpace, i: int, trunc: Optional[int] = None) -> "SuperPoly":
        return cls(space, {(i,): Fraction(1)}, trunc)

    # -- ring / module structure -------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        raise TypeError("SuperPoly is mutable-by-convention; not hashable")

    def __add__(self, other: "SuperPoly") -> "SuperPoly":
        out = dict(self.terms)
        for m, v in other.terms.items():
            s = out.get(m)
            s = v if s is None else s + v
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        res = SuperPoly(self.space, None, _min_trunc(self.trunc, other.trunc))
        res.terms = out
        return res

    def __neg__(self) -> "SuperPoly":
        res = SuperPoly(self.space, None, self.trunc)
        res.terms = {m: -v for m, v in self.terms.items()}
        return res

    def __sub__(self, other: "SuperPoly") -> "SuperPoly":
        return self + (-other)

    def __rmul__(self, scalar) -> "SuperPoly":
        if not scalar:
            return SuperPoly.zero(self.space, self.trunc)
        res = SuperPoly(self.space, None, self.trunc)
        res.terms = {m: scalar * v for m, v in self.terms.items()}
        return res

    def __mul__(self, other):
        if isinstance(other, SuperPoly):
            return self.mul(other)
        return other.__rmul__(self) if hasattr(other, "__rmul__") else NotImplemented

    def mul(self, other: "SuperPoly") -> "SuperPoly":
        """Supercommutative product; self must be scalar-valued."""
        trunc = _min_trunc(self.trunc, other.trunc)
        out: dict = {}
        space = self.space
        for m1, c1 in self.terms.items():
            for m2, v2 in other.terms.items():
                if trunc is not None and len(m1) + len(m2) > trunc:
                    continue
                sign, m = normalize(m1 + m2, space)
                if sign == 0:
                    continue
                v = (sign * c1) * v2
                s = out.get(m)
                s = v if s is None else s + v
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        res = SuperPoly(space, None, trunc)
        res.terms = out
        return res

    def lmul_var(self, i: int) -> "SuperPoly":
        """Left multiplication by variable i (no value-parity sign; callers
        that move an odd operator past the monomial add their own)."""
        trunc = self.trunc
        out: dict = {}
        space = self.space
        for m, v in self.terms.items():
            if trunc is not None and len(m) + 1 > trunc:
                continue
            sign, mm = normalize((i,) + m, space)
            if sign == 0:
                continue
            v2 = v if sign == 1 else -v
            s = out.get(mm)
            s = v2 if s is None else s + v2
            if s:
                out[mm] = s
            else:
                out.pop(mm, None)
        res = SuperPoly(space, None, trunc)
        res.terms = out
        return res

    # -- calculus ------------------------------------------------------------

    def partial(self, i: int) -> "SuperPoly":
        out: dict = {}
        for m, v in self.terms.items():
            c, mm = partial_monomial(m, i, self.space)
            if c == 0:
                continue
            v2 = c * v
            s = out.get(mm)
            s = v2 if s is None else s + v2
            if s:
                out[mm] = s
            else:
                out.pop(mm, None)
        res = SuperPoly(self.space, None, self.trunc)
        res.terms = out
        return res

    def negate_vars(self) -> "SuperPoly":
        """Substitute X -> -X: each term picks up (-1)^degree."""
        res = SuperPoly(self.space, None, self.trunc)
        res.terms = {m: (v if len(m) % 2 == 0 else -v) for m, v in self.terms.items()}
        return res

    def pair(self, element: "SuperPoly") -> Fraction:
        """Bilinear extension of `pair_monomials`; both polys scalar-valued."""
        total = Fraction(0)
        for mf, cf in self.terms.items():
            for me, ce in element.terms.items():
                if len(mf) != len(me):
                    continue
                p = pair_monomials(mf, me, self.space)
                if p:
                    total += cf * ce * p
        return total

    # -- inspection -----------------------------------------------------------

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def map_values(self, fn: Callable) -> "SuperPoly":
        res = SuperPoly(self.space, None, self.trunc)
        for m, v in self.terms.items():
            w = fn(v)
            if w:
                res.terms[m] = w
        return res

    def with_trunc(self, trunc: Optional[int]) -> "SuperPoly":
        res = SuperPoly(self.space, None, trunc)
        for m, v in self.terms.items():
            if trunc is None or len(m) <= trunc:
                res.terms[m] = v
        return res

    def is_homogeneous_parity(self) -> Optional[int]:
        """Total parity of the monomial part if uniform, else None."""
        seen = {self.space.mono_parity(m) for m in self.terms}
        if len(seen) == 1:
            return seen.pop()
        return None if seen else 0

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms, key=lambda m: (len(m), m)):
            bits.append(f"({self.terms[m]})*{self.space.mono_str(m)}")
        return " + ".join(bits)

    __repr__ = __str__
