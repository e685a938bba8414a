"""Assembly of the concrete module operators from the (phi, h) data.

Coinduced modules live on V-valued polynomials in the dual variables X and
are acted on by first-order operators; induced modules live on polynomials
in the g_minus variables P tensored with V, acted on by finite-order
(truncated) operators.  Representations of h enter through exact matrices
whose entries are Fractions or polynomials in symbolic weight parameters,
so a single symbolic run certifies a generic weight.

Odd-sign discipline.  The even-case formulas

    T(g) = sum_i phi^i(-X, g) d/dX^i + rho(h(-X, g))
    I(g) = sum_i P_i phi^i(d/dP, g) + rho(h(d/dP, g))

pick up per-term parity prefactors in the super case.  The shipped choice,

    coinduced phi-term (monomial m, direction i):  (-1)^{|X^i| (1 + |m|)}
    induced   phi-term (monomial m, direction i):  (-1)^{|m| (1 + |P_i|)}
    h-term    (monomial m, h element b), both:     (-1)^{|m| (1 + |b|)}

was re-derived from the intertwiner definition of the coinduced action
(worked gl(1|1) ground truth) because the face-value single-sign reading
fails its homomorphism sweep; the gl(1|1) sweeps pin it, and the all-even
case reduces to the formulas above.  See docs/CONVENTIONS.md.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .decomp import Decomposition
from .liealg import Vec
from .scalars import as_fraction, fastq
from .series import PhiH, SeriesEngine
from .superpoly import (Monomial, SuperPoly, VarSpace, coerce_add, coerce_mul,
                        normalize, partial_monomial)


class TruncationOverflow(RuntimeError):
    """An operator application left the truncated carrier space."""


class RepresentationError(ValueError):
    pass


# -- scalar-ring helpers (entries are Fractions or weight polynomials) ---------


def weight_space(names: Sequence[str]) -> VarSpace:
    return VarSpace([0] * len(names), labels=tuple(names))


_mul = coerce_mul
_add = coerce_add


class Matrix:
    """Dense exact matrix tagged with an operator parity."""

    __slots__ = ("rows", "parity")

    def __init__(self, rows, parity: int = 0):
        self.rows = [list(r) for r in rows]
        self.parity = parity & 1

    @classmethod
    def zero(cls, n: int, m: Optional[int] = None, parity: int = 0) -> "Matrix":
        m = n if m is None else m
        return cls([[Fraction(0)] * m for _ in range(n)], parity)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        out = cls.zero(n)
        for i in range(n):
            out.rows[i][i] = Fraction(1)
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __bool__(self) -> bool:
        return any(any(x for x in r) for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[_add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            self.parity if self else other.parity,
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in r] for r in self.rows], self.parity)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __rmul__(self, scalar) -> "Matrix":
        return Matrix([[_mul(scalar, x) if x else x for x in r] for r in self.rows], self.parity)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError("matrix shape mismatch")
        out = Matrix.zero(n, m, (self.parity + other.parity) & 1)
        for i in range(n):
            for j in range(m):
                acc = Fraction(0)
                for t in range(k):
                    a, b = self.rows[i][t], other.rows[t][j]
                    if a and b:
                        acc = _add(acc, _mul(a, b))
                out.rows[i][j] = acc
        return out

    def matvec(self, v: Vec) -> Vec:
        out: dict = {}
        for j, c in v.items():
            if not c:
                continue
            for i in range(len(self.rows)):
                a = self.rows[i][j]
                if a:
                    s = _add(out.get(i, Fraction(0)), _mul(a, c))
                    if s:
                        out[i] = s
                    else:
                        out.pop(i, None)
        return Vec(out)

    def supertranspose(self, vparities: Sequence[int]) -> "Matrix":
        """Dual operator in the paired bases: (A*)[i][j] = (-1)^{|A||v_j|} A[j][i]."""
        n, m = self.shape
        out = Matrix.zero(m, n, self.parity)
        for i in range(m):
            for j in range(n):
                a = self.rows[j][i]
                if a and self.parity and vparities[j]:
                    a = -a
                out.rows[i][j] = a
        return out

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in r) for r in self.rows) + "]"

    __repr__ = __str__


# -- representations of h ---------------------------------------------------------


@dataclass
class HRepresentation:
    decomp: Decomposition
    dim: int
    vparities: tuple[int, ...]
    mats: dict  # h basis index -> Matrix
    kind: str = "custom"
    weights: Optional[VarSpace] = None

    def mat(self, b: int) -> Matrix:
        got = self.mats.get(b)
        if got is None:
            got = Matrix.zero(self.dim, parity=self.decomp.alg.parity(b))
            self.mats[b] = got
        return got

    def validate(self, max_report: int = 5) -> list[str]:
        """Exact check of the bracket-compatibility of the matrices and the
        parity rule on every pair of h basis elements."""
        alg = self.decomp.alg
        out: list[str] = []
        for b in self.decomp.h:
            if self.mat(b).parity != alg.parity(b):
                out.append(f"parity of rho({alg.label(b)}) != |{alg.label(b)}|")
        for a in self.decomp.h:
            for b in self.decomp.h:
                lhs = Matrix.zero(self.dim)
                for k, c in alg.bracket_basis(a, b).items():
                    lhs = lhs + c * self.mat(k)
                sign = -1 if alg.parity(a) and alg.parity(b) else 1
                rhs = self.mat(a) @ self.mat(b) - sign * (self.mat(b) @ self.mat(a))
                if lhs != rhs:
                    out.append(
                        f"rho([{alg.label(a)},{alg.label(b)}]) != graded commutator"
                        f" ({lhs} vs {rhs})"
                    )
                    if len(out) >= max_report:
                        return out
        return out


def make_character(
    decomp: Decomposition,
    weights: Union[str, Sequence[Union[int, Fraction]]] = "symbolic",
) -> HRepresentation:
    """One-dimensional representation of the Borel: the given values on the
    degree-zero part, zero on strictly positive degrees."""
    alg = decomp.alg
    if not alg.graded:
        raise RepresentationError("characters need the graded Borel picture")
    cartan = [b for b in decomp.h if alg.degree(b) == 0]
    wspace = None
    if isinstance(weights, str):
        if weights != "symbolic":
            raise RepresentationError(f"unknown weight spec {weights!r}")
        wspace = weight_space([f"lam{i + 1}" for i in range(len(cartan))])
        values = [SuperPoly.variable(wspace, i) for i in range(len(cartan))]
    else:
        if len(weights) != len(cartan):
            raise RepresentationError(
                f"need {len(cartan)} weight values for the degree-0 part, got {len(weights)}"
            )
        values = [Fraction(w) for w in weights]
    mats = {}
    for b, v in zip(cartan, values):
        mats[b] = Matrix([[v]], parity=0)
    rep = HRepresentation(decomp, 1, (0,), mats, kind="character", weights=wspace)
    problems = rep.validate()
    if problems:
        raise RepresentationError("character rejected: " + problems[0])
    return rep


def make_adjoint(decomp: Decomposition) -> HRepresentation:
    """V = g with rho(b) = ad(b)."""
    alg = decomp.alg
    mats = {}
    for b in decomp.h:
        m = Matrix.zero(alg.dim, parity=alg.parity(b))
        for s in range(alg.dim):
            for t, c in alg.bracket_basis(b, s).items():
                m.rows[t][s] = c
        mats[b] = m
    rep = HRepresentation(
        decomp, alg.dim, tuple(alg.parity(i) for i in range(alg.dim)), mats, kind="adjoint"
    )
    problems = rep.validate()
    if problems:
        raise RepresentationError("adjoint representation failed validation: " + problems[0])
    return rep


def make_custom(
    decomp: Decomposition,
    vparities: Sequence[int],
    mats: dict,
    kind: str = "custom",
) -> HRepresentation:
    rep = HRepresentation(decomp, len(vparities), tuple(vparities), dict(mats), kind=kind)
    problems = rep.validate()
    if problems:
        raise RepresentationError("custom representation failed validation: " + problems[0])
    return rep


def contragredient(rep: HRepresentation) -> HRepresentation:
    """rho*(b) = -(rho(b) supertransposed) on V*."""
    mats = {
        b: -(m.supertranspose(rep.vparities)) for b, m in rep.mats.items()
    }
    return HRepresentation(
        rep.decomp, rep.dim, rep.vparities, mats, kind=rep.kind + "*", weights=rep.weights
    )


# -- differential operators ---------------------------------------------------------


@dataclass
class DiffOperator:
    """Sum of terms (coefficient monomial, derivative multi-index) -> Matrix.

    Derivative multi-indices are canonically sorted; application composes the
    derivatives right-to-left.  `domain` is "coinduced" (X-side, order <= 1)
    or "induced" (P-side, order bounded by the data, carrier truncated)."""

    domain: str
    space: VarSpace
    vdim: int
    vparities: tuple[int, ...]
    parity: int = 0
    truncation: Optional[int] = None
    terms: dict = field(default_factory=dict)

    @classmethod
    def zero_like(cls, other: "DiffOperator") -> "DiffOperator":
        return cls(
            other.domain,
            other.space,
            other.vdim,
            other.vparities,
            other.parity,
            other.truncation,
        )

    def _put(self, mono: Monomial, alpha: Monomial, mat: Matrix) -> None:
        if not mat:
            return
        key = (mono, alpha)
        got = self.terms.get(key)
        s = mat if got is None else got + mat
        if s:
            self.terms[key] = s
        else:
            self.terms.pop(key, None)

    # -- linear structure ------------------------------------------------------

    def __add__(self, other: "DiffOperator") -> "DiffOperator":
        out = DiffOperator.zero_like(self)
        out.terms = dict(self.terms)
        for key, m in other.terms.items():
            out._put(key[0], key[1], m)
        return out

    def __neg__(self) -> "DiffOperator":
        out = DiffOperator.zero_like(self)
        out.terms = {k: -m for k, m in self.terms.items()}
        return out

    def __sub__(self, other: "DiffOperator") -> "DiffOperator":
        return self + (-other)

    def __rmul__(self, scalar) -> "DiffOperator":
        out = DiffOperator.zero_like(self)
        if scalar:
            out.terms = {k: scalar * m for k, m in self.terms.items()}
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.domain == other.domain and self.terms == other.terms

    @property
    def max_order(self) -> int:
        return max((len(a) for _, a in self.terms), default=0)

    @property
    def max_degree(self) -> int:
        return max((len(m) for m, _ in self.terms), default=0)

    # -- action ---------------------------------------------------------------------

    def apply(self, element: SuperPoly) -> SuperPoly:
        """Act on a V-valued polynomial (values are Vec over the V basis)."""
        space = self.space
        out = SuperPoly.zero(space, element.trunc)
        for (cm, alpha), mat in self.terms.items():
            epar = mat.parity
            for fmono, vvec in element.terms.items():
                sign = -1 if (epar and space.mono_parity(fmono)) else 1
                c = Fraction(sign)
                dmono: Optional[Monomial] = fmono
                for i in reversed(alpha):
                    ci, dmono = partial_monomial(dmono, i, space)
                    if not ci:
                        c = Fraction(0)
                        break
                    c *= ci
                if not c:
                    continue
                s2, mono2 = normalize(cm + dmono, space)
                if s2 == 0:
                    continue
                if self.domain == "induced" and self.truncation is not None and len(mono2) > self.truncation:
                    raise TruncationOverflow(
                        f"result degree {len(mono2)} exceeds carrier truncation {self.truncation}"
                    )
                w = (c * s2) * mat.matvec(vvec)
                if w:
                    got = out.terms.get(mono2)
                    s = w if got is None else got + w
                    if s:
                        out.terms[mono2] = s
                    else:
                        out.terms.pop(mono2, None)
        return out

    # -- composition -------------------------------------------------------------------

    def compose(self, other: "DiffOperator") -> "DiffOperator":
        """self after other, expanded back into canonical terms via the graded
        Leibniz rule; exactness is pinned by apply(compose) == apply o apply."""
        out = DiffOperator(
            self.domain,
            self.space,
            self.vdim,
            self.vparities,
            (self.parity + other.parity) & 1,
            self.truncation,
        )
        acc: dict = {}
        self._compose_into(acc, self, other, 1)
        _acc_finish(out, acc, self.vdim)
        return out

    @staticmethod
    def _compose_into(acc: dict, a: "DiffOperator", b: "DiffOperator", outer: int) -> None:
        if a.domain != b.domain:
            raise ValueError("cannot compose operators on different carriers")
        space = a.space
        scalar_mode = a.vdim == 1  # nonzero 1x1 matrices are necessarily even
        push_cache = _space_cache(space, "push")
        norm_cache = _space_cache(space, "norm")
        for (cb, beta), mb in b.terms.items():
            cbb = space.mono_parity(cb) ^ space.mono_parity(beta)
            vb = mb.rows[0][0] if scalar_mode else mb
            if scalar_mode and isinstance(vb, Fraction):
                vb = fastq(vb)
            for (ca, alpha), ma in a.terms.items():
                const = outer if scalar_mode or not (ma.parity and cbb) else -outer
                plain = False
                if scalar_mode:
                    va = ma.rows[0][0]
                    if isinstance(va, SuperPoly) or isinstance(vb, SuperPoly):
                        prod = coerce_mul(va, vb if isinstance(vb, SuperPoly) else as_fraction(vb))
                    else:
                        prod = (fastq(va) if isinstance(va, Fraction) else va) * vb
                        plain = True
                else:
                    prod = ma @ mb
                if not prod:
                    continue
                pkey = (alpha, cb)
                pushed = push_cache.get(pkey)
                if pushed is None:
                    pushed = _push_derivs(alpha, cb, space)
                    push_cache[pkey] = pushed
                for c0, mono_b, rd in pushed:
                    nkey = (ca, mono_b)
                    got = norm_cache.get(nkey)
                    if got is None:
                        got = normalize(ca + mono_b, space)
                        norm_cache[nkey] = got
                    s1, mono_new = got
                    if s1 == 0:
                        continue
                    dkey = (rd, beta)
                    got = norm_cache.get(dkey)
                    if got is None:
                        got = normalize(rd + beta, space)
                        norm_cache[dkey] = got
                    s2, alpha_new = got
                    if s2 == 0:
                        continue
                    c = const * c0 * s1 * s2
                    key = (mono_new, alpha_new)
                    term = c * prod
                    cur = acc.get(key)
                    if cur is None:
                        acc[key] = term
                    elif plain and cur.__class__ is term.__class__:
                        acc[key] = cur + term
                    elif scalar_mode:
                        acc[key] = coerce_add(cur, term)
                    else:
                        acc[key] = cur + term

    def supercommutator(self, other: "DiffOperator") -> "DiffOperator":
        sign = -1 if (self.parity and other.parity) else 1
        out = DiffOperator(
            self.domain,
            self.space,
            self.vdim,
            self.vparities,
            (self.parity + other.parity) & 1,
            self.truncation,
        )
        acc: dict = {}
        self._compose_into(acc, self, other, 1)
        self._compose_into(acc, other, self, -sign)
        _acc_finish(out, acc, self.vdim)
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (m, a) in sorted(self.terms, key=lambda k: (len(k[0]), k[0], len(k[1]), k[1])):
            mat = self.terms[(m, a)]
            coeff = str(mat) if self.vdim > 1 else str(mat.rows[0][0])
            d = "".join(f" d/d{self.space.labels[i]}" for i in a)
            bits.append(f"({coeff})*{self.space.mono_str(m)}{d}")
        return " + ".join(bits)

    __repr__ = __str__


def _space_cache(space: VarSpace, name: str) -> dict:
    caches = getattr(space, "_caches", None)
    if caches is None:
        caches = {}
        object.__setattr__(space, "_caches", caches)
    return caches.setdefault(name, {})


def _acc_finish(out: DiffOperator, acc: dict, vdim: int) -> None:
    if vdim == 1:
        for key, v in acc.items():
            if v:
                if not isinstance(v, (Fraction, SuperPoly)):
                    v = as_fraction(v)
                out.terms[key] = Matrix([[v]], parity=0)
    else:
        for key, m in acc.items():
            if m:
                out.terms[key] = m


def _push_derivs(alpha: Monomial, mono: Monomial, space: VarSpace):
    """Rewrite d^alpha o M_mono as sum c * M_mono' o d^rd (graded Leibniz)."""
    if not alpha:
        return [(1, mono, ())]
    head, last = alpha[:-1], alpha[-1]
    out = []
    c1, m1 = partial_monomial(mono, last, space)
    if c1:
        out.extend((c * c1, m2, rd) for c, m2, rd in _push_derivs(head, m1, space))
    sgn = -1 if (space.parities[last] and space.mono_parity(mono)) else 1
    out.extend((c * sgn, m2, rd + (last,)) for c, m2, rd in _push_derivs(head, mono, space))
    return out


# -- operator assembly -----------------------------------------------------------------


def coinduced_operator(data: PhiH, rep: HRepresentation) -> DiffOperator:
    decomp = rep.decomp
    space = decomp.xspace
    gpar = _vec_parity(data.g, decomp)
    op = DiffOperator(
        "coinduced", space, rep.dim, rep.vparities, parity=gpar if gpar is not None else 0
    )
    ident = Matrix.identity(rep.dim)
    phiP = data.phiP.negate_vars()
    for mono, vec in phiP.terms.items():
        mpar = space.mono_parity(mono)
        for b, c in vec.items():
            j = decomp.var_of_basis[b]
            xp = space.parities[j]
            sign = -1 if (xp and (1 + mpar) % 2) else 1
            op._put(mono, (j,), (sign * c) * ident)
    hpart = data.h.negate_vars()
    for mono, vec in hpart.terms.items():
        mpar = space.mono_parity(mono)
        for b, c in vec.items():
            bpar = decomp.alg.parity(b)
            sign = -1 if (mpar and (1 + bpar) % 2) else 1
            op._put(mono, (), (sign * c) * rep.mat(b))
    return op


def induced_operator(data: PhiH, rep: HRepresentation, truncation: int) -> DiffOperator:
    decomp = rep.decomp
    space = decomp.pspace
    gpar = _vec_parity(data.g, decomp)
    op = DiffOperator(
        "induced",
        space,
        rep.dim,
        rep.vparities,
        parity=gpar if gpar is not None else 0,
        truncation=truncation,
    )
    ident = Matrix.identity(rep.dim)
    for mono, vec in data.phiP.terms.items():
        mpar = space.mono_parity(mono)
        for b, c in vec.items():
            j = decomp.var_of_basis[b]
            pj = space.parities[j]
            sign = -1 if (mpar and (1 + pj) % 2) else 1
            op._put((j,), mono, (sign * c) * ident)
    for mono, vec in data.h.terms.items():
        mpar = space.mono_parity(mono)
        for b, c in vec.items():
            bpar = decomp.alg.parity(b)
            sign = -1 if (mpar and (1 + bpar) % 2) else 1
            op._put((), mono, (sign * c) * rep.mat(b))
    return op


def _vec_parity(v: Vec, decomp: Decomposition) -> Optional[int]:
    pars = {decomp.alg.parity(k) for k in v.c}
    return pars.pop() if len(pars) == 1 else None


class Realization:
    """All basis operators of one module kind for one representation."""

    def __init__(
        self,
        decomp: Decomposition,
        rep: HRepresentation,
        kind: str = "coinduced",
        truncation: Optional[int] = None,
        engine: Optional[SeriesEngine] = None,
        general: bool = False,
        solver=None,
    ):
        if kind not in ("coinduced", "induced"):
            raise ValueError(f"unknown module kind {kind!r}")
        self.decomp = decomp
        self.rep = rep
        self.kind = kind
        self.engine = engine or SeriesEngine(decomp, truncation)
        self.truncation = truncation if truncation is not None else self.engine.truncation
        self.general = general or not decomp.is_subalgebra
        self._solver = solver
        self._ops: dict[int, DiffOperator] = {}

    def phi_h(self, g: Union[int, Vec]) -> PhiH:
        if self._solver is not None and isinstance(g, int):
            return self._solver(g)
        if self.general:
            return self.engine.phi_h_general(g)
        return self.engine.phi_h_subalgebra(g)

    def operator(self, i: int) -> DiffOperator:
        got = self._ops.get(i)
        if got is None:
            data = self.phi_h(i)
            if self.kind == "coinduced":
                got = coinduced_operator(data, self.rep)
            else:
                got = induced_operator(data, self.rep, self.truncation)
            self._ops[i] = got
        return got

    def operator_for(self, v: Vec) -> DiffOperator:
        terms = list(v.items())
        if not terms:
            space = self.decomp.xspace if self.kind == "coinduced" else self.decomp.pspace
            return DiffOperator(
                self.kind, space, self.rep.dim, self.rep.vparities,
                truncation=None if self.kind == "coinduced" else self.truncation,
            )
        out = terms[0][1] * self.operator(terms[0][0])
        for k, c in terms[1:]:
            out = out + c * self.operator(k)
        pars = {self.decomp.alg.parity(k) for k, _ in terms}
        out.parity = pars.pop() if len(pars) == 1 else 0
        return out


# -- duality -----------------------------------------------------------------------


def pair_duality_check(
    decomp: Decomposition,
    rep: HRepresentation,
    truncation: int,
    max_report: int = 5,
) -> list[str]:
    """Exact contragredience of T over V* against I over V through the
    evaluation pairing twisted by the main antiautomorphism (X -> -X).

    Checks  <T(g) f, m> = -(-1)^{|g||f|} <f, I(g) m>  for every basis g and
    all basis elements f = X-monomial (x) dual-vector, m = P-monomial (x)
    vector up to the truncation degree.  Returns violations (empty = pass).
    """
    from itertools import combinations_with_replacement

    alg = decomp.alg
    engine = SeriesEngine(decomp, truncation)
    co = Realization(decomp, contragredient(rep), "coinduced", truncation, engine)
    ind = Realization(decomp, rep, "induced", truncation, engine)
    xspace = decomp.xspace
    nvars = len(xspace)

    def monos(limit: int):
        for d in range(limit + 1):
            for combo in combinations_with_replacement(range(nvars), d):
                sign, mono = normalize(combo, xspace)
                if sign and mono == combo:
                    yield mono

    def dual_pair(f: SuperPoly, m: SuperPoly) -> dict:
        """V* x V matrix of pairings; here reduced to scalars per (a, b)."""
        out: dict = {}
        for fm, fv in f.terms.items():
            tw = Fraction(-1) ** len(fm)
            for mm, mv in m.terms.items():
                if len(fm) != len(mm):
                    continue
                base = _pair38(fm, mm, xspace)
                if not base:
                    continue
                for a, ca in fv.items():
                    cross = -1 if (rep.vparities[a] and xspace.mono_parity(mm)) else 1
                    for b, cb in mv.items():
                        if a != b:
                            continue
                        val = _mul(_mul(tw * base * cross, ca), cb)
                        out[a] = _add(out.get(a, Fraction(0)), val)
        return {k: v for k, v in out.items() if v}

    out: list[str] = []
    fmonos = list(monos(truncation))
    # the induced operator raises the P-degree by at most one (the P_i factor)
    safe = truncation - 1
    for g in range(alg.dim):
        tg = co.operator(g)
        ig = ind.operator(g)
        gpar = alg.parity(g)
        for fm in fmonos:
            for a in range(rep.dim):
                f = SuperPoly(xspace, {fm: Vec({a: Fraction(1)})}, truncation)
                fpar = (xspace.mono_parity(fm) + rep.vparities[a]) & 1
                for mm in fmonos:
                    if len(mm) > safe:
                        continue
                    for b in range(rep.dim):
                        m = SuperPoly(xspace, {mm: Vec({b: Fraction(1)})}, truncation)
                        lhs = dual_pair(tg.apply(f), m)
                        sgn = -1 if (gpar and fpar) else 1
                        rhs_raw = dual_pair(f, ig.apply(m))
                        rhs = {k: _mul(Fraction(-sgn), v) for k, v in rhs_raw.items()}
                        if lhs != rhs:
                            out.append(
                                f"duality broken at g={alg.label(g)},"
                                f" f={xspace.mono_str(fm)}(x)v*{a},"
                                f" m={xspace.mono_str(mm)}(x)v{b}: {lhs} vs {rhs}"
                            )
                            if len(out) >= max_report:
                                return out
    return out


def _pair38(fmono: Monomial, emono: Monomial, space: VarSpace) -> Fraction:
    from .superpoly import pair_monomials

    return pair_monomials(fmono, emono, space)
