"""Closed-form engine for the decomposition identity.

Everything is driven by one primitive: the degree-raising operator

    ad_xp(m (x) w) = sum_i (-1)^{|P_i| |m|} (X^i m) (x) [P_i, w]

over the dual variables X^i of the g_minus basis P_i.  The two generating
series t/(e^{-t}-1) (Bernoulli numbers) and (e^{-t}-1)/t are represented by
their exact rational coefficient sequences; the value at t = 0 is the
analytic limit -1, never a division.

`phi_h_subalgebra` evaluates the closed forms available when g_minus closes
under the bracket; `phi_h_general` solves the corresponding equations for an
arbitrary direct-sum decomposition by Neumann inversion, order by order in
the polynomial degree.  `verify_defining_identity` substitutes any candidate
pair back into the residual equation and is the engine-independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Union

from .decomp import Decomposition
from .liealg import Vec
from .scalars import bernoulli
from .superpoly import SuperPoly


@dataclass
class PhiH:
    """phi(X, g) as a g_minus-valued polynomial (phiP) plus the h-valued part."""

    g: Vec
    phiP: SuperPoly
    h: SuperPoly
    truncation: int
    truncated: bool = False

    def phi_component(self, j: int, decomp: Decomposition) -> SuperPoly:
        """Scalar coefficient series of the j-th g_minus direction."""
        basis_index = decomp.minus[j]
        out = SuperPoly.zero(self.phiP.space, self.phiP.trunc)
        for m, vec in self.phiP.terms.items():
            c = vec.c.get(basis_index)
            if c:
                out.terms[m] = c
        return out


class SeriesEngine:
    def __init__(self, decomp: Decomposition, truncation: Optional[int] = None):
        self.decomp = decomp
        alg = decomp.alg
        if truncation is None:
            if decomp.depth is None:
                raise ValueError(
                    "non-graded decomposition: an explicit truncation is mandatory"
                )
            truncation = decomp.depth + max(
                [alg.degree(i) for i in range(alg.dim)], default=0
            )
        self.truncation = truncation
        # adjacency of the g_minus action: var j -> [(source, target, weight)]
        self.adj: list[list[tuple[int, int, Fraction]]] = []
        for j, p in enumerate(decomp.minus):
            rows = []
            for s in range(alg.dim):
                for t, c in alg.bracket_basis(p, s).items():
                    rows.append((s, t, c))
            rows.sort()
            self.adj.append(rows)
        self._adj_by_source: list[list[tuple[int, int, Fraction]]] = [
            [] for _ in range(alg.dim)
        ]
        for j, rows in enumerate(self.adj):
            for s, t, c in rows:
                self._adj_by_source[s].append((j, t, c))

    # -- the primitive -------------------------------------------------------

    def ad_xp(self, p: SuperPoly) -> SuperPoly:
        space = self.decomp.xspace
        out = SuperPoly.zero(space, p.trunc)
        trunc = p.trunc
        all_even = space.all_even
        for m, vec in p.terms.items():
            if trunc is not None and len(m) + 1 > trunc:
                continue
            mpar = 0 if all_even else space.mono_parity(m)
            for s, cs in vec.items():
                for j, t, c in self._adj_by_source[s]:
                    sign = -1 if (not all_even and mpar and space.parities[j]) else 1
                    contrib = SuperPoly(space, {m: Vec({t: sign * cs * c})}, trunc)
                    out = out + contrib.lmul_var(j)
        return out

    def _fresh(self, g: Union[int, Vec]) -> SuperPoly:
        vec = Vec.basis(g) if isinstance(g, int) else g
        return SuperPoly(
            self.decomp.xspace, {(): vec} if vec else None, self.truncation
        )

    def exp_neg_ad(self, g: Union[int, Vec]) -> SuperPoly:
        """e^{-ad XP} g = sum_n (-1)^n ad_xp^n(g) / n!, truncated."""
        term = self._fresh(g)
        total = term
        n = 0
        while term:
            n += 1
            term = self.ad_xp(term)
            if term:
                total = total + Fraction((-1) ** n, factorial(n)) * term
        return total

    # -- operator series ---------------------------------------------------------

    def _series_apply(self, coeff, p: SuperPoly, start: int = 0) -> SuperPoly:
        """sum_{n >= start} coeff(n) * ad_xp^n(p)."""
        out = SuperPoly.zero(p.space, p.trunc)
        term = p
        n = 0
        while term:
            if n >= start:
                c = coeff(n)
                if c:
                    out = out + c * term
            term = self.ad_xp(term)
            n += 1
        return out

    @staticmethod
    def _s_coeff(n: int) -> Fraction:
        # t/(e^{-t}-1) = -sum_n B_n (-t)^n / n!
        return -Fraction((-1) ** n * bernoulli(n), factorial(n))

    @staticmethod
    def _d_coeff(n: int) -> Fraction:
        # (e^{-t}-1)/t = sum_n (-1)^{n+1} t^n / (n+1)!
        return Fraction((-1) ** (n + 1), factorial(n + 1))

    def bernoulli_op(self, p: SuperPoly) -> SuperPoly:
        """Apply ad XP / (e^{-ad XP} - 1); the t = 0 limit is -1."""
        return self._series_apply(self._s_coeff, p)

    def inv_bernoulli_op(self, p: SuperPoly) -> SuperPoly:
        """Apply (e^{-ad XP} - 1) / ad XP."""
        return self._series_apply(self._d_coeff, p)

    # -- the two solvers -----------------------------------------------------------

    def phi_h_subalgebra(self, g: Union[int, Vec]) -> PhiH:
        if not self.decomp.is_subalgebra:
            raise ValueError(
                "closed forms need g_minus closed under the bracket; use phi_h_general"
            )
        gv = Vec.basis(g) if isinstance(g, int) else g
        e = self.exp_neg_ad(gv)
        h = self.decomp.project_h(e)
        phiP = -(self.bernoulli_op(self.decomp.project_minus(e)))
        return PhiH(gv, phiP, h, self.truncation)

    def phi_h_general(self, g: Union[int, Vec]) -> PhiH:
        """Order-by-order inversion valid for any direct-sum decomposition."""
        decomp = self.decomp
        gv = Vec.basis(g) if isinstance(g, int) else g
        e = self.exp_neg_ad(gv)

        # phi: (Pi_- (e^{-ad}-1)/ad) phiP = -Pi_- e^{-ad} g.  The operator is
        # -(identity) + R with R raising the degree, so iterate
        # phiP = y + R(phiP) from y = Pi_- e^{-ad} g.
        y = decomp.project_minus(e)

        def r_op(w: SuperPoly) -> SuperPoly:
            return decomp.project_minus(self._series_apply(self._d_coeff, w, start=1))

        phiP = y
        truncated = False
        for _ in range(self.truncation + 1):
            nxt = y + r_op(phiP)
            if nxt == phiP:
                break
            phiP = nxt
        else:
            truncated = True

        # h: (Pi_h ad/(e^{-ad}-1)) h = Pi_h ad/(e^{-ad}-1) e^{-ad} g, again
        # -(identity) + F with F degree-raising: h = -z + F(h).
        z = decomp.project_h(self.bernoulli_op(e))

        def f_op(w: SuperPoly) -> SuperPoly:
            return decomp.project_h(self._series_apply(self._s_coeff, w, start=1))

        h = -z
        for _ in range(self.truncation + 1):
            nxt = -z + f_op(h)
            if nxt == h:
                break
            h = nxt
        else:
            truncated = True

        return PhiH(gv, phiP, h, self.truncation, truncated)

    def verify_defining_identity(self, res: PhiH) -> bool:
        """Substitute (phi, h) into the residual equation
        phi P - S h = -S e^{-ad XP} g   (S = ad XP/(e^{-ad XP}-1))
        and compare exactly to the shared truncation degree."""
        lhs = res.phiP - self.bernoulli_op(res.h)
        rhs = -(self.bernoulli_op(self.exp_neg_ad(res.g)))
        return lhs == rhs
