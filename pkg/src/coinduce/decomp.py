"""Direct-sum decompositions g = g_minus (+) h and their projections.

A decomposition always ends up *basis-aligned*: the working algebra has the
g_minus span on one set of basis indices and h on the rest.  Triangular
decompositions of graded algebras are aligned already; custom ones given by
spanning vectors are re-expressed in an adapted basis by an exact change of
basis, so the series and graph engines never deal with skew subspaces.

h must be closed under the bracket (it acts on the coefficient module);
g_minus need not be, and `is_subalgebra` records whether it is.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Union

from .liealg import AlgebraError, BasisElement, LieSuperAlgebra, Vec
from .superpoly import SuperPoly, VarSpace


class DecompositionError(ValueError):
    """Raised when the requested split is not a valid direct sum."""


class Decomposition:
    def __init__(
        self,
        alg: LieSuperAlgebra,
        minus: Sequence[int],
        h: Sequence[int],
        source: Optional[LieSuperAlgebra] = None,
    ):
        self.alg = alg
        self.minus = tuple(minus)
        self.h = tuple(h)
        self.source = source or alg
        if sorted(self.minus + self.h) != list(range(alg.dim)):
            raise DecompositionError("minus and h indices must partition the basis")
        self._minus_set = frozenset(self.minus)
        self._check_h_closed()
        self.is_subalgebra = self._check_minus_closed()
        self.xspace = VarSpace(
            (alg.parity(i) for i in self.minus),
            labels=tuple(f"X{j + 1}" for j in range(len(self.minus))),
        )
        self.pspace = VarSpace(
            (alg.parity(i) for i in self.minus),
            labels=tuple(f"P{j + 1}" for j in range(len(self.minus))),
        )
        # dual-basis registry: X variable j <-> g_minus basis element minus[j]
        self.var_of_basis = {b: j for j, b in enumerate(self.minus)}

    # -- construction-time checks ------------------------------------------

    def _check_h_closed(self) -> None:
        for a in self.h:
            for b in self.h:
                for k in self.alg.bracket_basis(a, b):
                    if k in self._minus_set:
                        raise DecompositionError(
                            f"h is not closed under the bracket:"
                            f" [{self.alg.label(a)},{self.alg.label(b)}] has a"
                            f" component on {self.alg.label(k)}"
                        )

    def _check_minus_closed(self) -> bool:
        for a in self.minus:
            for b in self.minus:
                for k in self.alg.bracket_basis(a, b):
                    if k not in self._minus_set:
                        return False
        return True

    # -- projections ---------------------------------------------------------

    def in_minus(self, basis_index: int) -> bool:
        return basis_index in self._minus_set

    def project_minus_vec(self, v: Vec) -> Vec:
        return Vec({k: c for k, c in v.items() if k in self._minus_set})

    def project_h_vec(self, v: Vec) -> Vec:
        return Vec({k: c for k, c in v.items() if k not in self._minus_set})

    def project_minus(self, p: SuperPoly) -> SuperPoly:
        return p.map_values(self.project_minus_vec)

    def project_h(self, p: SuperPoly) -> SuperPoly:
        return p.map_values(self.project_h_vec)

    # -- misc ------------------------------------------------------------------

    @property
    def depth(self) -> Optional[int]:
        """Largest |degree| over g_minus for graded algebras (grading depth)."""
        if not self.alg.graded:
            return None
        degs = [self.alg.degree(i) for i in self.minus]
        return -min(degs) if degs else 0

    def describe(self) -> str:
        return (
            f"{self.alg.name}: g_- = {{{', '.join(self.alg.label(i) for i in self.minus)}}},"
            f" h = {{{', '.join(self.alg.label(i) for i in self.h)}}}"
            f" (g_- {'is' if self.is_subalgebra else 'is not'} a subalgebra)"
        )


def triangular(alg: LieSuperAlgebra) -> Decomposition:
    """Negative-degree part vs Borel of a Z-graded algebra."""
    if not alg.graded:
        raise DecompositionError("triangular decomposition needs a Z-grading")
    minus = tuple(b.index for b in alg.basis if b.degree < 0)
    h = tuple(b.index for b in alg.basis if b.degree >= 0)
    return Decomposition(alg, minus, h)


VecSpec = Union[int, str, dict]


def _as_vec(alg: LieSuperAlgebra, spec: VecSpec) -> Vec:
    if isinstance(spec, int):
        return Vec.basis(spec)
    if isinstance(spec, str):
        return Vec.basis(alg.index_of(spec))
    return Vec({alg.index_of(k) if isinstance(k, str) else k: Fraction(v) for k, v in spec.items()})


def custom(
    alg: LieSuperAlgebra,
    minus_spec: Sequence[VecSpec],
    h_spec: Sequence[VecSpec],
) -> Decomposition:
    """Decomposition from spanning vectors; re-expressed in an adapted basis.

    The union of the two spanning lists must be a basis of g (checked by
    exact elimination); failures report whether the sum is not direct or h
    is not closed.
    """
    mvecs = [_as_vec(alg, s) for s in minus_spec]
    hvecs = [_as_vec(alg, s) for s in h_spec]
    n = alg.dim
    cols = mvecs + hvecs
    if len(cols) != n:
        raise DecompositionError(
            f"spanning lists have {len(cols)} vectors for dimension {n}: not a direct sum"
        )

    aligned = all(
        len(v.c) == 1 and next(iter(v.c.values())) == 1 for v in cols
    )
    if aligned:
        minus = [next(iter(v.c)) for v in mvecs]
        h = [next(iter(v.c)) for v in hvecs]
        if len(set(minus + h)) != n:
            raise DecompositionError("spanning vectors overlap: not a direct sum")
        return Decomposition(alg, minus, h)

    inv = _invert([[v.c.get(r, Fraction(0)) for v in cols] for r in range(n)])
    if inv is None:
        raise DecompositionError("spanning vectors are linearly dependent: not a direct sum")

    # parities of the new basis vectors must be homogeneous
    new_basis = []
    for j, v in enumerate(cols):
        pars = {alg.parity(k) for k in v.c}
        if len(pars) != 1:
            raise DecompositionError(f"spanning vector #{j} mixes parities")
        degs = {alg.degree(k) for k in v.c}
        deg = degs.pop() if len(degs) == 1 else None
        label = (
            alg.label(next(iter(v.c)))
            if len(v.c) == 1 and next(iter(v.c.values())) == 1
            else (f"M{j + 1}" if j < len(mvecs) else f"H{j - len(mvecs) + 1}")
        )
        new_basis.append(BasisElement(j, label, pars.pop(), deg))
    if any(b.degree is None for b in new_basis):
        new_basis = [BasisElement(b.index, b.label, b.parity, None) for b in new_basis]

    # structure constants in the adapted coordinates
    brackets: dict = {}
    for i in range(n):
        for j in range(i, n):
            if i == j and not new_basis[i].parity:
                continue
            w = alg.bracket_vec(cols[i], cols[j])
            if not w:
                continue
            old = [w.c.get(r, Fraction(0)) for r in range(n)]
            new = {
                k: c
                for k in range(n)
                if (c := sum((inv[k][r] * old[r] for r in range(n)), Fraction(0)))
            }
            if new:
                brackets[(i, j)] = new

    adapted = LieSuperAlgebra(alg.name + "/adapted", new_basis, brackets)
    problems = adapted.validate()
    if problems:
        raise AlgebraError("adapted basis broke the algebra axioms: " + problems[0])
    return Decomposition(adapted, range(len(mvecs)), range(len(mvecs), n), source=alg)


def _invert(m: list[list[Fraction]]) -> Optional[list[list[Fraction]]]:
    """Exact Gauss-Jordan inverse; None when singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]
