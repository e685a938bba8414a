"""Finite-dimensional Lie superalgebras with exact structure constants.

An algebra is a homogeneous basis (parity, optional Z-degree) plus sparse
structure constants stored for i < j only (and for odd diagonal pairs);
the other order is derived from graded antisymmetry, so antisymmetry holds
by construction.  `validate` re-checks parity/grading compatibility and the
graded Jacobi identity on every basis triple in exact arithmetic.

Constructors: gl(n) on matrix units, the simply-laced families A/D/E in a
Chevalley basis (signs from a bimultiplicative cocycle on the root lattice,
gated by `validate`), and `load_custom` for arbitrary user algebras,
including superalgebras such as gl(1|1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .superpoly import coerce_add


class AlgebraError(ValueError):
    """Raised when an algebra description violates the axioms."""


class Vec:
    """Sparse vector over an indexed basis; entries are Fractions (or any
    scalar-like values supporting +, unary -, * and truthiness)."""

    __slots__ = ("c",)

    def __init__(self, comps: Optional[dict] = None):
        self.c: dict = {}
        if comps:
            for k, v in comps.items():
                if v:
                    self.c[k] = v

    @classmethod
    def basis(cls, i: int) -> "Vec":
        v = cls()
        v.c[i] = Fraction(1)
        return v

    def items(self):
        return self.c.items()

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vec):
            return NotImplemented
        return self.c == other.c

    def __add__(self, other: "Vec") -> "Vec":
        out = dict(self.c)
        for k, v in other.c.items():
            s = out.get(k)
            s = v if s is None else coerce_add(s, v)
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = Vec()
        res.c = out
        return res

    def __neg__(self) -> "Vec":
        res = Vec()
        res.c = {k: -v for k, v in self.c.items()}
        return res

    def __sub__(self, other: "Vec") -> "Vec":
        return self + (-other)

    def __rmul__(self, scalar) -> "Vec":
        if not scalar:
            return Vec()
        res = Vec()
        res.c = {k: scalar * v for k, v in self.c.items()}
        return res

    def __str__(self) -> str:
        if not self.c:
            return "0"
        return " + ".join(f"({v})*e{k}" for k, v in sorted(self.c.items()))

    __repr__ = __str__


@dataclass(frozen=True)
class BasisElement:
    index: int
    label: str
    parity: int
    degree: Optional[int] = None


class LieSuperAlgebra:
    """Basis + sparse structure constants, immutable after construction."""

    def __init__(self, name: str, basis: Sequence[BasisElement], brackets: dict):
        """`brackets` maps (i, j) with i <= j to {k: Fraction}; entries with
        i == j are only meaningful for odd basis elements."""
        self.name = name
        self.basis = tuple(basis)
        labels = [b.label for b in self.basis]
        if len(set(labels)) != len(labels):
            raise AlgebraError("basis labels must be unique")
        for n, b in enumerate(self.basis):
            if b.index != n:
                raise AlgebraError("basis indices must be dense 0..dim-1")
        self._sc: dict = {}
        for (i, j), terms in brackets.items():
            if i > j:
                raise AlgebraError("canonical bracket storage requires i <= j")
            clean = {k: Fraction(v) for k, v in terms.items() if v}
            if clean:
                self._sc[(i, j)] = clean
        self._derived_cache: dict = {}

    # -- basic queries -------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    def parity(self, i: int) -> int:
        return self.basis[i].parity

    def degree(self, i: int) -> Optional[int]:
        return self.basis[i].degree

    @property
    def graded(self) -> bool:
        return all(b.degree is not None for b in self.basis)

    def label(self, i: int) -> str:
        return self.basis[i].label

    def index_of(self, label: str) -> int:
        for b in self.basis:
            if b.label == label:
                return b.index
        raise KeyError(label)

    # -- bracket ---------------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict:
        """[e_i, e_j] as {k: coefficient}; derived from the canonical order."""
        if i < j or (i == j and self.parity(i)):
            return self._sc.get((i, j), {})
        if i == j:
            return {}  # even self-bracket vanishes by antisymmetry
        cached = self._derived_cache.get((i, j))
        if cached is None:
            stored = self._sc.get((j, i), {})
            # [e_i, e_j] = -(-1)^{|i||j|} [e_j, e_i]
            sign = 1 if self.parity(i) and self.parity(j) else -1
            cached = {k: sign * v for k, v in stored.items()}
            self._derived_cache[(i, j)] = cached
        return cached

    def bracket_vec(self, u: Vec, v: Vec) -> Vec:
        out: dict = {}
        for i, ci in u.items():
            for j, cj in v.items():
                terms = self.bracket_basis(i, j)
                if not terms:
                    continue
                c = ci * cj
                for k, w in terms.items():
                    s = out.get(k, 0) + c * w
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return Vec(out)

    # -- validation --------------------------------------------------------------

    def validate(self, max_report: int = 10) -> list[str]:
        """Exhaustive axiom check; returns a list of violations (empty = pass)."""
        out: list[str] = []
        n = self.dim

        def vadd(target: dict, terms: dict, sign: int, scale: Fraction):
            for k, v in terms.items():
                s = target.get(k, 0) + sign * scale * v
                if s:
                    target[k] = s
                else:
                    target.pop(k, None)

        # parity and grading compatibility of every stored bracket
        for (i, j), terms in self._sc.items():
            want_par = (self.parity(i) + self.parity(j)) % 2
            for k, v in terms.items():
                if self.parity(k) != want_par:
                    out.append(
                        f"parity: [{self.label(i)},{self.label(j)}] hits {self.label(k)}"
                        f" of parity {self.parity(k)}, expected {want_par}"
                    )
                di, dj, dk = self.degree(i), self.degree(j), self.degree(k)
                if di is not None and dj is not None and dk is not None and dk != di + dj:
                    out.append(
                        f"grading: [{self.label(i)},{self.label(j)}] -> {self.label(k)}"
                        f" has degree {dk} != {di}+{dj}"
                    )
                if len(out) >= max_report:
                    return out

        # even diagonal brackets are forced to vanish
        for i in range(n):
            if not self.parity(i) and self._sc.get((i, i)):
                out.append(f"antisymmetry: [{self.label(i)},{self.label(i)}] != 0 for even element")

        # graded Jacobi on all triples i <= j <= k
        for i in range(n):
            pi = self.parity(i)
            for j in range(i, n):
                pj = self.parity(j)
                for k in range(j, n):
                    pk = self.parity(k)
                    acc: dict = {}
                    for t, c in self.bracket_basis(j, k).items():
                        vadd(acc, self.bracket_basis(i, t), -1 if pi * pj else 1, c)
                    for t, c in self.bracket_basis(k, i).items():
                        vadd(acc, self.bracket_basis(j, t), -1 if pj * pk else 1, c)
                    for t, c in self.bracket_basis(i, j).items():
                        vadd(acc, self.bracket_basis(k, t), -1 if pk * pi else 1, c)
                    if acc:
                        out.append(
                            "jacobi: triple"
                            f" ({self.label(i)},{self.label(j)},{self.label(k)})"
                            f" leaves residue {Vec(acc)}"
                        )
                        if len(out) >= max_report:
                            return out
        return out

    def __str__(self) -> str:
        return f"{self.name} (dim {self.dim})"

    __repr__ = __str__


# -- gl(n) ---------------------------------------------------------------------


def build_gl(n: int) -> LieSuperAlgebra:
    """gl(n) on matrix units E_ab with [E_ab, E_cd] = d_bc E_ad - d_da E_cb,
    graded by b - a so the Borel sits in degree >= 0."""
    if n < 1:
        raise AlgebraError("gl(n) requires n >= 1")
    basis = []
    idx = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            i = len(basis)
            idx[(a, b)] = i
            basis.append(BasisElement(i, f"E[{a},{b}]", 0, b - a))
    brackets: dict = {}
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if i >= j:
                continue
            terms: dict = {}
            if b == c:
                terms[idx[(a, d)]] = terms.get(idx[(a, d)], 0) + 1
            if d == a:
                terms[idx[(c, b)]] = terms.get(idx[(c, b)], 0) - 1
            terms = {k: Fraction(v) for k, v in terms.items() if v}
            if terms:
                brackets[(i, j)] = terms
    return LieSuperAlgebra(f"gl({n})", basis, brackets)


# -- simply-laced root systems ---------------------------------------------------


def dynkin_edges(family: str, rank: int) -> list[tuple[int, int]]:
    family = family.upper()
    if family == "A":
        if rank < 1:
            raise AlgebraError("A_n requires n >= 1")
        return [(i, i + 1) for i in range(rank - 1)]
    if family == "D":
        if rank < 3:
            raise AlgebraError("D_n requires n >= 3")
        return [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    if family == "E":
        if rank not in (6, 7, 8):
            raise AlgebraError("E_n requires n in {6, 7, 8}")
        # Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
        chain = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: rank - 2]
        return chain + [(1, 3)]
    raise AlgebraError(f"unknown simply-laced family {family!r}")


def cartan_matrix(edges: list[tuple[int, int]], rank: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        c[i][j] = c[j][i] = -1
    return c


def positive_roots(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """All positive roots as coordinate tuples over the simple roots,
    enumerated by height via root strings (valid for any Cartan matrix;
    chains have length <= 1 in the simply-laced case)."""
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    known = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = []
        for alpha in layer:
            for i in range(rank):
                pairing = sum(alpha[j] * cartan[j][i] for j in range(rank))
                q = 0
                down = list(alpha)
                while True:
                    down[i] -= 1
                    if any(x < 0 for x in down) or tuple(down) not in known:
                        break
                    q += 1
                if q - pairing > 0:
                    beta = tuple(alpha[j] + (1 if j == i else 0) for j in range(rank))
                    if beta not in known:
                        known.add(beta)
                        nxt.append(beta)
                        out.append(beta)
        layer = nxt
    out.sort(key=lambda a: (sum(a), a))
    return out


def build_simply_laced(
    family: str, rank: int, orientation: Optional[Iterable[int]] = None
) -> LieSuperAlgebra:
    """Chevalley basis of A_n / D_n / E_n with the principal grading by root
    height.  Root-vector signs come from the bimultiplicative cocycle fixed
    by an orientation of the Dynkin diagram (eps(a_i, a_i) = -1, and -1 on
    oriented edges i < j); `validate` is the correctness gate and all
    N_{alpha,beta} are +-1 by construction.

    `orientation` optionally lists edge positions (into `dynkin_edges`) whose
    direction is reversed.  Any orientation yields the same algebra up to
    basis signs; reduced monomial counts of the path sum depend on it, so the
    default (all edges low index -> high index) is part of the recorded
    conventions.
    """
    edges = dynkin_edges(family, rank)
    cartan = cartan_matrix(edges, rank)
    pos = positive_roots(cartan)
    flipped = frozenset(orientation or ())

    # cocycle exponent table on simple roots
    eps0 = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        eps0[i][i] = 1
    for pos_e, (i, j) in enumerate(edges):
        a, b = (min(i, j), max(i, j))
        if pos_e in flipped:
            a, b = b, a
        eps0[a][b] = 1

    def eps(alpha: Sequence[int], beta: Sequence[int]) -> int:
        e = 0
        for i in range(rank):
            if not alpha[i]:
                continue
            for j in range(rank):
                if eps0[i][j] and beta[j]:
                    e += alpha[i] * beta[j]
        return -1 if e & 1 else 1

    # basis: negative roots by ascending degree, Cartan, positive roots
    elements: list[tuple[str, Optional[tuple[int, ...]], int]] = []
    for alpha in sorted(pos, key=lambda a: (-sum(a), a)):
        elements.append(("f" + _root_name(alpha), tuple(-x for x in alpha), -sum(alpha)))
    for i in range(rank):
        elements.append((f"h{i + 1}", None, 0))
    for alpha in pos:
        elements.append(("e" + _root_name(alpha), alpha, sum(alpha)))

    basis = [
        BasisElement(n, lab, 0, deg) for n, (lab, _, deg) in enumerate(elements)
    ]
    coords = {n: c for n, (_, c, _) in enumerate(elements)}
    cartan_index = {
        int(lab[1:]) - 1: n for n, (lab, c, _) in enumerate(elements) if c is None
    }
    root_index = {c: n for n, c in coords.items() if c is not None}
    posset = set(pos)

    def is_root(g: tuple[int, ...]) -> bool:
        return g in posset or tuple(-x for x in g) in posset

    brackets: dict = {}

    def put(i: int, j: int, terms: dict):
        clean = {k: Fraction(v) for k, v in terms.items() if v}
        if clean:
            brackets[(i, j)] = clean

    # Internally the root vectors are E_gamma with the uniform cocycle rule
    # [E_a, E_b] = eps(a, b) E_{a+b} and [E_a, E_{-a}] = -h_a; the stored
    # basis takes f_alpha = -E_{-alpha} (Chevalley involution convention),
    # which restores [e_alpha, f_alpha] = +h_alpha and N_{-a,-b} = -N_{a,b}.
    def vec_sign(c: tuple[int, ...]) -> int:
        return 1 if sum(c) > 0 else -1

    dim = len(elements)
    for i in range(dim):
        for j in range(i + 1, dim):
            a, b = coords[i], coords[j]
            if a is None and b is None:
                continue
            if a is None or b is None:
                # Cartan against a root vector: [h_t, e_alpha] = (alpha|alpha_t) e_alpha
                hi, ri = (i, j) if a is None else (j, i)
                alpha = coords[ri]
                hnum = int(basis[hi].label[1:]) - 1
                val = sum(alpha[t] * cartan[t][hnum] for t in range(rank))
                if val:
                    put(i, j, {ri: Fraction(val if a is None else -val)})
                continue
            g = tuple(a[t] + b[t] for t in range(rank))
            s = vec_sign(a) * vec_sign(b)
            if all(x == 0 for x in g):
                # [u_i, u_j] = s * [E_a, E_{-a}] = -s eps-free h_a
                put(i, j, {cartan_index[t]: Fraction(-s * a[t]) for t in range(rank) if a[t]})
            elif is_root(g):
                c = s * eps(a, b) * vec_sign(g)
                put(i, j, {root_index[g]: Fraction(c)})

    alg = LieSuperAlgebra(f"{family.upper()}{rank}", basis, brackets)
    problems = alg.validate()
    if problems:
        raise AlgebraError(
            f"Chevalley construction for {family}{rank} failed validation: " + problems[0]
        )
    return alg


def _root_name(alpha: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in alpha) + ")"


# -- custom algebras ---------------------------------------------------------------


def load_custom(spec: dict) -> LieSuperAlgebra:
    """Build an algebra from a structured description and validate it.

    spec = {
      "name": str,
      "basis": [{"label": str, "parity": 0|1, "degree": int|None}, ...],
      "brackets": [{"left": label|index, "right": label|index,
                    "terms": {label|index: "p/q" | number}}, ...],
    }

    Redundant bracket orders are cross-checked against graded antisymmetry
    before the Jacobi sweep; any violation raises AlgebraError with the
    offending pair/triple and both sides of the identity.
    """
    name = spec.get("name", "custom")
    raw_basis = spec["basis"]
    basis = []
    label_to_index: dict = {}
    for n, b in enumerate(raw_basis):
        lab = b["label"]
        label_to_index[lab] = n
        deg = b.get("degree")
        basis.append(BasisElement(n, lab, int(b.get("parity", 0)) & 1, deg))

    def resolve(x) -> int:
        if isinstance(x, int):
            return x
        return label_to_index[x]

    provided: dict = {}
    for entry in spec.get("brackets", []):
        i = resolve(entry["left"])
        j = resolve(entry["right"])
        terms = {resolve(k): Fraction(v) for k, v in entry["terms"].items() if Fraction(v)}
        if (i, j) in provided:
            raise AlgebraError(f"duplicate bracket entry for ({i},{j})")
        provided[(i, j)] = terms

    canonical: dict = {}
    for (i, j), terms in provided.items():
        if i < j or (i == j and basis[i].parity):
            key, val = (i, j), terms
        elif i == j:
            if terms:
                raise AlgebraError(
                    f"antisymmetry: [{basis[i].label},{basis[i].label}] must vanish"
                    f" for an even element; got {Vec(terms)}"
                )
            continue
        else:
            sign = -1 if basis[i].parity * basis[j].parity == 0 else 1
            key, val = (j, i), {k: sign * v for k, v in terms.items()}
        if key in canonical:
            if canonical[key] != val:
                raise AlgebraError(
                    f"antisymmetry: brackets for pair ({basis[key[0]].label},"
                    f"{basis[key[1]].label}) given in both orders disagree:"
                    f" {Vec(canonical[key])} vs {Vec(val)}"
                )
        else:
            canonical[key] = val

    alg = LieSuperAlgebra(name, basis, canonical)
    problems = alg.validate()
    if problems:
        raise AlgebraError(f"custom algebra {name!r} failed validation: " + "; ".join(problems))
    return alg


def build_gl11() -> LieSuperAlgebra:
    """gl(1|1): even E11, E22 and odd psi+ = E12, psi- = E21, graded by b - a."""
    return load_custom(
        {
            "name": "gl(1|1)",
            "basis": [
                {"label": "psi-", "parity": 1, "degree": -1},
                {"label": "E11", "parity": 0, "degree": 0},
                {"label": "E22", "parity": 0, "degree": 0},
                {"label": "psi+", "parity": 1, "degree": 1},
            ],
            "brackets": [
                {"left": "psi+", "right": "psi-", "terms": {"E11": 1, "E22": 1}},
                {"left": "E11", "right": "psi+", "terms": {"psi+": 1}},
                {"left": "E11", "right": "psi-", "terms": {"psi-": -1}},
                {"left": "E22", "right": "psi+", "terms": {"psi+": -1}},
                {"left": "E22", "right": "psi-", "terms": {"psi-": 1}},
            ],
        }
    )


def build_abelian(parities: Iterable[int], degrees: Optional[Iterable[Optional[int]]] = None) -> LieSuperAlgebra:
    pars = list(parities)
    degs = list(degrees) if degrees is not None else [None] * len(pars)
    basis = [BasisElement(i, f"a{i + 1}", p & 1, d) for i, (p, d) in enumerate(zip(pars, degs))]
    return LieSuperAlgebra(f"abelian({len(pars)})", basis, {})
