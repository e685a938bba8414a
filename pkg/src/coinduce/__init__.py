"""Exact differential-operator realizations of induced and coinduced
modules over finite-dimensional Lie superalgebras.

Two mutually cross-validating engines compute the defining series data:
closed Bernoulli-operator forms (`coinduce.series`) and an exact path sum
over the action graph (`coinduce.graph`).  `coinduce.realize` assembles the
module operators, `coinduce.verify` packages the exactness checks, and the
`coinduce` CLI reproduces the statistics reports.
"""

from .decomp import Decomposition, DecompositionError, custom, triangular
from .graph import (ActionGraph, Convention, Path, build_action_graph,
                    enumerate_paths, k_of_path, path_integral)
from .liealg import (AlgebraError, BasisElement, LieSuperAlgebra, Vec,
                     build_abelian, build_gl, build_gl11, build_simply_laced,
                     load_custom)
from .realize import (DiffOperator, HRepresentation, Matrix, Realization,
                      TruncationOverflow, coinduced_operator, contragredient,
                      induced_operator, make_adjoint, make_character,
                      make_custom, pair_duality_check)
from .scalars import bernoulli, c_coeff
from .series import PhiH, SeriesEngine
from .superpoly import Monomial, SuperPoly, VarSpace, normalize, pair_monomials

__version__ = "0.1.0"

__all__ = [
    "ActionGraph", "AlgebraError", "BasisElement", "Convention",
    "Decomposition", "DecompositionError", "DiffOperator", "HRepresentation",
    "LieSuperAlgebra", "Matrix", "Monomial", "Path", "PhiH", "Realization",
    "SeriesEngine", "SuperPoly", "TruncationOverflow", "VarSpace", "Vec",
    "bernoulli", "build_abelian", "build_action_graph", "build_gl",
    "build_gl11", "build_simply_laced", "c_coeff", "coinduced_operator",
    "contragredient", "custom", "enumerate_paths", "induced_operator",
    "k_of_path", "load_custom", "make_adjoint", "make_character",
    "make_custom", "normalize", "pair_duality_check", "pair_monomials",
    "path_integral", "triangular",
]
