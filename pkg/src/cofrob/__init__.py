"""Exact computations with finite-dimensional coalgebras, comodules and Hopf
algebras over cyclotomic fields."""

from .scalar import CycloField, Scalar, field, root_of_unity, invert, order_of_unity, promote
from .exactla import Matrix, Subspace, rref, kernel, sum_spaces, intersect, preimage, quotient_basis
from .coalg import Coalgebra, Algebra, Filtration, coradical, coradical_filtration, associated_graded
from .comod import Comodule, loewy_series, socle, poincare, injective_decomposition
from .hopf import HopfAlgebra, SimpleFamily, integral, gr_hopf, diagram
from .braided import (
    BraidingMatrix,
    CartanDatum,
    FiniteAbelianGroup,
    YDRealization,
    build_qls_bosonization,
    cartan_datum,
    classify_finite_type,
    realize_over_cyclic,
)
from .builders import build, group_algebra, sweedler, taft

__version__ = "0.1.0"
