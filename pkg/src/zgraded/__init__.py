"""Exact constructions and checks for (Z2)^n-graded commutative algebras."""

from ._common import CapExceeded, DimensionMismatch, Report, Unsupported
from .analysis import (
    Subspace,
    center,
    ideal_closure,
    is_graded_simple,
    is_simple,
    minimal_polynomial,
    radical,
)
from .cocycle import BilinearFormZ2, SignCocycle, beta_of, eval_sign, f_standard, is_cocycle
from .constructions import (
    check_generator_iso,
    clifford,
    clifford_complex,
    clifford_degree_map,
    even_twisted_subalgebra,
    matrix_algebra,
    quaternions,
    twisted_group_algebra,
)
from .graded_algebra import (
    AlgebraElement,
    GradedAlgebra,
    check_associativity,
    check_beta_commutativity,
    check_cocycle,
    check_gamma_commutativity,
    check_grading,
    mul,
)
from .grading_search import SearchResult, grading_search
from .scalars import GAUSSIAN, RATIONAL, Gaussian
from .z2group import GroupElement, enumerate_even, enumerate_group, gp_add, parity, scalar_product

__version__ = "0.1.0"
