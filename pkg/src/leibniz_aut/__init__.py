"""Exact computations with finite-dimensional Leibniz algebras over Q and F_p."""

from .algebra import (Algebra, annihilator, annihilator_left, annihilator_right, bracket, center,
                      derived_subalgebra, is_ideal, is_left_ideal, is_left_leibniz, is_lie,
                      is_right_ideal, is_subalgebra, leibniz_kernel, left_center,
                      lower_central_series, nilpotency_class, product_subspace, right_center,
                      upper_central_series)
from .catalog import (AutParams, factor_sd, factor_tj, general_aut_matrix, make_lei1, make_lei2,
                      make_lei3)
from .groups import MatrixGroup, enumerate_automorphisms, is_automorphism, is_endomorphism
from .linalg import Field, Matrix, Subspace
from .theorem import family, verify_theorem

__version__ = "0.1.0"
