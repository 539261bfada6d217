"""Evaluation codes over finite fields: vanishing ideals, duals and indicator functions."""

from .duality import (
    AlgebraicDual,
    DualityError,
    algebraic_dual,
    combinatorial_pairing,
    double_dual_check,
    is_dual_monomial,
    verify_monomial_equivalence,
)
from .estimators import EvaluationCode, VanishingIdeal, check_field, check_points
from .evalcode import (
    BudgetExceeded,
    CodeError,
    LinearCode,
    PointSet,
    dual_code,
    evaluate_space,
    is_standard_monomial_code,
    min_distance,
    reed_muller_space,
    standard_function_space,
)
from .families import (
    CartesianSpec,
    FamilyError,
    affine_monomial_dual,
    affine_rm_dual,
    cartesian_pointset,
    duality_criterion,
    reed_muller,
    self_dual_code,
    torus_monomial_dual,
    weakly_divisor_closed,
)
from .field import FieldElement, FieldError, FieldSpec, make_field
from .groebner import Footprint, GroebnerBasis, GroebnerError, buchberger, remainder, vanishing_ideal
from .invariants import (
    HilbertProfile,
    IndicatorSet,
    essential_monomials,
    hilbert_profile,
    indicator_functions,
    reg_delta,
    symmetry_and_duality_condition,
    v_numbers,
)
from .linalg import basis_algorithm, invert, null_space, rref
from .polyring import GREVLEX, GRLEX, LEX, MonomialOrder, Polynomial, PolynomialError, parse_polynomial

__version__ = "0.1.0"
