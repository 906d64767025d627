"""Monogenic functions with values in finite-dimensional commutative associative algebras."""

from .algebra import TOL_ZERO, AlgebraSpec, AlgebraSpecError, ValidationReport, Violation, validate_algebra
from .frame import FrameError, VariableFrame
from .holomorphic import HolomorphicFn, Term, adaptive_contour_quadrature, contour_quadrature
from .monogenic import (
    ComponentMap,
    ContourDegenerate,
    GridSpec,
    MonogenicFunction,
    check_cauchy_riemann,
    eval_monogenic,
    eval_monogenic_contour,
    gateaux_derivative,
    surjectivity_check,
    xi,
)
from .pde import (
    PDESpec,
    characteristic_sum,
    check_pde_residual,
    p_nonvanishing_scan,
    p_polynomial_eval,
    theorem4_check,
)
from .resolvent import NotInvertible, PoleAt, QTable, degenerate_set, invert, q_table, resolvent

__version__ = "0.1.0"
