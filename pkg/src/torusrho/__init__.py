"""Signature functions, rho_ab invariants and Fourier transforms of iterated
torus knots, with the related plane-curve-singularity invariants."""

from .knots import (CablePair, CableTriple, DescriptorError, IteratedTorusKnot,
                    NewtonPairSequence, cable_r_factors, newton_to_cables,
                    parse_knot_descriptor, parse_newton_descriptor, parse_triple_set)
from .stepfunction import StepFunction
from .signature import (dd_link_step_function, knot_signature_function, s_pq, s_pqr,
                        sigma_window_count, signature_at, step_function_pqr)
from .rho import integrate_step, rho_algebraic, rho_closed, rho_dd_link, rho_integral
from .fourier import (fourier_closed, fourier_numeric, n_pqr, residue_at,
                      signatures_equal, step_functions_almost_equal)
from .singularity import bound_report, dd_counterexample, h_squared, kd_squared

__version__ = "0.1.0"
