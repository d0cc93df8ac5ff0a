"""Exact-arithmetic toolkit for foliations of the projective plane.

Everything is computed over the rationals with no rounding: sparse
polynomial algebra, local singularity invariants (multiplicity and
Milnor number via intersection multiplicities), and stability analysis
through torus weights and exact convex-hull tests, with machine-checkable
certificates attached to every verdict.
"""

from .errors import (DegenerateResultantError, FamilyConditionError,
                     FoliantError, MixedDegreeError, NotIsolatedError,
                     NotSingularError, NullFoliationError, OracleBudgetError,
                     PolynomialSyntaxError, UnsupportedDegreeError)
from .foliation import (E0, E1, E2, Foliation, Frame, ProjPoint, VectorField,
                        act, divergence, dual_form, foliations_equal,
                        format_vector_field, frame_to_point, gamma_basis,
                        is_singular_at, local_representation,
                        parse_vector_field, radial_field, z_reduce)
from .localgeom import (INFINITE, LocalPair, SingularityReport,
                        buchberger_oracle, has_isolated_singularities,
                        intersection_index_origin, milnor_at_point,
                        multiplicity_at_origin, multiplicity_at_point,
                        singularity_report, unique_singularity_certificate)
from .poly import (MINUS_INFINITY, MPoly, dehomogenize, divide_exact,
                   format_poly, gcd_bivariate, homogeneous_decomposition,
                   order_of_vanishing, parse_poly, partial_derivative,
                   resultant_binary_forms, resultant_in_variable,
                   substitute_linear)
from .stability import (DestabilizingPair, HullEvidence, NormalFormMatch,
                        OneParamSubgroup, StabilityVerdict,
                        SubspaceMembership, WeightSupport, WeightVector,
                        check_destabilizing_certificate, classify,
                        hull_position, mu_pairing, search_destabilizing_frame,
                        v_membership, weight_of_monomial, weight_support)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
