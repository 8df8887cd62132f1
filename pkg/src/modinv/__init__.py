"""Exact invariant theory of finite linear groups: reflections, class groups,
Brauer character series and quasi-Gorenstein verdicts for k[x1..xn]^G."""
from .chars import (
    LinearCharacter, character_group, class_group, det_character, graded_det_characters,
    restrict_character,
)
from .engine import (
    GroupSpec, induced_generator_action, probe_polynomial_structure, quasi_gorenstein_verdict,
)
from .errors import ComputationError, InputError
from .exactnum import brauer_lift, cyclotomic_field, finite_field, make_field, mult_order, rational_field
from .invariants import (
    dchi_estimate, group_action, invariants_of_degree, reynolds, semi_invariants_of_degree,
    transversal_check, twisted_projection,
)
from .matgroup import (
    LiftContext, Mat, abelianization, commutator_subgroup, eigenvalues, element_order,
    enumerate_group, generated_subgroup,
)
from .polyalg import MultiPoly, RationalFunction, UPoly, multipoly_gcd
from .reflect import check_NR, classify_element, reflection_subgroup, wtilde_subgroup
from .series import (
    brauer_series_sym, duality_check, graded_poly_series, isotypic_average, lambda_via_duality,
    molien_average, trace_series_truncated,
)

__version__ = "0.1.0"
