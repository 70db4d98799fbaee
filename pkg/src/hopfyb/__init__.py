"""Exact computations with matched pairs of actions on finite-dimensional
Hopf algebras and the Yang-Baxter operators they induce.

Scalars live in Q(a), the rational functions in one formal parameter, so
parametrized families are verified for all values of a at once.
"""

from .braiding import (
    BraidingOperator,
    build_r,
    check_braid_equation,
    corollary_38_check,
    involutive_antipode_check,
    extract_actions_from_r,
    involutivity_report,
    r_inverse_formula,
    r_inverse_via_antipode,
    verify_braiding_axioms,
    ybo_identities,
)
from .catalog import family_pair, get_algebra, get_pair
from .cqt import CqtForm, induce_pair_from_cqt, is_cotriangular, r_alpha_form, verify_cqt
from .hopf import HopfAlgebra, grouplikes, skew_primitives, verify_hopf
from .linalg import Matrix, Tensor3
from .matched_pair import (
    ActionPair,
    check_antipode_identities,
    conjugation_pair,
    derive_right_action,
    trivial_pair,
    verify_matched_pair,
    verify_module_coalgebra_action,
)
from .report import AxiomReport
from .scalars import A, ONE, ZERO, Scalar, parse_scalar
from .transmutation import (
    adjoint_actions,
    bosonization,
    build_transmutation,
    check_hopf_brace_compat,
    double_cross_product,
    phi_isomorphism,
    verify_braided_hopf,
    verify_yd_module,
)

__all__ = [
    "A",
    "ActionPair",
    "adjoint_actions",
    "AxiomReport",
    "bosonization",
    "BraidingOperator",
    "build_r",
    "build_transmutation",
    "check_antipode_identities",
    "check_braid_equation",
    "check_hopf_brace_compat",
    "conjugation_pair",
    "corollary_38_check",
    "CqtForm",
    "derive_right_action",
    "double_cross_product",
    "extract_actions_from_r",
    "family_pair",
    "get_algebra",
    "get_pair",
    "grouplikes",
    "HopfAlgebra",
    "induce_pair_from_cqt",
    "involutive_antipode_check",
    "involutivity_report",
    "is_cotriangular",
    "Matrix",
    "ONE",
    "parse_scalar",
    "phi_isomorphism",
    "r_alpha_form",
    "r_inverse_formula",
    "r_inverse_via_antipode",
    "Scalar",
    "skew_primitives",
    "Tensor3",
    "trivial_pair",
    "verify_braided_hopf",
    "verify_braiding_axioms",
    "verify_cqt",
    "verify_hopf",
    "verify_matched_pair",
    "verify_module_coalgebra_action",
    "verify_yd_module",
    "ybo_identities",
    "ZERO",
]

__version__ = "0.1.0"
