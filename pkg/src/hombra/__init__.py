"""Exact computation kernel for twisted algebra and coalgebra structures.

Everything is computed over the rationals with exact arithmetic: structure
constants, axiom checks, convolution products, antipode searches, and the
bundled example structures.
"""

__version__ = "1.0.0"

from .scalars import Scalar, parse_scalar, format_scalar
from .linalg import Vec, Mat, SolutionSpace, solve_affine, kron, compose, swap_map
from .errors import DimensionMismatch, HypothesisFailed, TruncationExceeded, ParseError
from .structures import (
    HomAlgebra,
    HomCoalgebra,
    HomBialgebra,
    HomHopfCandidate,
    AxiomCheck,
    AxiomReport,
    Witness,
    FlagSet,
    check_axioms,
    compute_flags,
    is_hom_bialgebra_morphism,
)
from .convolution import (
    ConvContext,
    convolve,
    conv_unit,
    gamma,
    RelativeInverseResult,
    solve_at_exponent,
    solve_relative_inverse,
    pointwise_inverse_exponent,
    check_convolution_laws,
)
from .antipode import (
    PropositionVerdict,
    verify_strict_antipode,
    verify_relative_antipode,
    prop_anti_algebra,
    prop_anti_coalgebra,
    prop_unitality,
    prop_counitality,
    prop_hopf_map,
    prop_s_squared,
    check_grouplike,
    check_primitive,
    prop_grouplike_inverse,
    prop_primitive_image,
)
from .constructions import (
    Group,
    HomGroup,
    cyclic_group,
    symmetric_group_3,
    direct_product,
    group_endomorphisms,
    twist_group,
    index_one_hom_group,
    validate_hom_group,
    linearize_element_map,
    hom_group_algebra,
    group_algebra,
    trivial_hopf,
    yau_twist,
    tensor_hopf,
)
from .qmatrix import (
    QParams,
    QMatrixModel,
    normal_form,
    multiply,
    coproduct,
    counit,
    alpha_map,
    quantum_determinant,
    monomial_basis,
    monomial_name,
    build_model,
    to_hom_bialgebra,
)
from .serialize import ParsedStructure, parse_structure, emit_structure

__all__ = [
    "Scalar",
    "parse_scalar",
    "format_scalar",
    "Vec",
    "Mat",
    "SolutionSpace",
    "solve_affine",
    "kron",
    "compose",
    "swap_map",
    "DimensionMismatch",
    "HypothesisFailed",
    "TruncationExceeded",
    "ParseError",
    "HomAlgebra",
    "HomCoalgebra",
    "HomBialgebra",
    "HomHopfCandidate",
    "AxiomCheck",
    "AxiomReport",
    "Witness",
    "FlagSet",
    "check_axioms",
    "compute_flags",
    "is_hom_bialgebra_morphism",
    "ConvContext",
    "convolve",
    "conv_unit",
    "gamma",
    "RelativeInverseResult",
    "solve_at_exponent",
    "solve_relative_inverse",
    "pointwise_inverse_exponent",
    "check_convolution_laws",
    "PropositionVerdict",
    "verify_strict_antipode",
    "verify_relative_antipode",
    "prop_anti_algebra",
    "prop_anti_coalgebra",
    "prop_unitality",
    "prop_counitality",
    "prop_hopf_map",
    "prop_s_squared",
    "check_grouplike",
    "check_primitive",
    "prop_grouplike_inverse",
    "prop_primitive_image",
    "Group",
    "HomGroup",
    "cyclic_group",
    "symmetric_group_3",
    "direct_product",
    "group_endomorphisms",
    "twist_group",
    "index_one_hom_group",
    "validate_hom_group",
    "linearize_element_map",
    "hom_group_algebra",
    "group_algebra",
    "trivial_hopf",
    "yau_twist",
    "tensor_hopf",
    "QParams",
    "QMatrixModel",
    "normal_form",
    "multiply",
    "coproduct",
    "counit",
    "alpha_map",
    "quantum_determinant",
    "monomial_basis",
    "monomial_name",
    "build_model",
    "to_hom_bialgebra",
    "ParsedStructure",
    "parse_structure",
    "emit_structure",
]
