"""Exact bi-secant limit cones of complex curve germs.

The engine takes reduced curve germs in (C^n, 0) given by Puiseux-form
parametrizations over cyclotomic coefficients, computes the cone of limits
of bi-secant lines together with the auxiliary multiplicities that classify
the germ up to bi-Lipschitz equivalence, and cross-checks the symbolic cone
with a floating-point secant-sampling oracle.
"""

from .auxiliary import (
    AuxRecord,
    cham,
    characteristic_aux,
    characteristic_records,
    coam,
    contact_aux,
    contact_records,
)
from .c5 import (
    C5Cone,
    bound1,
    bound2,
    c5_cone,
    integer_normalized_form,
    polynomial_text,
    product_equation,
    sigma,
)
from .documents import (
    curve_from_exponents,
    dumps_document,
    from_document,
    loads_document,
    read_curve,
    to_document,
    write_curve,
)
from .errors import (
    ConductorLimitExceeded,
    DegenerateSecant,
    DependentVectors,
    DimensionMismatch,
    DivisionByZero,
    DuplicateBranch,
    EngineError,
    FloatingPointUnderflow,
    IncompatibleSystem,
    InvalidDocument,
    NoCommonSpecialCoordinate,
    NonIntegralResult,
    NonPrimitiveParametrization,
    NotPlaneCurve,
    NotPuiseuxForm,
    StructureMismatch,
    TooManyBranches,
    UnsupportedDimension,
)
from .geometry import (
    Branch,
    Curve,
    Direction,
    Plane,
    TangencyClassification,
    check_compatibility,
    classify,
    curve,
    matrix_rank,
    null_space,
    plane_equations,
    plane_from_vectors,
    rref,
    tangent_direction,
)
from .invariants import (
    ContactStructure,
    EquivalenceVerdict,
    InvariantProfile,
    bilipschitz_equivalent,
    characteristic_exponents,
    contact_structure,
    intersection_multiplicity,
    profile,
)
from .oracle import (
    SampleReport,
    WitnessResult,
    cone_witness_results,
    contact_witness_family,
    default_u_values,
    diagonal_witness_family,
    sample_secant_directions,
    witness_secant_family,
)
from .projection import (
    GenericityVerdict,
    LinearProjection,
    NonNormalFormImage,
    apply_projection,
    find_generic_projection,
    is_c5_generic,
    verify_projection_invariance,
)
from .scalar import (
    CONDUCTOR_LIMIT,
    CycloScalar,
    common_conductor,
    cyclotomic_polynomial,
    root_of_unity,
    to_complex,
    zeta,
)
from .series import (
    CoordinateSeries,
    Parametrization,
    is_primitive,
    order,
    puiseux_form_check,
    substitute_power,
    substitute_scale,
    subtract,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
