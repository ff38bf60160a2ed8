"""Exact construction and verification of Reiswich orthogonal polynomials."""

from .arith import Rational, binomial, falling_factorial, generalized_binomial, parse_rational, rational_to_str
from .core import (
    MomentFunctional,
    ReiswichParam,
    inner_product,
    key_identity_value,
    moment,
    norm_square_formula,
    pm_original,
    recursion_coefficients,
    reiswich_closed,
    reiswich_recursive,
    reiswich_sequence,
    verify_orthogonality,
)
from .errors import (
    CertificationError,
    DomainError,
    NotSquarefreeError,
    ParseError,
    ReiswichError,
    TheoremViolation,
)
from .identities import (
    IdentityCheckResult,
    degree5_identity_check,
    lemma_ci_check,
    scaled_coefficient_check,
)
from .jacobi import JacobiParams, jacobi, jacobi_shifted, proportionality_constant
from .multipoly import MultiPoly, falling_factorial_sym
from .orbit import OrbitVector, PrecisionConfig, arccos_sqrt_half, minimal_orbit_vector, tau_for_m
from .report import CheckRecord, VerificationReport
from .roots import (
    RootEnclosure,
    SturmChain,
    count_roots,
    isolate_roots,
    refine,
    reiswich_roots,
    sturm_chain,
)
from .unipoly import UniPoly

__version__ = "0.1.0"
