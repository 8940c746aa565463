"""Exact computation in the two-parameter quantum groups GL_{p,q}(2), their
quotients SL_q(2) and SL_{q,xi}(2), and the enveloping algebras U_{p,q}(2),
U_q(2), U_{q,xi}(2)."""

from .errors import (
    AlgebraMismatch,
    AntipodeUnavailable,
    DivisionByZero,
    ExpressionSyntaxError,
    GlpqError,
    InvalidExponent,
    NegativeExponentOnNonInvertible,
    NonToralElement,
    NonTermination,
    RingMismatch,
    SuiteInapplicable,
    TorusPointOutsideSubgroup,
    Unbounded,
    UnknownSymbol,
    ZeroDenominator,
)
from .funalg import (
    FunPreset,
    Matrix2,
    antipode,
    coproduct,
    counit,
    determinant,
    fun_preset,
    hopf_ideal_check_bc,
    hopf_ideal_check_Dn,
    ideal_membership_bc,
    is_central,
    matrix_identities,
    quantum_plane_coaction_check,
    quotient_by_bc,
)
from .parser import parse, parse_element
from .report import Check, IdentityReport
from .rewrite import (
    AlgebraPresentation,
    ConfluenceReport,
    Generator,
    NCPoly,
    StraighteningRule,
    check_confluence,
    enumerate_basis,
    normalize,
)
from .scalars import RingMode, Scalar, scalar_arith, scalar_normalize, scalar_ring
from .tensor import TensorPoly, i_double_prime, i_prime, tensor
from .torus import TorusPoint
from .uea import (
    UPreset,
    Weight,
    embedding_consistency,
    u_antipode,
    u_coproduct,
    u_counit,
    u_normalize,
    u_preset,
    weight_eval,
)
from .verify import check_bialgebra_maps, get_preset, run_suite

__version__ = "0.1.0"
