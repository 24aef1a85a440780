"""Exact computations in reflection equation algebras over Q(q).

Rational functions in ``q``, operators on tensor powers, Hecke symmetries and
their R-traces, the Hecke algebra, noncommutative normal forms, the
characteristic map with its central elements, the quantum Harish-Chandra
morphism and characters.
"""

from ._kernel import BACKEND
from .errors import (
    AxiomViolation,
    CharacterMismatch,
    DegreeBoundExceeded,
    IndexOutOfRange,
    InvolutiveUnsupported,
    NotInSpan,
    NotPolynomial,
    NotScalar,
    NotSkewInvertible,
    ParseError,
    PoleAtOne,
    PoleAtPoint,
    PositionOutOfRange,
    ReaError,
    RepresentationCheckFailed,
    StrandMismatch,
    VerificationFailed,
    ZeroSymmetrizer,
)
from .scalar import KAPPA, ONE, Q, ZERO, ScalarQ, eval_at, limit_q1, parse_scalar, qint, qpow
from .tensor import TensorOp, embed, identity, partial_trace, r_partial_trace, r_trace, rank
from .symmetry import (
    Symmetry,
    birank_degree,
    dj_symmetry,
    flip,
    from_matrix,
    hilbert_dims,
    skew_inverse,
    skew_symmetrizer,
    superflip,
)
from .hecke import HeckeElement, gen, multiply, parse_hecke, rho, unit, zk
from .ncalg import (
    MODIFIED,
    RE,
    NCMatrix,
    NCPoly,
    generator_matrix,
    is_central,
    parse_ncpoly,
    re_relations,
    reduce,
    shift_map,
)
from .charmap import (
    CentralElement,
    cayley_hamilton_check,
    ch,
    classical_weight,
    elementary,
    power_sum,
    weight_system,
)
from .spectral import (
    MPoly,
    Partition,
    character,
    express_in_e_basis,
    hc_morphism,
    mu_char,
    muhat_char,
    powersum_hat_sym,
    powersum_sym,
    super_powersum,
)
from .repv import character_check, evaluate, rep_on_v

__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "BACKEND",
    "CentralElement",
    "CharacterMismatch",
    "DegreeBoundExceeded",
    "HeckeElement",
    "IndexOutOfRange",
    "InvolutiveUnsupported",
    "KAPPA",
    "MODIFIED",
    "MPoly",
    "NCMatrix",
    "NCPoly",
    "NotInSpan",
    "NotPolynomial",
    "NotScalar",
    "NotSkewInvertible",
    "ONE",
    "ParseError",
    "Partition",
    "PoleAtOne",
    "PoleAtPoint",
    "PositionOutOfRange",
    "Q",
    "RE",
    "ReaError",
    "RepresentationCheckFailed",
    "ScalarQ",
    "StrandMismatch",
    "Symmetry",
    "TensorOp",
    "VerificationFailed",
    "ZERO",
    "ZeroSymmetrizer",
    "__version__",
    "birank_degree",
    "cayley_hamilton_check",
    "ch",
    "character",
    "character_check",
    "classical_weight",
    "dj_symmetry",
    "elementary",
    "embed",
    "eval_at",
    "evaluate",
    "express_in_e_basis",
    "flip",
    "from_matrix",
    "gen",
    "generator_matrix",
    "hc_morphism",
    "hilbert_dims",
    "identity",
    "is_central",
    "limit_q1",
    "mu_char",
    "muhat_char",
    "multiply",
    "parse_hecke",
    "parse_ncpoly",
    "parse_scalar",
    "partial_trace",
    "power_sum",
    "powersum_hat_sym",
    "powersum_sym",
    "qint",
    "qpow",
    "r_partial_trace",
    "r_trace",
    "rank",
    "re_relations",
    "reduce",
    "rep_on_v",
    "rho",
    "shift_map",
    "skew_inverse",
    "skew_symmetrizer",
    "super_powersum",
    "superflip",
    "unit",
    "weight_system",
    "zk",
]
