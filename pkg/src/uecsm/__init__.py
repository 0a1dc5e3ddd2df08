"""uecsm: decide unitary equivalence to a complex symmetric matrix.

A matrix T is UECSM when U T U* is complex symmetric (equal to its own
transpose) for some unitary U.  This package decides the property for
n <= 4 through exact trace-word criteria, diagnoses it through
eigenvector angle tests, classifies the 4x4 nilpotent family in closed
form, constructs indefinite-unitary examples separating the tests, and
cross-validates everything with a brute-force search over the unitary
group.
"""

from .angletests import AngleReport, AngleSuite, angle_suite, det_criterion_3, lsat, sat, wat
from .constructors import (
    Signature,
    TripleProduct,
    conjugated_diagonal,
    generate_wat_not_sat,
    indefinite_gram_schmidt,
    indefinite_inner,
    random_su,
    sat_obstruction,
    su_membership,
)
from .errors import (
    ConsistencyError,
    CostGuard,
    DegenerateSpectrum,
    DimensionMismatch,
    ExhaustedRetries,
    IsotropicVector,
    NoConvergence,
    OrthogonalEigenvectors,
    ParseError,
    RepeatedDiagonal,
    SignatureMismatch,
    SingularMatrix,
    UecsmError,
    UnsupportedDimension,
)
from .matcore import (
    CMatrix,
    Word,
    adjoint,
    cmatrix,
    determinant,
    evaluate_word,
    frobenius_norm,
    identity,
    mul,
    reverse_word,
    trace,
    transpose,
    word_trace,
)
from .nilpotent4 import (
    Classification,
    ClosedForms,
    NilpotentParams,
    build_matrix,
    classify,
    psi_closed_forms,
    symmetrizing_witness,
)
from .oracle import (
    OracleResult,
    cayley_retract,
    cost_gradient,
    find_symmetrizer,
    symmetry_cost,
    symmetry_residual,
    verify_witness,
)
from .spectra import SpectralData, characteristic_polynomial, durand_kerner, eigensystem
from .tracetests import (
    DJOKOVIC_WORDS,
    PHI3_WORDS,
    PSI_DEGREES,
    TraceSignature,
    Verdict,
    djokovic_signature,
    phi3,
    psi7,
    trace_test_3,
    transpose_equivalence,
    uecsm_verdict,
    unitary_equivalence_4,
)

__version__ = "0.1.0"

__all__ = [
    "AngleReport",
    "AngleSuite",
    "CMatrix",
    "Classification",
    "ClosedForms",
    "ConsistencyError",
    "CostGuard",
    "DegenerateSpectrum",
    "DimensionMismatch",
    "DJOKOVIC_WORDS",
    "ExhaustedRetries",
    "IsotropicVector",
    "NilpotentParams",
    "NoConvergence",
    "OracleResult",
    "OrthogonalEigenvectors",
    "ParseError",
    "PHI3_WORDS",
    "PSI_DEGREES",
    "RepeatedDiagonal",
    "Signature",
    "SignatureMismatch",
    "SingularMatrix",
    "SpectralData",
    "TraceSignature",
    "TripleProduct",
    "UecsmError",
    "UnsupportedDimension",
    "Verdict",
    "Word",
    "adjoint",
    "angle_suite",
    "build_matrix",
    "cayley_retract",
    "characteristic_polynomial",
    "classify",
    "cmatrix",
    "conjugated_diagonal",
    "cost_gradient",
    "det_criterion_3",
    "determinant",
    "djokovic_signature",
    "durand_kerner",
    "eigensystem",
    "evaluate_word",
    "find_symmetrizer",
    "frobenius_norm",
    "generate_wat_not_sat",
    "identity",
    "indefinite_gram_schmidt",
    "indefinite_inner",
    "lsat",
    "mul",
    "phi3",
    "psi7",
    "psi_closed_forms",
    "random_su",
    "reverse_word",
    "sat",
    "sat_obstruction",
    "su_membership",
    "symmetrizing_witness",
    "symmetry_cost",
    "symmetry_residual",
    "trace",
    "trace_test_3",
    "transpose",
    "transpose_equivalence",
    "uecsm_verdict",
    "unitary_equivalence_4",
    "verify_witness",
    "wat",
    "word_trace",
]
