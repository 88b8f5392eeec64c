"""Local-unitary entanglement invariants of two-qubit states.

Computes the complete set of 18 polynomial invariants, the six-invariant
reduction for exchange-symmetric states, sign criteria for
non-separability cross-checked against the partial-transpose spectrum,
and closed-form reduced pair states for three multi-qubit families
(collective Dicke states, one-axis twisting, nearest-neighbour chains).
"""

from .errors import (
    DegenerateHypothesis,
    I4Zero,
    InconsistentClassification,
    InvalidDensityMatrix,
    InvalidDicke,
    NoRealSpectrum,
    NotHermitian,
    NotPositive,
    NotSpecialUnitary,
    NotSymmetricState,
    NotUnitary,
    NotXForm,
    QubitPairError,
    StateFileError,
    TooLarge,
)
from .invariants import (
    InvariantSet,
    SymmetricSix,
    i10_diagonal_frame,
    makhlin_all,
    symmetric_six,
    t_eigenvalues_from_invariants,
    xform_invariants,
    xform_relation_check,
)
from .models import (
    DickeInvariants,
    FamilyInvariants,
    ModelSpec,
    brute_force_pair_oracle,
    dicke_invariants,
    dicke_pair,
    ising_invariants,
    ising_pair,
    oat_invariants,
    oat_pair,
)
from .qmat import haar_su2, hermitian_eigenvalues, kron, su2_to_so3
from .sampling import (
    random_density_matrix,
    random_symmetric_density_matrix,
    random_xform,
)
from .selftest import SelfTestReport, format_report, run_selftest
from .separability import (
    CRITERION_I12,
    CRITERION_I12_MINUS_I4SQ,
    CRITERION_I14,
    Classification,
    PptResult,
    SeparableEnsemble,
    classify,
    invariant_criteria,
    partial_transpose,
    ppt_check,
    sample_separable_symmetric,
    xform_equivalence_check,
    xform_pt_eigenvalues,
)
from .states import (
    BlochForm,
    XForm,
    apply_local_unitary,
    assert_density_matrix,
    bloch_compose,
    bloch_decompose,
    is_symmetric,
    xform_extract,
)
from .stateio import read_state_file, write_state_file

__version__ = "0.1.0"

__all__ = [
    "BlochForm",
    "Classification",
    "CRITERION_I12",
    "CRITERION_I12_MINUS_I4SQ",
    "CRITERION_I14",
    "DegenerateHypothesis",
    "DickeInvariants",
    "FamilyInvariants",
    "I4Zero",
    "InconsistentClassification",
    "InvalidDensityMatrix",
    "InvalidDicke",
    "InvariantSet",
    "ModelSpec",
    "NoRealSpectrum",
    "NotHermitian",
    "NotPositive",
    "NotSpecialUnitary",
    "NotSymmetricState",
    "NotUnitary",
    "NotXForm",
    "PptResult",
    "QubitPairError",
    "SelfTestReport",
    "SeparableEnsemble",
    "StateFileError",
    "SymmetricSix",
    "TooLarge",
    "XForm",
    "apply_local_unitary",
    "assert_density_matrix",
    "bloch_compose",
    "bloch_decompose",
    "brute_force_pair_oracle",
    "classify",
    "dicke_invariants",
    "dicke_pair",
    "format_report",
    "haar_su2",
    "hermitian_eigenvalues",
    "i10_diagonal_frame",
    "invariant_criteria",
    "is_symmetric",
    "ising_invariants",
    "ising_pair",
    "kron",
    "makhlin_all",
    "oat_invariants",
    "oat_pair",
    "partial_transpose",
    "ppt_check",
    "random_density_matrix",
    "random_symmetric_density_matrix",
    "random_xform",
    "read_state_file",
    "run_selftest",
    "sample_separable_symmetric",
    "su2_to_so3",
    "symmetric_six",
    "t_eigenvalues_from_invariants",
    "write_state_file",
    "xform_equivalence_check",
    "xform_extract",
    "xform_invariants",
    "xform_pt_eigenvalues",
    "xform_relation_check",
]
