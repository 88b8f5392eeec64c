"""Separability analysis of symmetric two-qubit states.

Two routes are kept deliberately independent: the partial-transpose
spectrum (exact ground truth for two qubits) and sign criteria on the
invariants I12, I14 and I12 - I4^2, which are non-negative for every
separable symmetric state with non-vanishing I4.  For states with the
special four-parameter pattern the two routes are provably equivalent,
and this module exposes that equivalence as a checkable predicate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import qmat
from .errors import (
    DegenerateHypothesis,
    I4Zero,
    InconsistentClassification,
    NotSymmetricState,
)
from .invariants import SymmetricSix, symmetric_six, xform_invariants
from .states import (
    XForm,
    assert_density_matrix,
    bloch_decompose,
    is_symmetric,
)
from .tolerances import SIGN_ZERO_BAND

CRITERION_I12 = "I12_negative"
CRITERION_I14 = "I14_negative"
CRITERION_I12_MINUS_I4SQ = "I12_minus_I4sq_negative"

VERDICT_SEPARABLE = "Separable"
VERDICT_ENTANGLED = "Entangled"


@dataclass(frozen=True)
class PptResult:
    min_eig: float
    separable: bool


@dataclass(frozen=True)
class Classification:
    """Verdict with the invariant criteria that fired and the PT evidence."""

    verdict: str
    criteria_fired: frozenset
    ppt_min_eigenvalue: float
    i4_zero_fallback_used: bool


@dataclass(frozen=True)
class SeparableEnsemble:
    """Convex mixture of identical product states: weights and Bloch vectors."""

    weights: np.ndarray
    bloch_vectors: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        v = np.asarray(self.bloch_vectors, dtype=float)
        if w.ndim != 1 or v.shape != (w.size, 3):
            raise ValueError("need weights (n,) and bloch_vectors (n, 3)")
        if np.any(w < 0.0) or abs(float(np.sum(w)) - 1.0) > 1e-12:
            raise ValueError("weights must be non-negative and sum to 1")
        norms = np.linalg.norm(v, axis=1)
        if np.any(norms > 1.0 + 1e-12):
            raise ValueError("Bloch vectors must lie in the unit ball")
        w.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "bloch_vectors", v)

    def to_state(self) -> np.ndarray:
        """Assemble sum_w p_w rho_w (x) rho_w; separable and symmetric by construction."""
        rho = np.zeros((4, 4), dtype=complex)
        for p, vec in zip(self.weights, self.bloch_vectors):
            single = 0.5 * (
                qmat.IDENTITY_2
                + vec[0] * qmat.SIGMA_X
                + vec[1] * qmat.SIGMA_Y
                + vec[2] * qmat.SIGMA_Z
            )
            rho += p * qmat.kron(single, single)
        return rho


def partial_transpose(rho: np.ndarray) -> np.ndarray:
    """Transpose the second qubit's indices: rho[ij, kl] -> rho[il, kj]."""
    rho = np.asarray(rho, dtype=complex)
    return rho.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)


def ppt_check(rho: np.ndarray, tol: float = SIGN_ZERO_BAND) -> PptResult:
    """Positivity of the partial transpose; exact separability test for two qubits."""
    min_eig = float(qmat.hermitian_eigenvalues(partial_transpose(rho))[0])
    return PptResult(min_eig=min_eig, separable=min_eig >= -tol)


def xform_pt_eigenvalues(x: XForm) -> np.ndarray:
    """Closed-form PT spectrum of a special-pattern state.

    lambda_{1,2} = ((a + d) -/+ sqrt((a - d)^2 + 4 c^2)) / 2 and
    lambda_{3,4} = c -/+ |b|; only lambda_1 and lambda_3 can go negative.
    Returned in that order; as a multiset it equals the numeric PT
    spectrum.
    """
    root = np.sqrt((x.a - x.d) ** 2 + 4.0 * x.c * x.c)
    ab = abs(x.b)
    return np.array(
        [
            0.5 * ((x.a + x.d) - root),
            0.5 * ((x.a + x.d) + root),
            x.c - ab,
            x.c + ab,
        ]
    )


def invariant_criteria(six: SymmetricSix, tol: float = SIGN_ZERO_BAND) -> frozenset:
    """Entanglement witnesses from invariant signs.

    Separable symmetric states with I4 > 0 have I12 >= 0, I14 >= 0 and
    I12 - I4^2 >= 0, so each strict negativity (below the zero band) is a
    sufficient witness of entanglement.  An empty set makes no claim.

    Raises I4Zero when |I4| <= tol; the criteria are then uninformative
    and the caller must rely on the PT spectrum.
    """
    if abs(six.i4) <= tol:
        raise I4Zero(f"I4 = {six.i4:.3e} is inside the zero band {tol:.1e}")
    fired = set()
    if six.i12 < -tol:
        fired.add(CRITERION_I12)
    if six.i14 < -tol:
        fired.add(CRITERION_I14)
    if six.i12 - six.i4 ** 2 < -tol:
        fired.add(CRITERION_I12_MINUS_I4SQ)
    return frozenset(fired)


def classify(rho: np.ndarray, tol: float = SIGN_ZERO_BAND) -> Classification:
    """Full verdict for a symmetric state: PT ground truth plus fired criteria.

    Refuses non-symmetric inputs (the invariant criteria are defined only
    on the triplet subspace).  If a criterion fires while the PT spectrum
    is strictly positive beyond the tolerance band, the contradiction is
    surfaced as InconsistentClassification rather than silently resolved.
    """
    rho = assert_density_matrix(rho)
    if not is_symmetric(rho):
        raise NotSymmetricState("state has singlet support; classify requires triplet support")
    ppt = ppt_check(rho, tol)
    six = symmetric_six(bloch_decompose(rho))
    fallback = False
    try:
        fired = invariant_criteria(six, tol)
    except I4Zero:
        fired = frozenset()
        fallback = True
    verdict = VERDICT_SEPARABLE if ppt.separable else VERDICT_ENTANGLED
    if fired and ppt.separable:
        raise InconsistentClassification(
            f"criteria {sorted(fired)} fired but PT min eigenvalue is "
            f"{ppt.min_eig:.3e}; state sits inside the tolerance band"
        )
    return Classification(
        verdict=verdict,
        criteria_fired=fired,
        ppt_min_eigenvalue=ppt.min_eig,
        i4_zero_fallback_used=fallback,
    )


def sample_separable_symmetric(
    n_terms: int, rng: np.random.Generator
) -> tuple[np.ndarray, SeparableEnsemble]:
    """Draw a random separable symmetric state as an explicit convex mixture.

    Weights come from a flat simplex (normalized exponentials); Bloch
    vectors are uniform in the unit ball (uniform direction, cube-root
    radius).  The returned state satisfies s = sum_w p_w s_w and
    t_ij = sum_w p_w s_wi s_wj by construction.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    w = rng.exponential(size=n_terms)
    w /= np.sum(w)
    directions = rng.normal(size=(n_terms, 3))
    directions /= np.linalg.norm(directions, axis=1)[:, None]
    radii = rng.uniform(size=n_terms) ** (1.0 / 3.0)
    ensemble = SeparableEnsemble(weights=w, bloch_vectors=directions * radii[:, None])
    return ensemble.to_state(), ensemble


def xform_equivalence_check(x: XForm, tol: float = SIGN_ZERO_BAND) -> bool:
    """Sign equivalence between the PT spectrum and the invariant criteria.

    For the special pattern, I12 - I4^2 = (a-d)^2 ((1-4c) - (a-d)^2) and
    I14 = 8 (a-d)^2 (c+|b|) lambda_3, so each criterion sign must agree
    with the matching eigenvalue sign.  The strictly positive prefactors
    are divided out before the zero-band comparison so both sides are
    compared on the same scale.

    Raises DegenerateHypothesis when (a-d)^2 <= tol: both invariants then
    vanish identically and the comparison carries no information.  A
    vanishing c + |b| is harmless (lambda_3 is inside the band too).
    """
    ad_sq = (x.a - x.d) ** 2
    if ad_sq <= tol:
        raise DegenerateHypothesis(f"(a - d)^2 = {ad_sq:.3e} is inside the zero band")
    six = xform_invariants(x)

    def band_sign(v: float) -> int:
        if v > tol:
            return 1
        if v < -tol:
            return -1
        return 0

    lhs12 = (six.i12 - six.i4 ** 2) / ad_sq
    rhs12 = (1.0 - 4.0 * x.c) - ad_sq
    ok12 = band_sign(lhs12) == band_sign(rhs12)

    c_plus_b = x.c + abs(x.b)
    if c_plus_b <= tol:
        # Both I14 and lambda_3 are confined to the zero band.
        ok14 = True
    else:
        lhs14 = six.i14 / (8.0 * ad_sq * c_plus_b)
        lam3 = x.c - abs(x.b)
        ok14 = band_sign(lhs14) == band_sign(lam3)
    return ok12 and ok14
