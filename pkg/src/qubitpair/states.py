"""Two-qubit density matrices and their parametrizations.

Basis convention: computational order |00>, |01>, |10>, |11> with qubit 1
as the left tensor factor.  Pauli convention: standard sigma_x, sigma_y,
sigma_z with sigma_y = [[0, -i], [i, 0]]; this fixes all signs of the
Bloch decomposition

    rho = (1/4) (I (x) I + s . (sigma (x) I) + (I (x) sigma) . r
                 + sum_ij t_ij sigma_i (x) sigma_j).

"Symmetric" throughout the library means supported on the triplet
(exchange-symmetric) subspace; a SWAP-commuting state with singlet
population is reported non-symmetric, because the unit-trace constraint
on T holds only for triplet support.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import qmat
from .errors import InvalidDensityMatrix, NotPositive, NotXForm
from .tolerances import HERMITICITY, PSD_FLOOR, SYMMETRY, TRACE, UNITARITY, XFORM_PATTERN

# Pauli tensor basis, built once.
_KRON_S_I = tuple(qmat.kron(p, qmat.IDENTITY_2) for p in qmat.PAULIS)
_KRON_I_S = tuple(qmat.kron(qmat.IDENTITY_2, p) for p in qmat.PAULIS)
_KRON_S_S = tuple(
    tuple(qmat.kron(pi, pj) for pj in qmat.PAULIS) for pi in qmat.PAULIS
)
_IDENTITY_4 = np.eye(4, dtype=complex)

SWAP = np.eye(4)[[0, 2, 1, 3]].astype(complex)
SWAP.setflags(write=False)

#: Singlet vector (|01> - |10>) / sqrt(2); its orthogonal complement is the
#: triplet subspace.
SINGLET = np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) / np.sqrt(2.0)
SINGLET.setflags(write=False)

TRIPLET_BASIS = np.array(
    [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0 / np.sqrt(2.0), 1.0 / np.sqrt(2.0), 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ],
    dtype=complex,
).T  # columns |00>, (|01>+|10>)/sqrt2, |11>
TRIPLET_BASIS.setflags(write=False)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class BlochForm:
    """Average spins ``s``, ``r`` and correlation matrix ``t`` of a two-qubit state."""

    s: np.ndarray
    r: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "s", _frozen(np.asarray(self.s, dtype=float)))
        object.__setattr__(self, "r", _frozen(np.asarray(self.r, dtype=float)))
        object.__setattr__(self, "t", _frozen(np.asarray(self.t, dtype=float)))
        if self.s.shape != (3,) or self.r.shape != (3,) or self.t.shape != (3, 3):
            raise ValueError("BlochForm needs s, r of shape (3,) and t of shape (3, 3)")
        if not (np.all(np.isfinite(self.s)) and np.all(np.isfinite(self.r))
                and np.all(np.isfinite(self.t))):
            raise ValueError("BlochForm entries must be finite")
        # Pauli expectations of any state are bounded by 1 (necessary, not
        # sufficient, for physicality; compose() checks the rest).
        bound = 1.0 + 1e-9
        if (np.max(np.abs(self.s)) > bound or np.max(np.abs(self.r)) > bound
                or np.max(np.abs(self.t)) > bound):
            raise ValueError("BlochForm components must lie in [-1, 1]")

    def is_symmetric_form(self, tol: float = 1e-8) -> bool:
        """Exchange constraints: r = s, T = T^T, tr T = 1."""
        return (
            float(np.max(np.abs(self.r - self.s))) <= tol
            and float(np.max(np.abs(self.t - self.t.T))) <= tol
            and abs(float(np.trace(self.t)) - 1.0) <= tol
        )


@dataclass(frozen=True)
class XForm:
    """Parameters of the special symmetric pattern.

    The density matrix reads ``[[a, 0, 0, b], [0, c, c, 0], [0, c, c, 0],
    [b*, 0, 0, d]]`` with a + d + 2c = 1; positivity amounts to
    a, c, d >= 0 and a d >= |b|^2.
    """

    a: float
    b: complex
    c: float
    d: float

    def __post_init__(self):
        a, c, d = self.a, self.c, self.d
        if not all(np.isfinite([a, c, d])) or not np.isfinite(complex(self.b)):
            raise ValueError("XForm parameters must be finite")
        if min(a, c, d) < -1e-12:
            raise NotPositive(f"negative diagonal parameter: a={a:.3e} c={c:.3e} d={d:.3e}")
        if abs(a + d + 2.0 * c - 1.0) > TRACE:
            raise InvalidDensityMatrix(
                f"trace constraint a + d + 2c = 1 violated by {a + d + 2 * c - 1:.3e}"
            )
        if a * d < abs(self.b) ** 2 - 1e-10:
            raise NotPositive(
                f"corner block not PSD: a*d = {a * d:.6e} < |b|^2 = {abs(self.b) ** 2:.6e}"
            )

    @classmethod
    def from_abc(cls, a: float, b: complex, c: float) -> "XForm":
        """Build with d fixed by the unit-trace constraint."""
        return cls(a=a, b=b, c=c, d=1.0 - a - 2.0 * c)

    def to_matrix(self) -> np.ndarray:
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = self.a
        rho[0, 3] = self.b
        rho[3, 0] = np.conj(self.b)
        rho[1, 1] = rho[1, 2] = rho[2, 1] = rho[2, 2] = self.c
        rho[3, 3] = self.d
        return rho


def assert_density_matrix(
    rho: np.ndarray,
    herm_tol: float = HERMITICITY,
    trace_tol: float = TRACE,
    psd_floor: float = PSD_FLOOR,
) -> np.ndarray:
    """Validate Hermiticity, unit trace and positivity; return as complex array.

    Raises InvalidDensityMatrix (or NotPositive) with the violated
    invariant named in the message.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidDensityMatrix(f"expected shape (4, 4), got {rho.shape}")
    if not np.all(np.isfinite(rho)):
        raise InvalidDensityMatrix("matrix contains non-finite entries")
    defect = qmat.hermiticity_defect(rho)
    if defect > herm_tol:
        raise InvalidDensityMatrix(f"not Hermitian: defect {defect:.3e}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > trace_tol:
        raise InvalidDensityMatrix(f"trace invariant violated: trace = {tr.real:.12g}")
    min_eig = float(qmat.hermitian_eigenvalues(rho, herm_tol)[0])
    if min_eig < psd_floor:
        raise NotPositive(f"not positive semidefinite: min eigenvalue {min_eig:.3e}")
    return rho


def bloch_decompose(rho: np.ndarray) -> BlochForm:
    """Decompose a state into (s, r, T) via Pauli traces.

    All fifteen traces must be real within 1e-12 (imaginary residue is
    discarded after the check).  Hermiticity and trace are gated here;
    use :func:`assert_density_matrix` for the full (PSD) validation.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidDensityMatrix(f"expected shape (4, 4), got {rho.shape}")
    defect = qmat.hermiticity_defect(rho)
    if defect > HERMITICITY:
        raise InvalidDensityMatrix(f"not Hermitian: defect {defect:.3e}")
    if abs(complex(np.trace(rho)) - 1.0) > TRACE:
        raise InvalidDensityMatrix("trace invariant violated")

    def real_trace(op: np.ndarray) -> float:
        val = complex(np.einsum("ij,ji->", rho, op))
        if abs(val.imag) > 1e-12:
            raise InvalidDensityMatrix(
                f"Pauli trace has imaginary residue {val.imag:.3e}"
            )
        return val.real

    s = np.array([real_trace(op) for op in _KRON_S_I])
    r = np.array([real_trace(op) for op in _KRON_I_S])
    t = np.array([[real_trace(_KRON_S_S[i][j]) for j in range(3)] for i in range(3)])
    return BlochForm(s=s, r=r, t=t)


def bloch_compose(form: BlochForm) -> np.ndarray:
    """Rebuild the density matrix from (s, r, T); inverse of bloch_decompose.

    Hermitian and unit-trace by construction.  Raises NotPositive when the
    parameters do not describe a physical state (min eigenvalue below the
    PSD floor).
    """
    rho = _IDENTITY_4.copy()
    for i in range(3):
        rho += form.s[i] * _KRON_S_I[i]
        rho += form.r[i] * _KRON_I_S[i]
        for j in range(3):
            rho += form.t[i, j] * _KRON_S_S[i][j]
    rho *= 0.25
    min_eig = float(qmat.hermitian_eigenvalues(rho)[0])
    if min_eig < PSD_FLOOR:
        raise NotPositive(
            f"Bloch parameters are unphysical: min eigenvalue {min_eig:.3e}"
        )
    return rho


def is_symmetric(rho: np.ndarray, tol: float = SYMMETRY) -> bool:
    """True iff the state is supported on the triplet subspace.

    Checks the singlet population and every singlet-triplet coherence
    against ``tol``; equivalent to SWAP-invariance plus vanishing singlet
    weight.
    """
    rho = np.asarray(rho, dtype=complex)
    leak = rho @ SINGLET
    population = float(np.real(np.vdot(SINGLET, leak)))
    coherence = float(np.max(np.abs(TRIPLET_BASIS.conj().T @ leak)))
    return population <= tol and coherence <= tol


def xform_extract(rho: np.ndarray, tol: float = XFORM_PATTERN) -> XForm:
    """Read off the special-pattern parameters (a, b, c, d).

    Raises NotXForm with the largest off-pattern magnitude when any entry
    outside the pattern, or the spread within the middle block, exceeds
    ``tol``.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidDensityMatrix(f"expected shape (4, 4), got {rho.shape}")
    off = [
        rho[0, 1], rho[0, 2], rho[1, 0], rho[2, 0],
        rho[1, 3], rho[2, 3], rho[3, 1], rho[3, 2],
        rho[1, 1] - rho[1, 2], rho[1, 1] - rho[2, 2], rho[1, 1] - rho[2, 1],
    ]
    worst = float(np.max(np.abs(off)))
    if worst > tol:
        raise NotXForm(f"largest off-pattern magnitude {worst:.3e} exceeds tol {tol:.1e}")
    return XForm(
        a=float(np.real(rho[0, 0])),
        b=complex(rho[0, 3]),
        c=float(np.real(rho[1, 1])),
        d=float(np.real(rho[3, 3])),
    )


def apply_local_unitary(
    rho: np.ndarray, u1: np.ndarray, u2: np.ndarray, tol: float = UNITARITY
) -> np.ndarray:
    """Conjugate by U1 (x) U2.

    Trace-preserving; the Bloch parameters transform as s' = O(U1) s,
    r' = O(U2) r and T' = O(U1) T O(U2)^T for special-unitary factors.
    """
    u1 = qmat.require_unitary(u1, tol, name="u1")
    u2 = qmat.require_unitary(u2, tol, name="u2")
    u = qmat.kron(u1, u2)
    return u @ np.asarray(rho, dtype=complex) @ u.conj().T
