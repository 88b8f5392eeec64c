"""Minimal dense complex linear algebra for two-qubit state analysis.

Everything here is sized for 2x2 .. 4x4 matrices: Pauli basis, Kronecker
products, Hermitian eigenvalues (closed form for real symmetric 3x3,
cyclic Jacobi otherwise), Haar-random SU(2) and the SU(2) -> SO(3)
covering map.  All functions are pure; random sampling takes a
caller-owned ``numpy.random.Generator``.
"""

from __future__ import annotations

import numpy as np

from .errors import NotHermitian, NotSpecialUnitary, NotUnitary
from .tolerances import HERMITICITY, UNITARITY

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)
IDENTITY_2 = np.eye(2, dtype=complex)

for _m in PAULIS + (IDENTITY_2,):
    _m.setflags(write=False)

_MAX_JACOBI_SWEEPS = 60


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; block (i, j) of the result equals a[i, j] * b."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entrywise deviation of ``m`` from its conjugate transpose."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T)))


def is_unitary(u: np.ndarray, tol: float = UNITARITY) -> bool:
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return float(np.max(np.abs(u @ u.conj().T - np.eye(len(u))))) <= tol


def hermitian_eigenvalues(m: np.ndarray, tol: float = HERMITICITY) -> np.ndarray:
    """Eigenvalues of a small Hermitian matrix, sorted ascending.

    Parameters
    ----------
    m : array_like
        Square Hermitian matrix of size at most 4x4.  Real symmetric 3x3
        input is solved in closed form (trigonometric Cardano); every
        other size goes through a cyclic complex Jacobi iteration.
    tol : float
        Allowed Hermiticity defect.

    Returns
    -------
    numpy.ndarray
        Real eigenvalues in ascending order; their sum reproduces the
        trace to well below the advertised 1e-10.

    Raises
    ------
    NotHermitian
        If ``max |m - m^dag|`` exceeds ``tol``.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    n = m.shape[0]
    if n > 4:
        raise ValueError("only sizes up to 4x4 are supported")
    defect = hermiticity_defect(m)
    if defect > tol:
        raise NotHermitian(f"Hermiticity defect {defect:.3e} exceeds tol {tol:.1e}")
    if n == 1:
        return np.array([float(np.real(m[0, 0]))])
    if n == 3 and float(np.max(np.abs(np.imag(m)))) <= tol:
        return _eigvals_sym3(np.real(m).astype(float))
    return _eigvals_jacobi(m.astype(complex))


def _eigvals_sym3(a: np.ndarray) -> np.ndarray:
    """Closed-form eigenvalues of a real symmetric 3x3 matrix."""
    a = 0.5 * (a + a.T)
    p1 = a[0, 1] ** 2 + a[0, 2] ** 2 + a[1, 2] ** 2
    if p1 == 0.0:
        return np.sort(np.diag(a).copy())
    q = np.trace(a) / 3.0
    p2 = (a[0, 0] - q) ** 2 + (a[1, 1] - q) ** 2 + (a[2, 2] - q) ** 2 + 2.0 * p1
    p = np.sqrt(p2 / 6.0)
    b = (a - q * np.eye(3)) / p
    r = _det3(b) / 2.0
    r = min(1.0, max(-1.0, r))
    phi = np.arccos(r) / 3.0
    e1 = q + 2.0 * p * np.cos(phi)
    e3 = q + 2.0 * p * np.cos(phi + 2.0 * np.pi / 3.0)
    e2 = 3.0 * q - e1 - e3
    return np.sort(np.array([e1, e2, e3]))


def _det3(a: np.ndarray) -> float:
    return float(
        a[0, 0] * (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
        - a[0, 1] * (a[1, 0] * a[2, 2] - a[1, 2] * a[2, 0])
        + a[0, 2] * (a[1, 0] * a[2, 1] - a[1, 1] * a[2, 0])
    )


def _eigvals_jacobi(a: np.ndarray) -> np.ndarray:
    """Cyclic Jacobi iteration for Hermitian matrices up to 4x4."""
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    scale = max(1.0, float(np.max(np.abs(a))))
    stop = 1e-14 * scale
    for _ in range(_MAX_JACOBI_SWEEPS):
        off = np.sqrt(np.sum(np.abs(a - np.diag(np.diag(a))) ** 2))
        if off <= stop:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= stop / (4 * n):
                    continue
                # Unitary 2x2 rotation annihilating a[p, q]; |theta| <= pi/4.
                tau = (a[q, q].real - a[p, p].real) / (2.0 * abs(apq))
                sgn = 1.0 if tau >= 0.0 else -1.0
                t = sgn / (abs(tau) + np.sqrt(tau * tau + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                phase = apq / abs(apq)
                rot = np.eye(n, dtype=complex)
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = s * phase
                rot[q, p] = -s * np.conj(phase)
                a = rot.conj().T @ a @ rot
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    return np.sort(np.real(np.diag(a)))


def su2_to_so3(u: np.ndarray, tol: float = UNITARITY) -> np.ndarray:
    """Rotation matrix covering a special unitary: O_ij = Tr(sigma_i U sigma_j U^dag) / 2.

    The returned ``O`` is orthogonal with det +1 and satisfies
    ``bloch(U rho U^dag) = O @ bloch(rho)`` for every single-qubit state.
    ``O(U) = O(-U)``, so any special-unitary representative is accepted.

    Raises
    ------
    NotSpecialUnitary
        If ``u`` is not unitary with unit determinant within ``tol``.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {u.shape}")
    if not is_unitary(u, tol):
        raise NotSpecialUnitary("matrix is not unitary")
    det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
    if abs(det - 1.0) > tol:
        raise NotSpecialUnitary(f"determinant {det:.12g} != 1")
    udag = u.conj().T
    o = np.empty((3, 3), dtype=float)
    for i, si in enumerate(PAULIS):
        for j, sj in enumerate(PAULIS):
            o[i, j] = 0.5 * np.real(np.trace(si @ u @ sj @ udag))
    return o


def haar_su2(rng: np.random.Generator) -> np.ndarray:
    """Haar-random SU(2) element via a uniform unit quaternion.

    A standard-normal 4-vector normalized to the unit 3-sphere is Haar
    uniform on SU(2); the map below sends the quaternion (a, b, c, d) to
    ``[[a+ib, c+id], [-c+id, a-ib]]``, whose determinant is exactly
    a^2+b^2+c^2+d^2 = 1.  Deterministic for a given generator state.
    """
    v = rng.normal(size=4)
    v = v / np.linalg.norm(v)
    a, b, c, d = v
    return np.array(
        [[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]], dtype=complex
    )


def require_unitary(u: np.ndarray, tol: float = UNITARITY, name: str = "matrix") -> np.ndarray:
    """Return ``u`` as a complex array, raising NotUnitary on gate failure."""
    u = np.asarray(u, dtype=complex)
    if not is_unitary(u, tol):
        raise NotUnitary(f"{name} is not unitary within tol {tol:.1e}")
    return u
