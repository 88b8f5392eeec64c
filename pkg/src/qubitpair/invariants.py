"""The 18 local-unitary polynomial invariants of a two-qubit state.

The complete set is Makhlin's: polynomials in (s, r, T) unchanged under
independent single-qubit rotations.  Exchange-symmetric states need only
the subset (I1, I2, I4, I10, I12, I14); states with the special
four-parameter pattern admit closed forms for that subset.

Epsilon-tensor contractions are expanded as explicit loops over the six
non-zero permutations (not cross-product shortcuts) so each expression
can be audited term by term.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from .errors import I4Zero, NoRealSpectrum, NotSymmetricState
from .states import BlochForm, XForm
from .tolerances import SIGN_ZERO_BAND, SYMMETRIC_CONSTRAINTS, matches

#: (i, j, k, sign) for every non-zero entry of the Levi-Civita symbol.
LEVI_CIVITA = (
    (0, 1, 2, 1.0),
    (1, 2, 0, 1.0),
    (2, 0, 1, 1.0),
    (0, 2, 1, -1.0),
    (2, 1, 0, -1.0),
    (1, 0, 2, -1.0),
)


@dataclass(frozen=True)
class InvariantSet:
    """All 18 invariants, indexed as in the defining list."""

    i1: float
    i2: float
    i3: float
    i4: float
    i5: float
    i6: float
    i7: float
    i8: float
    i9: float
    i10: float
    i11: float
    i12: float
    i13: float
    i14: float
    i15: float
    i16: float
    i17: float
    i18: float

    def as_array(self) -> np.ndarray:
        return np.array([getattr(self, f.name) for f in fields(self)])


@dataclass(frozen=True)
class SymmetricSix:
    """The subset characterizing exchange-symmetric states."""

    i1: float
    i2: float
    i4: float
    i10: float
    i12: float
    i14: float

    @classmethod
    def from_full(cls, inv: "InvariantSet") -> "SymmetricSix":
        """Plain projection of the full set, without the exchange-constraint gate.

        Useful for SWAP-invariant states carrying singlet weight (e.g.
        separable mixtures with mixed single-qubit factors), where the
        sign criteria still apply but tr T = 1 does not hold.
        """
        return cls(i1=inv.i1, i2=inv.i2, i4=inv.i4, i10=inv.i10, i12=inv.i12, i14=inv.i14)

    def as_array(self) -> np.ndarray:
        return np.array([self.i1, self.i2, self.i4, self.i10, self.i12, self.i14])


def _eps_triple(u: np.ndarray, v: np.ndarray, w: np.ndarray) -> float:
    """eps_ijk u_i v_j w_k over the six non-zero permutations."""
    total = 0.0
    for i, j, k, sign in LEVI_CIVITA:
        total += sign * u[i] * v[j] * w[k]
    return total


def _det3(t: np.ndarray) -> float:
    return float(
        t[0, 0] * (t[1, 1] * t[2, 2] - t[1, 2] * t[2, 1])
        - t[0, 1] * (t[1, 0] * t[2, 2] - t[1, 2] * t[2, 0])
        + t[0, 2] * (t[1, 0] * t[2, 1] - t[1, 1] * t[2, 0])
    )


def makhlin_all(form: BlochForm) -> InvariantSet:
    """Evaluate all 18 invariants of a Bloch form.

    The s-side quadratic is T T^T and the r-side quadratic is T^T T,
    matching how the two sides transform (s with O1, r with O2,
    T -> O1 T O2^T); every entry is then invariant under local unitaries
    to relative 1e-9 (absolute floor 1e-12).
    """
    s, r, t = form.s, form.r, form.t
    tt = t @ t.T          # transforms with O1 on both sides
    ttr = t.T @ t         # transforms with O2 on both sides
    tt_s = tt @ s
    tt2_s = tt @ tt_s
    ttr_r = ttr @ r
    ttr2_r = ttr @ ttr_r
    t_r = t @ r
    tT_s = t.T @ s

    i14 = 0.0
    for i, j, k, sign1 in LEVI_CIVITA:
        for l, m, n, sign2 in LEVI_CIVITA:
            i14 += sign1 * sign2 * s[i] * r[l] * t[j, m] * t[k, n]

    return InvariantSet(
        i1=_det3(t),
        i2=float(np.sum(t * t)),
        i3=float(np.sum(ttr * ttr)),
        i4=float(s @ s),
        i5=float(s @ tt_s),
        i6=float(s @ tt2_s),
        i7=float(r @ r),
        i8=float(r @ ttr_r),
        i9=float(r @ ttr2_r),
        i10=_eps_triple(s, tt_s, tt2_s),
        i11=_eps_triple(r, ttr_r, ttr2_r),
        i12=float(s @ t_r),
        i13=float(s @ (tt @ t_r)),
        i14=i14,
        i15=_eps_triple(s, tt_s, t_r),
        i16=_eps_triple(tT_s, r, ttr_r),
        i17=_eps_triple(tT_s, ttr @ tT_s, r),
        i18=_eps_triple(s, t_r, tt @ t_r),
    )


def symmetric_six(form: BlochForm, tol: float = SYMMETRIC_CONSTRAINTS) -> SymmetricSix:
    """Project the full set onto (I1, I2, I4, I10, I12, I14).

    Requires the exchange constraints (r = s, T = T^T, tr T = 1) within
    ``tol``; the returned entries agree with :func:`makhlin_all` exactly.
    """
    if not form.is_symmetric_form(tol):
        raise NotSymmetricState(
            "Bloch form violates the exchange constraints (r = s, T = T^T, tr T = 1)"
        )
    return SymmetricSix.from_full(makhlin_all(form))


def i10_diagonal_frame(t_eigs, s_diag) -> float:
    """I10 in the frame where T is diagonal.

    With T = diag(t1, t2, t3) and spin components (s1, s2, s3) in that
    frame,

        I10 = (t1^4 (t3^2 - t2^2) + t2^4 (t1^2 - t3^2)
               + t3^4 (t2^2 - t1^2)) s1 s2 s3,

    which fixes the relative signs of the spin components; it vanishes
    whenever a component is zero or the spectrum of T is degenerate.
    """
    t1, t2, t3 = (float(v) for v in t_eigs)
    s1, s2, s3 = (float(v) for v in s_diag)
    bracket = (
        t1 ** 4 * (t3 ** 2 - t2 ** 2)
        + t2 ** 4 * (t1 ** 2 - t3 ** 2)
        + t3 ** 4 * (t2 ** 2 - t1 ** 2)
    )
    return bracket * s1 * s2 * s3


def xform_invariants(x: XForm) -> SymmetricSix:
    """Closed forms of the symmetric subset for the special pattern.

    I1  = (4c^2 - 4|b|^2)(1 - 4c)
    I2  = (2c + 2|b|)^2 + (2c - 2|b|)^2 + (1 - 4c)^2
    I4  = (a - d)^2
    I10 = 0
    I12 = (a - d)^2 (1 - 4c)
    I14 = 8 (a - d)^2 (c^2 - |b|^2)
    """
    ab = abs(x.b)
    c = x.c
    ad = x.a - x.d
    return SymmetricSix(
        i1=(4.0 * c * c - 4.0 * ab * ab) * (1.0 - 4.0 * c),
        i2=(2.0 * c + 2.0 * ab) ** 2 + (2.0 * c - 2.0 * ab) ** 2 + (1.0 - 4.0 * c) ** 2,
        i4=ad * ad,
        i10=0.0,
        i12=ad * ad * (1.0 - 4.0 * c),
        i14=8.0 * ad * ad * (c * c - ab * ab),
    )


def xform_relation_check(six: SymmetricSix, tol: float = SIGN_ZERO_BAND) -> bool:
    """Verify I1 = I14 I12 / (2 I4^2) and I2 = ((I4-I12)^2 - I4 I14 + I12^2) / I4^2.

    These hold identically on special-pattern states with non-vanishing
    I4.  Raises I4Zero when |I4| <= tol; callers then fall back to the
    (I1, I2) pair.
    """
    if abs(six.i4) <= tol:
        raise I4Zero(f"I4 = {six.i4:.3e} is inside the zero band {tol:.1e}")
    i4sq = six.i4 * six.i4
    i1_pred = six.i14 * six.i12 / (2.0 * i4sq)
    i2_pred = ((six.i4 - six.i12) ** 2 - six.i4 * six.i14 + six.i12 ** 2) / i4sq
    return matches(six.i1, i1_pred, tol) and matches(six.i2, i2_pred, tol)


def t_eigenvalues_from_invariants(i1: float, i2: float) -> np.ndarray:
    """Recover the correlation-matrix spectrum of a symmetric state from (I1, I2).

    For a unit-trace real symmetric T the eigenvalues are the roots of
    lambda^3 - lambda^2 + p lambda - I1 with p = (1 - I2) / 2.  Solved by
    the trigonometric method; returns the triple sorted descending.

    Raises
    ------
    NoRealSpectrum
        If the cubic discriminant is below -1e-10 (no unit-trace real
        symmetric matrix realizes these values).
    """
    p = (1.0 - i2) / 2.0
    # Depressed cubic y^3 + P y + Q with lambda = y + 1/3.
    big_p = p - 1.0 / 3.0
    big_q = -2.0 / 27.0 + p / 3.0 - i1
    disc = -4.0 * big_p ** 3 - 27.0 * big_q ** 2
    if disc < -1e-10:
        raise NoRealSpectrum(
            f"cubic discriminant {disc:.3e} < -1e-10; (I1, I2) = ({i1:.6g}, {i2:.6g})"
        )
    if big_p >= 0.0:
        # Discriminant >= 0 forces P <= 0 up to roundoff: triple root.
        roots = np.full(3, 1.0 / 3.0)
        return roots
    m = 2.0 * np.sqrt(-big_p / 3.0)
    arg = 3.0 * big_q / (big_p * m)
    arg = min(1.0, max(-1.0, arg))
    theta = np.arccos(arg) / 3.0
    y = m * np.cos(theta - 2.0 * np.pi * np.arange(3) / 3.0)
    return np.sort(y + 1.0 / 3.0)[::-1]
