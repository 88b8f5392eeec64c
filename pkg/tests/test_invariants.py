import numpy as np
import pytest
from numpy.testing import assert_allclose

from qubitpair import qmat
from qubitpair.errors import I4Zero, NoRealSpectrum, NotSymmetricState
from qubitpair.invariants import (
    i10_diagonal_frame,
    makhlin_all,
    symmetric_six,
    t_eigenvalues_from_invariants,
    xform_invariants,
    xform_relation_check,
)
from qubitpair.models import dicke_pair, ising_pair
from qubitpair.sampling import (
    random_density_matrix,
    random_symmetric_density_matrix,
    random_xform,
)
from qubitpair.states import BlochForm, apply_local_unitary, bloch_decompose

REL = 1e-9
ABS = 1e-12


def invariance_deviation(before, after):
    """Relative deviation with absolute floor folded in."""
    a, b = before.as_array(), after.as_array()
    return np.max(np.abs(a - b) / np.maximum(np.abs(a), ABS / REL))


class TestMakhlinAll:
    def test_maximally_mixed_all_zero(self, maximally_mixed):
        inv = makhlin_all(bloch_decompose(maximally_mixed))
        assert_allclose(inv.as_array(), np.zeros(18), atol=1e-15)

    def test_ket00_hand_evaluated(self, ket00):
        # s = r = e_z, T = diag(0, 0, 1): every contraction collapses.
        inv = makhlin_all(bloch_decompose(ket00))
        expected = np.array(
            [0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0], dtype=float
        )
        assert_allclose(inv.as_array(), expected, atol=1e-14)

    def test_bell_symmetric_cross_checked_against_closed_form(self, bell_symmetric):
        # Closed form with a = d = 0, c = 1/2, b = 0 gives I1 = -1, I2 = 3.
        inv = makhlin_all(bloch_decompose(bell_symmetric))
        expected = np.zeros(18)
        expected[0], expected[1], expected[2] = -1.0, 3.0, 3.0
        assert_allclose(inv.as_array(), expected, atol=1e-13)

    def test_local_unitary_invariance(self, rng):
        for _ in range(200):
            rho = random_density_matrix(rng)
            before = makhlin_all(bloch_decompose(rho))
            rotated = apply_local_unitary(rho, qmat.haar_su2(rng), qmat.haar_su2(rng))
            after = makhlin_all(bloch_decompose(rotated))
            assert invariance_deviation(before, after) < REL

    def test_squares_are_nonnegative(self, rng):
        for _ in range(100):
            inv = makhlin_all(bloch_decompose(random_density_matrix(rng)))
            assert inv.i2 >= 0.0
            assert inv.i4 >= 0.0
            assert inv.i7 >= 0.0

    def test_symmetric_reductions(self, rng):
        for _ in range(200):
            inv = makhlin_all(bloch_decompose(random_symmetric_density_matrix(rng)))
            assert abs(inv.i4 - inv.i7) < 1e-10
            assert abs(inv.i5 - inv.i8) < 1e-10
            assert abs(inv.i6 - inv.i9) < 1e-10
            assert abs(inv.i10 - inv.i11) < 1e-10
            assert abs(inv.i15 - inv.i16) < 1e-10
            assert abs(inv.i17 - inv.i18) < 1e-10


class TestSymmetricSix:
    def test_bell_symmetric(self, bell_symmetric):
        six = symmetric_six(bloch_decompose(bell_symmetric))
        assert_allclose(six.as_array(), [-1.0, 3.0, 0.0, 0.0, 0.0, 0.0], atol=1e-13)

    def test_dicke_4_1(self):
        six = symmetric_six(bloch_decompose(dicke_pair(4, 1).to_matrix()))
        assert abs(six.i4 - 0.25) < 1e-14
        assert abs(six.i12 - 0.0) < 1e-14
        assert abs(six.i14 - 0.125) < 1e-14

    def test_ket00(self, ket00):
        six = symmetric_six(bloch_decompose(ket00))
        assert_allclose(six.as_array(), [0.0, 1.0, 1.0, 0.0, 1.0, 0.0], atol=1e-14)

    def test_matches_full_set(self, rng):
        for _ in range(100):
            form = bloch_decompose(random_symmetric_density_matrix(rng))
            six = symmetric_six(form)
            inv = makhlin_all(form)
            assert_allclose(
                six.as_array(),
                [inv.i1, inv.i2, inv.i4, inv.i10, inv.i12, inv.i14],
                atol=1e-12,
            )

    def test_rejects_non_symmetric(self, rng):
        rho = random_density_matrix(rng)
        with pytest.raises(NotSymmetricState):
            symmetric_six(bloch_decompose(rho))


class TestI10DiagonalFrame:
    def test_zero_spin_component(self):
        assert i10_diagonal_frame([0.6, 0.3, 0.1], [0.0, 0.3, 0.1]) == 0.0

    def test_degenerate_spectrum(self):
        assert abs(i10_diagonal_frame([1.0, 1.0, -1.0], [0.2, 0.3, 0.4])) < 1e-15

    def test_equals_contraction_form(self):
        t_eigs = np.array([0.6, 0.3, 0.1])
        s = np.array([0.2, 0.3, 0.1])
        form = BlochForm(s=s, r=s, t=np.diag(t_eigs))
        assert abs(
            i10_diagonal_frame(t_eigs, s) - makhlin_all(form).i10
        ) < 1e-10

    def test_random_diagonal_frames(self, rng):
        for _ in range(100):
            t_eigs = rng.uniform(-1.0, 1.0, size=3)
            s = rng.uniform(-0.5, 0.5, size=3)
            form = BlochForm(s=s, r=s, t=np.diag(t_eigs))
            assert abs(
                i10_diagonal_frame(t_eigs, s) - makhlin_all(form).i10
            ) < 1e-10


class TestXFormInvariants:
    def test_bell_symmetric(self, bell_symmetric):
        from qubitpair.states import xform_extract

        six = xform_invariants(xform_extract(bell_symmetric))
        assert_allclose(six.as_array(), [-1.0, 3.0, 0.0, 0.0, 0.0, 0.0], atol=1e-15)

    def test_ising_3_halfpi(self):
        six = xform_invariants(ising_pair(3, np.pi / 2))
        assert abs(six.i4 - 0.25) < 1e-12
        assert abs(six.i12 - 0.1875) < 1e-12
        assert abs(six.i14 - (-0.125)) < 1e-12

    def test_product_state(self):
        from qubitpair.states import XForm

        six = xform_invariants(XForm(a=1.0, b=0j, c=0.0, d=0.0))
        assert_allclose(six.as_array(), [0.0, 1.0, 1.0, 0.0, 1.0, 0.0], atol=1e-15)

    def test_closed_form_equals_pipeline(self, rng):
        for _ in range(200):
            x = random_xform(rng)
            closed = xform_invariants(x)
            pipeline = symmetric_six(bloch_decompose(x.to_matrix()))
            assert_allclose(closed.as_array(), pipeline.as_array(), atol=1e-12)


class TestXFormRelationCheck:
    def test_holds_on_random_xforms(self, rng):
        checked = 0
        for _ in range(500):
            six = xform_invariants(random_xform(rng))
            if abs(six.i4) <= 1e-8:
                continue
            checked += 1
            assert xform_relation_check(six, tol=1e-10)
        assert checked > 400

    def test_dicke_4_1(self):
        six = xform_invariants(dicke_pair(4, 1))
        assert xform_relation_check(six)

    def test_i4_zero_raises(self, bell_symmetric):
        from qubitpair.states import xform_extract

        six = xform_invariants(xform_extract(bell_symmetric))
        with pytest.raises(I4Zero):
            xform_relation_check(six)


class TestTEigenvaluesFromInvariants:
    def test_bell_values(self):
        assert_allclose(
            t_eigenvalues_from_invariants(-1.0, 3.0), [1.0, 1.0, -1.0], atol=1e-9
        )

    def test_rank_one(self):
        assert_allclose(
            t_eigenvalues_from_invariants(0.0, 1.0), [1.0, 0.0, 0.0], atol=1e-9
        )

    def test_matches_direct_spectrum(self, rng):
        for _ in range(200):
            form = bloch_decompose(random_symmetric_density_matrix(rng))
            inv = makhlin_all(form)
            roots = t_eigenvalues_from_invariants(inv.i1, inv.i2)
            direct = np.sort(qmat.hermitian_eigenvalues(form.t))[::-1]
            assert_allclose(roots, direct, atol=1e-9)

    def test_power_sums(self, rng):
        for _ in range(100):
            form = bloch_decompose(random_symmetric_density_matrix(rng))
            inv = makhlin_all(form)
            roots = t_eigenvalues_from_invariants(inv.i1, inv.i2)
            assert abs(np.sum(roots) - 1.0) < 1e-9
            assert abs(np.sum(roots ** 2) - inv.i2) < 1e-9
            assert abs(np.prod(roots) - inv.i1) < 1e-9

    def test_unrealizable_pair_raises(self):
        with pytest.raises(NoRealSpectrum):
            t_eigenvalues_from_invariants(1.0, 0.0)
