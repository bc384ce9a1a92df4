import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qutrit_depol.criteria import pt_spectrum
from qutrit_depol.errors import AlphaOutOfRange, DimensionMismatch
from qutrit_depol.states import (
    DensityMatrix,
    apply_local_unitary,
    horodecki_state,
    psi_plus,
    rotated_horodecki_state,
    theta_unitary,
)

alphas = st.floats(min_value=2.0, max_value=5.0, allow_nan=False)


def index(i, j):
    return 3 * i + j


class TestPsiPlus:
    def test_entries(self):
        m = psi_plus().matrix
        for i in range(3):
            for j in range(3):
                assert m[index(i, i), index(j, j)] == pytest.approx(1 / 3)
        assert np.count_nonzero(np.abs(m) > 1e-15) == 9

    def test_pure_and_normalised(self):
        rho = psi_plus()
        assert rho.trace() == pytest.approx(1.0)
        assert rho.purity() == pytest.approx(1.0)


class TestHorodeckiState:
    def test_alpha5_diagonal(self):
        m = horodecki_state(5).matrix
        assert m[index(0, 1), index(0, 1)] == pytest.approx(5 / 21)
        assert m[index(1, 0), index(1, 0)] == 0

    @pytest.mark.parametrize("alpha", [2.0, 3.3, 5.0])
    def test_00_entry(self, alpha):
        assert horodecki_state(alpha).matrix[0, 0] == pytest.approx(2 / 21, abs=1e-15)

    @pytest.mark.parametrize("alpha", [1.99, 5.01, -1.0])
    def test_alpha_range(self, alpha):
        with pytest.raises(AlphaOutOfRange):
            horodecki_state(alpha)

    def test_off_diagonal_support(self):
        m = horodecki_state(4.5).matrix
        diag_pairs = {index(i, i) for i in range(3)}
        rows, cols = np.nonzero(np.abs(m - np.diag(np.diag(m))) > 1e-15)
        assert set(rows) <= diag_pairs and set(cols) <= diag_pairs

    def test_state_at_3_5_is_ppt(self):
        assert pt_spectrum(horodecki_state(3.5))[0] >= 0

    @settings(max_examples=40, deadline=None)
    @given(alphas)
    def test_minimum_pt_eigenvalue(self, alpha):
        lo = pt_spectrum(horodecki_state(alpha))[0]
        branch = 5 / 42 - np.sqrt((2 * alpha - 5) ** 2 + 16) / 42
        assert lo == pytest.approx(min(branch, 2 / 21), abs=1e-12)
        if alpha > 4:
            assert lo < 0
        else:
            assert lo >= -1e-15

    def test_boundary_alpha_4_exact(self):
        assert abs(pt_spectrum(horodecki_state(4.0))[0]) < 1e-15


class TestLocalUnitary:
    def test_theta_is_involution(self):
        t = theta_unitary()
        assert np.array_equal(t @ t, np.eye(3))

    @pytest.mark.parametrize("alpha", [2.5, 4.3, 5.0])
    def test_matches_rotated_constituents(self, alpha):
        rotated = apply_local_unitary(horodecki_state(alpha))
        assert rotated.allclose(rotated_horodecki_state(alpha), atol=1e-15)

    def test_00_entry_of_rotated_state(self):
        # |psi+~> = (|01> + |10> + |22>)/sqrt 3 has no |00> component
        assert apply_local_unitary(horodecki_state(5)).matrix[0, 0] == pytest.approx(5 / 21)

    def test_twice_is_identity(self):
        rho = horodecki_state(4.7)
        assert apply_local_unitary(apply_local_unitary(rho)).allclose(rho, atol=0)

    @settings(max_examples=30, deadline=None)
    @given(alphas)
    def test_preserves_invariants(self, alpha):
        rho = horodecki_state(alpha)
        out = apply_local_unitary(rho)
        assert out.trace() == pytest.approx(1.0, abs=1e-12)
        assert out.purity() == pytest.approx(rho.purity(), abs=1e-12)
        spec_in = np.linalg.eigvalsh(rho.matrix)
        spec_out = np.linalg.eigvalsh(out.matrix)
        assert np.max(np.abs(spec_in - spec_out)) < 1e-12

    def test_dimension_check(self):
        with pytest.raises(DimensionMismatch):
            apply_local_unitary(np.eye(3) / 3)


class TestDensityMatrixValidation:
    def test_rejects_bad_trace(self):
        with pytest.raises(ValueError):
            DensityMatrix(np.eye(9) / 8)

    def test_rejects_negative(self):
        m = np.diag([1.1, -0.1] + [0.0] * 7)
        with pytest.raises(ValueError):
            DensityMatrix(m)

    def test_rejects_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            DensityMatrix(np.eye(3) / 3, dims=(3, 3))

    def test_single_qutrit(self):
        assert DensityMatrix(np.eye(3) / 3, dims=(3,)).shape == (3, 3)
