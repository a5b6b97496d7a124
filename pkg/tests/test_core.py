import numpy as np
import pytest

from gcshift.core import (
    DEFAULT_CONVENTION,
    FrequencyConvention,
    convention_from_env,
    frequencies,
    gcs,
    gcs_dense_oracle,
    integer_cshift,
    real_view,
    shift_matrix,
)

PLUS = FrequencyConvention(nyquist_sign=1)
MINUS = FrequencyConvention(nyquist_sign=-1)


def rand_vec(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


class TestIntegerShift:
    def test_basic(self):
        assert np.array_equal(integer_cshift([1, 2, 3], 1).real, [3, 1, 2])

    def test_by_two(self):
        assert np.array_equal(integer_cshift([1, 2, 3, 4, 5], 2).real, [4, 5, 1, 2, 3])

    def test_single_element(self):
        assert np.array_equal(integer_cshift([7], 5).real, [7])

    def test_zero(self):
        assert np.array_equal(integer_cshift([1, 2, 3], 0).real, [1, 2, 3])

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            integer_cshift([1, np.nan, 3], 1)


class TestShiftMatrix:
    def test_n3(self):
        assert np.array_equal(shift_matrix(3), [[0, 0, 1], [1, 0, 0], [0, 1, 0]])

    def test_n4(self):
        assert np.array_equal(
            shift_matrix(4),
            [[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])

    def test_n1(self):
        assert np.array_equal(shift_matrix(1), [[1]])

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            shift_matrix(0)

    def test_matvec_matches_shift(self):
        rng = np.random.default_rng(0)
        for n in (2, 3, 5, 8):
            v = rng.standard_normal(n)
            assert np.allclose(shift_matrix(n) @ v, integer_cshift(v, 1).real)


class TestFrequencies:
    def test_odd(self):
        assert frequencies(3).tolist() == [0, 1, -1]
        assert frequencies(5).tolist() == [0, 1, 2, -2, -1]

    def test_even_plus(self):
        assert frequencies(4, PLUS).tolist() == [0, 1, 2, -1]

    def test_even_minus(self):
        assert frequencies(4, MINUS).tolist() == [0, 1, -2, -1]

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            FrequencyConvention(nyquist_sign=0)


class TestGcs:
    def test_integer_one(self):
        assert np.allclose(gcs([1, 2, 3], 1.0), [3, 1, 2], atol=1e-12)

    def test_fractional_reference(self):
        out = gcs([1, 2, 3], 1.08)
        assert np.allclose(out.real, [3.0823, 1.1103, 1.8074], atol=5e-4)
        assert np.max(np.abs(out.imag)) < 1e-9

    def test_all_equal_fixed_point(self):
        for k in (0.3, 1.7, -2.9):
            assert np.allclose(gcs([4.2] * 6, k), [4.2] * 6, atol=1e-12)

    def test_even_half_shift_complex(self):
        out = gcs([1, 3, 1, 3], 0.5, PLUS)
        assert np.allclose(out, [2 + 1j, 2 - 1j, 2 + 1j, 2 - 1j], atol=1e-9)
        assert np.allclose(gcs([1, 3, 1, 3], 0.5, MINUS), out.conj(), atol=1e-9)
        assert np.allclose(np.abs(out), np.sqrt(5.0), atol=1e-9)

    def test_n1_identity(self):
        assert np.allclose(gcs([2.5], 0.37), [2.5], atol=1e-15)

    def test_rejects_nonfinite_amount(self):
        with pytest.raises(ValueError):
            gcs([1, 2, 3], np.inf)

    def test_inverse_property(self):
        rng = np.random.default_rng(1)
        for n in range(2, 17):
            v = rand_vec(rng, n)
            k = rng.uniform(-n, n)
            assert np.allclose(gcs(gcs(v, k), -k), v, atol=1e-9)

    def test_additivity(self):
        rng = np.random.default_rng(2)
        for n in range(2, 17):
            v = rand_vec(rng, n)
            a, b = rng.uniform(-n, n, size=2)
            assert np.allclose(gcs(gcs(v, a), b), gcs(v, a + b), atol=1e-9)

    def test_norm_and_sum_conservation(self):
        rng = np.random.default_rng(3)
        for n in range(2, 17):
            v = rand_vec(rng, n)
            out = gcs(v, rng.uniform(-n, n))
            assert np.sum(np.abs(out) ** 2) == pytest.approx(np.sum(np.abs(v) ** 2), rel=1e-9)
            assert np.sum(out) == pytest.approx(np.sum(v), abs=1e-9)

    def test_integer_consistency(self):
        rng = np.random.default_rng(4)
        for n in range(2, 17):
            v = rand_vec(rng, n)
            for k in range(-2 * n, 2 * n + 1):
                assert np.allclose(gcs(v, float(k)), integer_cshift(v, k), atol=1e-12)

    def test_odd_reality(self):
        rng = np.random.default_rng(5)
        for n in (3, 5, 7, 9, 15):
            v = rng.standard_normal(n)
            out = gcs(v, rng.uniform(-n, n))
            assert np.max(np.abs(out.imag)) < 1e-9


class TestDenseOracle:
    def test_integer_shift(self):
        assert np.allclose(gcs_dense_oracle([1, 2, 3, 4, 5], 2.0), [4, 5, 1, 2, 3], atol=1e-8)

    def test_zero_is_identity(self):
        assert np.allclose(gcs_dense_oracle([1, 2, 3], 0.0), [1, 2, 3], atol=1e-12)

    def test_matches_fast_path(self):
        rng = np.random.default_rng(6)
        v = rand_vec(rng, 7)
        assert np.allclose(gcs_dense_oracle(v, 0.37), gcs(v, 0.37), atol=1e-8)

    def test_matches_across_sizes(self):
        rng = np.random.default_rng(7)
        for n in range(2, 65):
            v = rand_vec(rng, n)
            k = rng.uniform(-n, n)
            for conv in (PLUS, MINUS):
                assert np.allclose(gcs_dense_oracle(v, k, conv), gcs(v, k, conv), atol=1e-8)

    def test_rejects_oversize(self):
        with pytest.raises(ValueError):
            gcs_dense_oracle(np.zeros(257), 0.5)


class TestRealView:
    def test_clamps_residue(self):
        out = real_view(gcs([1.0, 2.0, 3.0], 0.4))
        assert out.dtype == float

    def test_rejects_genuinely_complex(self):
        with pytest.raises(ValueError):
            real_view(gcs([1, 3, 1, 3], 0.5))


class TestEnvConvention:
    def test_default(self, monkeypatch):
        monkeypatch.delenv("GCS_NYQUIST_SIGN", raising=False)
        assert convention_from_env() == DEFAULT_CONVENTION

    def test_override(self, monkeypatch):
        monkeypatch.setenv("GCS_NYQUIST_SIGN", "+1")
        assert convention_from_env().nyquist_sign == 1

    def test_garbage(self, monkeypatch):
        monkeypatch.setenv("GCS_NYQUIST_SIGN", "maybe")
        with pytest.raises(ValueError):
            convention_from_env()
