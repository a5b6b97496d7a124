"""Fractional circular shifts of a single vector.

The cyclic permutation matrix P (ones on the subdiagonal, one in the
top-right corner) generalizes to P^k for real k once a branch of its
matrix logarithm is fixed.  We use the symmetric frequency range, which
is the unique branch keeping odd-length real vectors real; for even
lengths the sign of the half-rate (Nyquist) frequency is a configuration
constant.  The fast path evaluates P^k v as an FFT, a per-frequency
phase ramp, and an inverse FFT; a dense-matrix oracle is provided for
cross-validation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# Pinned by the 4x4 mixed row/column regression in the verify suite:
# only this sign reproduces the frozen complex reference matrix.
DEFAULT_NYQUIST_SIGN = -1


@dataclass(frozen=True)
class FrequencyConvention:
    """Branch-of-logarithm choice; only the Nyquist sign is free."""

    nyquist_sign: int = DEFAULT_NYQUIST_SIGN

    def __post_init__(self):
        if self.nyquist_sign not in (1, -1):
            raise ValueError(f"nyquist_sign must be +1 or -1, got {self.nyquist_sign}")


DEFAULT_CONVENTION = FrequencyConvention()


def convention_from_env() -> FrequencyConvention:
    """Build the process-wide convention, honoring GCS_NYQUIST_SIGN."""
    raw = os.environ.get("GCS_NYQUIST_SIGN")
    if raw is None:
        return DEFAULT_CONVENTION
    try:
        sign = int(raw)
    except ValueError:
        raise ValueError(f"GCS_NYQUIST_SIGN must be +1 or -1, got {raw!r}")
    return FrequencyConvention(nyquist_sign=sign)


def as_vector(v) -> np.ndarray:
    """Coerce to a 1-D complex vector, rejecting empty or non-finite input."""
    arr = np.asarray(v, dtype=complex)
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError("expected a non-empty 1-D vector")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector contains non-finite values")
    return arr


def integer_cshift(v, k: int) -> np.ndarray:
    """Circularly shift v by an integer k; positive k moves entries to
    higher indices (result[i] = v[(i - k) mod n]).  Exact."""
    arr = as_vector(v)
    return np.roll(arr, int(k))


def shift_matrix(n: int) -> np.ndarray:
    """The n x n cyclic permutation matrix whose product with v equals
    integer_cshift(v, 1).  For n = 1 this is [[1]]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return np.roll(np.eye(n), 1, axis=0)


def frequencies(n: int, conv: FrequencyConvention = DEFAULT_CONVENTION) -> np.ndarray:
    """Signed frequency indices in DFT order: m for m < n/2, m - n for
    m > n/2, and nyquist_sign * n/2 at m = n/2 when n is even."""
    if n < 1:
        raise ValueError("n must be >= 1")
    f = np.arange(n)
    f = np.where(f > n // 2, f - n, f)
    if n % 2 == 0:
        f[n // 2] = conv.nyquist_sign * (n // 2)
    return f


def gcs(v, k: float, conv: FrequencyConvention = DEFAULT_CONVENTION) -> np.ndarray:
    """Circularly shift v by a real amount k.

    Evaluates ifft(fft(v) * exp(-2*pi*i * f * k / n)) in Theta(n log n);
    coincides with integer_cshift for integer k and fixes all-equal
    vectors for every k.  Positive k moves entries to higher indices.
    """
    arr = as_vector(v)
    if not np.isfinite(k):
        raise ValueError("shift amount must be finite")
    n = arr.size
    if n == 1:
        return arr.copy()
    phase = np.exp(-2j * np.pi * frequencies(n, conv) * (float(k) / n))
    return np.fft.ifft(np.fft.fft(arr) * phase)


@lru_cache(maxsize=32)
def _fourier_matrix(n: int) -> np.ndarray:
    m = np.arange(n)
    return np.exp(-2j * np.pi * np.outer(m, m) / n)


@lru_cache(maxsize=64)
def _log_matrix(n: int, nyquist_sign: int) -> np.ndarray:
    # Dense logarithm of P on its DFT eigenbasis; eigenvalues -2*pi*i*f/n.
    F = _fourier_matrix(n)
    eig = -2j * np.pi * frequencies(n, FrequencyConvention(nyquist_sign)) / n
    return (F.conj().T * eig) @ F / n


def gcs_dense_oracle(v, k: float, conv: FrequencyConvention = DEFAULT_CONVENTION) -> np.ndarray:
    """Slow reference path: form the dense matrix exp(k L) via a general
    matrix exponential and multiply.  Validation only; n capped at 256."""
    from scipy.linalg import expm

    arr = as_vector(v)
    if not np.isfinite(k):
        raise ValueError("shift amount must be finite")
    n = arr.size
    if n > 256:
        raise ValueError("dense oracle limited to n <= 256")
    Pk = expm(float(k) * _log_matrix(n, conv.nyquist_sign))
    return Pk @ arr


def real_view(v, tol: float = 1e-9) -> np.ndarray:
    """Return the real part of v, clamping round-off imaginary residue.

    Raises if any |imag| exceeds tol: the caller asked for a real vector
    that genuinely is not one (even-length fractional shifts).
    """
    arr = as_vector(v)
    worst = float(np.max(np.abs(arr.imag)))
    if worst > tol:
        raise ValueError(f"imaginary residue {worst:.3e} exceeds {tol:.1e}")
    return arr.real.copy()
