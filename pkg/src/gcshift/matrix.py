"""Per-line shift operators on matrices and tile-block shifts on images.

The row operator shifts each row of a matrix by its own real amount; the
column operator does the same per column.  Sequences of such operators
compose right-associatively and invert by negating their parameters.
The block variants move whole b x b tiles of an image by applying the
same fractional shift to every within-tile pixel lane of a tile band.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_CONVENTION, FrequencyConvention, frequencies, gcs


@dataclass(frozen=True)
class LineOp:
    """One program step: kind is "row" or "col", params holds one real
    shift amount per line of the target dimension."""

    kind: str
    params: tuple

    def __post_init__(self):
        if self.kind not in ("row", "col"):
            raise ValueError(f"kind must be 'row' or 'col', got {self.kind!r}")
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        if not all(np.isfinite(p) for p in self.params):
            raise ValueError("shift parameters must be finite")


def as_matrix(M) -> np.ndarray:
    arr = np.asarray(M, dtype=complex)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError("expected a non-empty 2-D matrix")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix contains non-finite values")
    return arr


def row_shift_op(params, M, conv: FrequencyConvention = DEFAULT_CONVENTION) -> np.ndarray:
    """Shift row i by params[i]; positive amounts move entries rightward."""
    A = as_matrix(M)
    p = [float(x) for x in params]
    if len(p) != A.shape[0]:
        raise ValueError(f"need {A.shape[0]} row parameters, got {len(p)}")
    out = np.empty_like(A)
    for i, k in enumerate(p):
        out[i, :] = gcs(A[i, :], k, conv)
    return out


def col_shift_op(params, M, conv: FrequencyConvention = DEFAULT_CONVENTION) -> np.ndarray:
    """Shift column j by params[j]; positive amounts move entries downward."""
    A = as_matrix(M)
    p = [float(x) for x in params]
    if len(p) != A.shape[1]:
        raise ValueError(f"need {A.shape[1]} column parameters, got {len(p)}")
    out = np.empty_like(A)
    for j, k in enumerate(p):
        out[:, j] = gcs(A[:, j], k, conv)
    return out


def apply_program(ops, M, conv: FrequencyConvention = DEFAULT_CONVENTION) -> np.ndarray:
    """Apply a right-associative program: the op nearest the matrix (the
    last list element) runs first.  All stages are validated before any
    work so a mismatch never yields a partial result."""
    A = as_matrix(M)
    rows, cols = A.shape
    for op in ops:
        want = rows if op.kind == "row" else cols
        if len(op.params) != want:
            raise ValueError(f"{op.kind} op needs {want} parameters, got {len(op.params)}")
    for op in reversed(list(ops)):
        if op.kind == "row":
            A = row_shift_op(op.params, A, conv)
        else:
            A = col_shift_op(op.params, A, conv)
    return A


def invert_program(ops) -> list:
    """Reverse the program and negate every parameter; applying the
    result after the original restores the input matrix."""
    return [LineOp(op.kind, tuple(-p for p in op.params)) for op in reversed(list(ops))]


def program_to_json(ops) -> str:
    """Serialize in execution order (first element runs first)."""
    doc = [{"kind": op.kind, "params": list(op.params)} for op in reversed(list(ops))]
    return json.dumps(doc)


def program_from_json(text: str) -> list:
    """Parse the execution-order JSON form back into program order."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"malformed program JSON: {e}") from e
    if not isinstance(doc, list):
        raise ValueError("program JSON must be an array")
    ops = []
    for entry in doc:
        if not isinstance(entry, dict) or "kind" not in entry or "params" not in entry:
            raise ValueError("each program step needs 'kind' and 'params'")
        ops.append(LineOp(entry["kind"], tuple(entry["params"])))
    return list(reversed(ops))


@dataclass(frozen=True)
class TileImage:
    """A (t*b) x (t*b) grayscale image viewed as t x t tiles of b x b
    pixels.  Stored complex so fractional tile shifts stay lossless."""

    t: int
    b: int
    pixels: np.ndarray

    def __post_init__(self):
        if self.t < 1 or self.b < 1:
            raise ValueError("tile counts and tile size must be >= 1")
        px = np.asarray(self.pixels, dtype=complex)
        side = self.t * self.b
        if px.shape != (side, side):
            raise ValueError(f"pixels must be {side}x{side}, got {px.shape}")
        if not np.all(np.isfinite(px)):
            raise ValueError("pixels contain non-finite values")
        object.__setattr__(self, "pixels", px)


def _shift_band(band_pixels: np.ndarray, t: int, b: int, k: float,
                conv: FrequencyConvention) -> np.ndarray:
    # band_pixels: (b, t*b) slab; shift tiles along the second axis.
    if float(k).is_integer():
        # Integer shifts are exact tile permutations, kept bit-identical.
        view = band_pixels.reshape(b, t, b)
        return np.roll(view, int(k), axis=1).reshape(b, t * b)
    lanes = band_pixels.reshape(b, t, b)
    phase = np.exp(-2j * np.pi * frequencies(t, conv) * (float(k) / t))
    shifted = np.fft.ifft(np.fft.fft(lanes, axis=1) * phase[None, :, None], axis=1)
    return shifted.reshape(b, t * b)


def block_row_shift(img: TileImage, band: int, k: float,
                    conv: FrequencyConvention = DEFAULT_CONVENTION) -> TileImage:
    """Shift the tiles of tile-row `band` horizontally by k tiles."""
    if not 0 <= band < img.t:
        raise ValueError(f"band must be in [0, {img.t}), got {band}")
    if not np.isfinite(k):
        raise ValueError("shift amount must be finite")
    px = img.pixels.copy()
    sl = slice(band * img.b, (band + 1) * img.b)
    px[sl, :] = _shift_band(px[sl, :], img.t, img.b, k, conv)
    return TileImage(img.t, img.b, px)


def block_col_shift(img: TileImage, band: int, k: float,
                    conv: FrequencyConvention = DEFAULT_CONVENTION) -> TileImage:
    """Shift the tiles of tile-column `band` vertically by k tiles."""
    if not 0 <= band < img.t:
        raise ValueError(f"band must be in [0, {img.t}), got {band}")
    if not np.isfinite(k):
        raise ValueError("shift amount must be finite")
    px = img.pixels.T.copy()
    sl = slice(band * img.b, (band + 1) * img.b)
    px[sl, :] = _shift_band(px[sl, :], img.t, img.b, k, conv)
    return TileImage(img.t, img.b, px.T.copy())
