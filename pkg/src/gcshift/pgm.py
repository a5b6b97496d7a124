"""Minimal PGM (P2/P5) reader and writer, maxval 255."""

from __future__ import annotations

import numpy as np


class ImageFormatError(Exception):
    """Raised for malformed, non-square, or non-divisible images."""


def _tokens(data: bytes):
    # Header tokens with '#' comments running to end of line.
    i = 0
    while i < len(data):
        c = data[i:i + 1]
        if c in b" \t\r\n":
            i += 1
        elif c == b"#":
            while i < len(data) and data[i:i + 1] not in b"\r\n":
                i += 1
        else:
            j = i
            while j < len(data) and data[j:j + 1] not in b" \t\r\n#":
                j += 1
            yield i, data[i:j]
            i = j


def parse_pgm(data: bytes) -> np.ndarray:
    """Decode P2 (ascii) or P5 (raw) bytes into a float array of shape
    (height, width) with values in [0, 255]."""
    toks = _tokens(data)
    try:
        _, magic = next(toks)
    except StopIteration:
        raise ImageFormatError("empty image data")
    if magic not in (b"P2", b"P5"):
        raise ImageFormatError(f"not a PGM image (magic {magic!r})")
    try:
        _, w = next(toks)
        _, h = next(toks)
        pos, maxval = next(toks)
        w, h, maxval = int(w), int(h), int(maxval)
    except (StopIteration, ValueError):
        raise ImageFormatError("truncated or malformed PGM header")
    if w < 1 or h < 1 or not 0 < maxval <= 255:
        raise ImageFormatError(f"unsupported PGM dimensions {w}x{h} maxval {maxval}")

    if magic == b"P5":
        start = pos + len(str(maxval)) + 1  # single whitespace after maxval
        raw = data[start:start + w * h]
        if len(raw) != w * h:
            raise ImageFormatError("truncated PGM pixel data")
        arr = np.frombuffer(raw, dtype=np.uint8).astype(float)
    else:
        vals = []
        for _, tok in toks:
            try:
                vals.append(int(tok))
            except ValueError:
                raise ImageFormatError(f"bad pixel token {tok!r}")
        if len(vals) != w * h:
            raise ImageFormatError(f"expected {w * h} pixels, got {len(vals)}")
        arr = np.array(vals, dtype=float)
    if arr.min() < 0 or arr.max() > maxval:
        raise ImageFormatError("pixel value outside [0, maxval]")
    return arr.reshape(h, w)


def write_pgm(pixels: np.ndarray) -> bytes:
    """Encode a real-valued array as binary P5, clamping to [0, 255]."""
    arr = np.asarray(pixels, dtype=float)
    if arr.ndim != 2:
        raise ImageFormatError("pixels must be 2-D")
    clipped = np.clip(np.rint(arr), 0, 255).astype(np.uint8)
    h, w = clipped.shape
    return b"P5\n%d %d\n255\n" % (w, h) + clipped.tobytes()
