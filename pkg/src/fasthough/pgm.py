"""Minimal netpbm PGM support: P2 (ASCII) and P5 (binary), maxval <= 65535.

PGM is the sole image input format of the CLI: bit-exact integer samples,
no external decoder needed.  P5 samples are one byte up to maxval 255 and
two big-endian bytes above that, per the netpbm convention.
"""

from __future__ import annotations

import numpy as np


def _tokens(data: bytes):
    """Yield whitespace-separated header/ASCII tokens, skipping # comments."""
    i = 0
    n = len(data)
    while i < n:
        c = data[i:i + 1]
        if c == b"#":
            while i < n and data[i:i + 1] not in (b"\n", b"\r"):
                i += 1
        elif c.isspace():
            i += 1
        else:
            j = i
            while j < n and not data[j:j + 1].isspace() and data[j:j + 1] != b"#":
                j += 1
            yield i, data[i:j]
            i = j


def read_pgm(path) -> np.ndarray:
    """Read a PGM file into an int64 (height, width) array."""
    with open(path, "rb") as fh:
        data = fh.read()
    toks = _tokens(data)
    try:
        _, magic = next(toks)
    except StopIteration:
        raise ValueError(f"{path}: empty file") from None
    if magic not in (b"P2", b"P5"):
        raise ValueError(f"{path}: not a PGM file (magic {magic!r})")
    try:
        _, w_tok = next(toks)
        _, h_tok = next(toks)
        maxval_pos, maxval_tok = next(toks)
        width, height, maxval = int(w_tok), int(h_tok), int(maxval_tok)
    except (StopIteration, ValueError):
        raise ValueError(f"{path}: malformed PGM header") from None
    if width <= 0 or height <= 0:
        raise ValueError(f"{path}: bad dimensions {width}x{height}")
    if not 0 < maxval <= 65535:
        raise ValueError(f"{path}: maxval {maxval} outside [1, 65535]")

    count = width * height
    if magic == b"P2":
        values = []
        for _, tok in toks:
            values.append(int(tok))
        if len(values) != count:
            raise ValueError(f"{path}: expected {count} samples, got {len(values)}")
        pixels = np.array(values, dtype=np.int64)
    else:
        # binary payload starts after the single whitespace byte ending maxval
        start = maxval_pos + len(maxval_tok) + 1
        wide = maxval > 255
        need = count * (2 if wide else 1)
        raw = data[start:start + need]
        if len(raw) != need:
            raise ValueError(f"{path}: truncated P5 payload")
        dtype = ">u2" if wide else np.uint8
        pixels = np.frombuffer(raw, dtype=dtype).astype(np.int64)
    if pixels.max(initial=0) > maxval or pixels.min(initial=0) < 0:
        raise ValueError(f"{path}: sample outside [0, {maxval}]")
    return pixels.reshape(height, width)


def write_pgm(path, pixels, binary: bool = True) -> None:
    """Write an integer array as P5 (default) or P2."""
    arr = np.asarray(pixels)
    if arr.ndim != 2:
        raise ValueError("pixels must be 2-D")
    if arr.size and (arr.min() < 0 or arr.max() > 65535):
        raise ValueError("samples must fit in [0, 65535]")
    maxval = max(int(arr.max(initial=0)), 1)
    height, width = arr.shape
    header = f"P5 {width} {height} {maxval}\n" if binary else f"P2\n{width} {height}\n{maxval}\n"
    with open(path, "wb") as fh:
        fh.write(header.encode("ascii"))
        if binary:
            dtype = ">u2" if maxval > 255 else np.uint8
            fh.write(arr.astype(dtype).tobytes())
        else:
            for row in arr:
                fh.write((" ".join(str(int(v)) for v in row) + "\n").encode("ascii"))
