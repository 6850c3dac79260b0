"""The fast Hough transform over dyadic patterns, plus its brute-force oracle.

The canonical slope family is mostly-horizontal and right-leaning: for a
grid of side ``n = 2**p`` the accumulator cell ``(t, s)`` holds

    sum over x of pixels[s + D(x, t), x]

where ``D(x, t)`` is the dyadic pattern of slope ``t`` anchored at column 0
and rows outside the image contribute zero.  The shift axis runs over
``s in [0, 2n - 2]`` with zero padding (no cyclic wrap), so every cell is a
true in-image pattern sum and matches :func:`hough_brute` exactly.

:func:`fht_quadrant` computes the table in ``O(n^2 log n)`` additions by
the butterfly recursion: partial sums over width-``w`` column spans are
merged pairwise, the merged slope ``t`` reading slope ``t // 2`` from both
halves with the right half shifted by ``ceil(t / 2)``.  The other three
slope families come from cheap grid symmetries (:class:`Quadrant`).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .patterns import MAX_EXPONENT, PatternParams, pattern_sum

MAX_PIXEL = (1 << 32) - 1


@dataclass(frozen=True)
class ImageGrid:
    """A square image of non-negative integers with power-of-two side."""

    p: int
    pixels: np.ndarray  # (n, n) int64, row-major [y, x]

    @classmethod
    def from_array(cls, array) -> "ImageGrid":
        pix = np.asarray(array)
        if pix.ndim != 2 or pix.shape[0] != pix.shape[1]:
            raise ValueError(f"image must be square 2-D, got shape {pix.shape}")
        n = pix.shape[0]
        if n < 2 or n & (n - 1):
            raise ValueError(f"image side must be a power of two >= 2, got {n}")
        p = n.bit_length() - 1
        if p > MAX_EXPONENT:
            raise ValueError(f"image side 2**{p} exceeds the 2**{MAX_EXPONENT} cap")
        if not np.issubdtype(pix.dtype, np.integer):
            if not np.all(pix == np.floor(pix)):
                raise ValueError("pixel values must be integers")
        pix = pix.astype(np.int64, copy=True)
        if pix.min() < 0 or pix.max() > MAX_PIXEL:
            raise ValueError("pixel values must be in [0, 2**32 - 1]")
        pix.flags.writeable = False
        return cls(p, pix)

    @property
    def n(self) -> int:
        return 1 << self.p

    @property
    def total_mass(self) -> int:
        return int(self.pixels.sum())


@dataclass(frozen=True)
class HoughAccumulator:
    """(slope, shift) table of pattern sums; cells are 64-bit exact."""

    p: int
    cells: np.ndarray  # (n, 2n - 1) int64
    merge_add_count: int | None = None  # filled by the butterfly, None for brute

    @property
    def n(self) -> int:
        return 1 << self.p


class Quadrant(Enum):
    """The four slope families and their reductions to the canonical one.

    Each family is computed by running the canonical transform on a
    flipped/transposed view of the image; ``line_points`` maps a cell
    ``(t, s)`` back to the two boundary pixels of the corresponding line in
    the original coordinates (x right, y down).
    """

    HORIZONTAL_RIGHT = "hr"
    HORIZONTAL_LEFT = "hl"
    VERTICAL_RIGHT = "vr"
    VERTICAL_LEFT = "vl"

    def transform_pixels(self, pixels: np.ndarray) -> np.ndarray:
        if self is Quadrant.HORIZONTAL_RIGHT:
            return pixels
        if self is Quadrant.HORIZONTAL_LEFT:
            return pixels[::-1, :]
        if self is Quadrant.VERTICAL_RIGHT:
            return pixels.T
        return pixels.T[::-1, :]

    def line_points(self, n: int, t: int, s: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Endpoints ((x0, y0), (x1, y1)) of cell (t, s) in original coordinates."""
        if self is Quadrant.HORIZONTAL_RIGHT:
            return (0, s), (n - 1, s + t)
        if self is Quadrant.HORIZONTAL_LEFT:
            return (0, n - 1 - s), (n - 1, n - 1 - s - t)
        if self is Quadrant.VERTICAL_RIGHT:
            return (s, 0), (s + t, n - 1)
        return (n - 1 - s, 0), (n - 1 - s - t, n - 1)


def _as_grid(image) -> ImageGrid:
    return image if isinstance(image, ImageGrid) else ImageGrid.from_array(image)


def fht_quadrant(image) -> HoughAccumulator:
    """Accumulator for the canonical quadrant via the butterfly recursion.

    Bit-identical to :func:`hough_brute`; ``merge_add_count`` records the
    number of cell additions performed (one per output cell per merge
    stage, zero-padded reads included), which is n * (2n - 1) * log2(n).
    """
    grid = _as_grid(image)
    pixels = np.ascontiguousarray(grid.pixels, dtype=np.int64)
    cells, nadds = kernels.fht_accumulate(pixels)
    return HoughAccumulator(grid.p, cells, nadds)


def hough_brute(image) -> HoughAccumulator:
    """Ground-truth oracle: sum every pattern directly from its ordinates."""
    grid = _as_grid(image)
    n = grid.n
    ws = 2 * n - 1
    padded = np.zeros((3 * n - 2, n), dtype=np.int64)
    padded[:n] = grid.pixels
    cells = np.empty((n, ws), dtype=np.int64)
    cols = np.arange(n)
    shifts = np.arange(ws)[:, None]
    for t in range(n):
        ys = np.array(pattern_sum(PatternParams(grid.p, t)).ordinates)
        cells[t] = padded[shifts + ys[None, :], cols].sum(axis=1)
    return HoughAccumulator(grid.p, cells, None)


def fht_full(image) -> dict[Quadrant, HoughAccumulator]:
    """All four slope families, labeled; no fusion of the shared diagonals.

    The boundary slopes (the two image diagonals) appear in two quadrants
    each; consumers needing a single global parameter space should rely on
    ``Quadrant.line_points`` to identify duplicates.
    """
    grid = _as_grid(image)
    out: dict[Quadrant, HoughAccumulator] = {}
    for quad in Quadrant:
        view = np.ascontiguousarray(quad.transform_pixels(grid.pixels))
        out[quad] = fht_quadrant(ImageGrid.from_array(view))
    return out


def merge_add_count(n: int) -> int:
    """Closed form for the additions the butterfly performs on an n-side image."""
    return n * (2 * n - 1) * (n.bit_length() - 1)
