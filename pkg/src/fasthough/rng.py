"""Seeded 64-bit linear congruential generator for reproducible test images.

The generator is fully specified so failures reproduce anywhere:

    state_{k+1} = (6364136223846793005 * state_k + 1442695040888963407) mod 2**64

(Knuth's MMIX constants), seeded directly with the user's 64-bit seed.  A
pixel draw takes the top 32 bits of the next state modulo (maxval + 1);
images are filled row-major.
"""

from __future__ import annotations

import numpy as np

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1


class Lcg64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & _MASK64
        return self.state

    def next_below(self, bound: int) -> int:
        return (self.next_u64() >> 32) % bound


def random_image(n: int, seed: int, maxval: int = 255) -> np.ndarray:
    """Deterministic (n, n) int64 image with samples in [0, maxval]."""
    gen = Lcg64(seed)
    flat = [gen.next_below(maxval + 1) for _ in range(n * n)]
    return np.array(flat, dtype=np.int64).reshape(n, n)
