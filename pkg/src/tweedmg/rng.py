"""Deterministic 64-bit linear congruential generator.

Used for the random right-hand sides of the convergence experiments and the
starting vectors of the power iteration, so that traces and spectral-radius
estimates are byte-identical across platforms.  Recurrence (Knuth MMIX
constants):

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64

Uniform doubles in [0, 1) are formed from the top 53 bits of the state.
"""

import numpy as np

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg64:
    """Seeded 64-bit LCG producing uniform doubles in [0, 1)."""

    def __init__(self, seed: int):
        self.state = (int(seed) ^ _INC) & _MASK
        self._next()  # decouple first output from raw seed bits

    def _next(self) -> int:
        self.state = (_MULT * self.state + _INC) & _MASK
        return self.state

    def uniform(self) -> float:
        return (self._next() >> 11) / float(1 << 53)

    def fill(self, shape) -> np.ndarray:
        """Array of uniform [0, 1) samples, C-order fill."""
        n = int(np.prod(shape))
        out = np.empty(n)
        for k in range(n):
            out[k] = self.uniform()
        return out.reshape(shape)
