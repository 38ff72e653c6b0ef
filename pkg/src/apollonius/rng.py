"""Counter-based uniform variates for reproducible Monte Carlo.

Every variate is a pure function of (seed, sample index, draw number)
through two chained SplitMix64 steps: the sample index keys a per-sample
state, the draw number advances within the sample. Sharding work across
threads or processes therefore cannot change a single bit of any
estimate, and rejected draws inside one sample never shift the variates
of another.

A scalar path (Python integers) and a vectorized path (uint64 arrays)
implement the identical mixing function; tests assert they agree bit for
bit.
"""

from __future__ import annotations

import numpy as np

__all__ = ["sample_uniform", "uniform_block", "SampleStream"]

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_INV_2_53 = 2.0 ** -53


def _mix(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def _sample_key(seed: int, index: int) -> int:
    return _mix((seed + (index + 1) * _GOLDEN) & _MASK)


def sample_uniform(seed: int, index: int, draw: int) -> float:
    """Uniform variate in [0, 1) for the given (seed, sample, draw) triple."""
    word = _mix((_sample_key(seed, index) + (draw + 1) * _GOLDEN) & _MASK)
    return (word >> 11) * _INV_2_53


def uniform_block(seed: int, lo: int, hi: int, draw: int) -> np.ndarray:
    """Vectorized sample_uniform over sample indices lo..hi-1."""
    golden = np.uint64(_GOLDEN)
    with np.errstate(over="ignore"):
        idx = np.arange(lo, hi, dtype=np.uint64)
        key = _mix_array(np.uint64(seed & _MASK) + (idx + np.uint64(1)) * golden)
        word = _mix_array(key + np.uint64(draw + 1) * golden)
    return (word >> np.uint64(11)).astype(np.float64) * _INV_2_53


def _mix_array(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


class SampleStream:
    """Sequential draws for one sample index.

    next_float() yields draw 0, 1, 2, ... of the sample, so rejection
    loops can take as many variates as they need while staying a pure
    function of (seed, index).
    """

    def __init__(self, seed: int, index: int):
        self.seed = seed
        self.index = index
        self._draw = 0

    def next_float(self) -> float:
        value = sample_uniform(self.seed, self.index, self._draw)
        self._draw += 1
        return value
