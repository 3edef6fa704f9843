"""Deterministic random stream plus stochastic gradient sampling.

The stream is splitmix64: from a 64-bit state, each draw adds the
increment 0x9E3779B97F4A7C15, then mixes the state through two
xor-shift-multiply rounds. Uniforms are the top 53 output bits scaled by
2^-53, so every value lies in [0, 1) and the sequence is bit-identical
across platforms and backends.
"""

import numpy as np

from . import backend
from .errors import ParameterError, ShapeError

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class RngStream:
    """Sequential splitmix64 stream; single-owner, cheap to copy via state."""

    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = int(seed) & _MASK64

    def next_u64(self):
        """Next raw 64-bit output."""
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def next_uniform(self):
        """Next uniform in [0, 1)."""
        return (self.next_u64() >> 11) * 2.0**-53

    def uniforms(self, n):
        """Next n uniforms as a float64 array (same sequence as next_uniform)."""
        out = np.empty(int(n), dtype=np.float64)
        self.state = backend.fill_uniform(self.state, out)
        return out

    def spawn_child(self, index):
        """Derive an independent child stream for parallel per-tensor use.

        Seeded with next_u64() xor index; consuming one draw from the
        parent means parallel and serial runs differ, so serial mask
        generation stays the default.
        """
        return RngStream(self.next_u64() ^ int(index))

    def __repr__(self):
        return f"RngStream(state=0x{self.state:016x})"


def gen_mask(rng, shape, s):
    """Draw a Bernoulli(s) 0/1 mask of the given shape.

    Each entry is 1 iff the next uniform is strictly below s; entries are
    drawn in row-major order and the stream advances by exactly
    prod(shape) draws, for every s including 0 and 1.
    """
    if not 0.0 <= s <= 1.0:
        raise ParameterError(f"sampling rate must lie in [0, 1], got {s}")
    shape = tuple(int(x) for x in shape)
    out = np.empty(shape, dtype=np.float64)
    rng.state = backend.fill_mask(rng.state, float(s), out.reshape(-1))
    return out


def apply_mask(mask, grad):
    """Sampled gradient: elementwise mask * grad (never grows any entry)."""
    if mask.shape != grad.shape:
        raise ShapeError(f"mask shape {mask.shape} does not match gradient {grad.shape}")
    return mask * grad


def global_norm(grads):
    """l2 norm of the concatenation of all tensors."""
    total = 0.0
    for g in grads:
        total += float(np.sum(np.asarray(g) ** 2))
    return float(np.sqrt(total))


def clip_by_global_norm(grads, c):
    """Scale all tensors by c/norm when the joint l2 norm exceeds c.

    Returns the input tensors unchanged when already within the threshold.
    """
    if not c > 0.0:
        raise ParameterError(f"clip threshold must be positive, got {c}")
    n = global_norm(grads)
    if n <= c:
        return list(grads)
    scale = c / n
    return [g * scale for g in grads]
