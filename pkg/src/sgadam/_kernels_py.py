"""Pure-numpy kernels, bit-identical to the compiled versions in _kernels.pyx.

Every function here mirrors the exact floating-point expression structure of
its compiled twin so that both backends produce byte-identical trajectories.
Do not reassociate or fuse operations in either file without updating the
other.
"""

import numpy as np

BACKEND_NAME = "python"

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_TWO_NEG53 = 2.0**-53

_GAMMA_U = np.uint64(_GAMMA)
_MIX1_U = np.uint64(_MIX1)
_MIX2_U = np.uint64(_MIX2)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S11 = np.uint64(11)


def _splitmix_outputs(state, n):
    # states after k = 1..n increments; uint64 arithmetic wraps mod 2**64
    k = np.arange(1, n + 1, dtype=np.uint64)
    z = np.uint64(state) + k * _GAMMA_U
    z = (z ^ (z >> _S30)) * _MIX1_U
    z = (z ^ (z >> _S27)) * _MIX2_U
    return z ^ (z >> _S31)


def fill_uniform(state, out):
    """Fill `out` with uniforms in [0, 1); return the advanced state."""
    n = out.size
    z = _splitmix_outputs(state, n)
    np.multiply((z >> _S11).astype(np.float64), _TWO_NEG53, out=out)
    return (state + n * _GAMMA) & _MASK64


def fill_mask(state, s, out):
    """Fill `out` with 0.0/1.0 Bernoulli(s) draws; return the advanced state."""
    n = out.size
    z = _splitmix_outputs(state, n)
    u = (z >> _S11).astype(np.float64) * _TWO_NEG53
    out[:] = u < s
    return (state + n * _GAMMA) & _MASK64


def adam_update(params, grad, m, v, b1t, b2t, bc1, bc2, lr, eps):
    """Fused moment update + bias-corrected parameter step, in place.

    m <- b1t*m + (1-b1t)*grad
    v <- b2t*v + (1-b2t)*grad^2
    params <- params - lr * (m/bc1) / (sqrt(v/bc2) + eps)
    """
    np.multiply(m, b1t, out=m)
    m += (1.0 - b1t) * grad
    np.multiply(v, b2t, out=v)
    v += (1.0 - b2t) * (grad * grad)
    params -= lr * (m / bc1) / (np.sqrt(v / bc2) + eps)


def rmsprop_update(params, grad, v, rho, lr, eps):
    """v <- rho*v + (1-rho)*grad^2; params <- params - lr*grad/(sqrt(v)+eps)."""
    np.multiply(v, rho, out=v)
    v += (1.0 - rho) * (grad * grad)
    params -= lr * grad / (np.sqrt(v) + eps)


def sgd_momentum_update(params, grad, m, beta1, lr):
    """m <- beta1*m + grad; params <- params - lr*m."""
    np.multiply(m, beta1, out=m)
    m += grad
    params -= lr * m
