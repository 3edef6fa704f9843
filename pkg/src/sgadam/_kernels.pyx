# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot per-element loops.

Expression structure must stay in lockstep with _kernels_py.py: both
backends are required to produce bit-identical results (the build passes
-ffp-contract=off so the compiler cannot fuse multiply-adds).
"""

from libc.math cimport sqrt
from libc.stdint cimport uint64_t

BACKEND_NAME = "compiled"

cdef uint64_t GAMMA = 0x9E3779B97F4A7C15ULL
cdef uint64_t MIX1 = 0xBF58476D1CE4E5B9ULL
cdef uint64_t MIX2 = 0x94D049BB133111EBULL
cdef double TWO_NEG53 = 2.0 ** -53


cdef inline double _next_uniform(uint64_t *state) noexcept nogil:
    cdef uint64_t z
    state[0] = state[0] + GAMMA
    z = state[0]
    z = (z ^ (z >> 30)) * MIX1
    z = (z ^ (z >> 27)) * MIX2
    z = z ^ (z >> 31)
    return <double> (z >> 11) * TWO_NEG53


def fill_uniform(state, double[::1] out):
    """Fill `out` with uniforms in [0, 1); return the advanced state."""
    cdef uint64_t s = <uint64_t> state
    cdef Py_ssize_t i, n = out.shape[0]
    with nogil:
        for i in range(n):
            out[i] = _next_uniform(&s)
    return int(s)


def fill_mask(state, double thresh, double[::1] out):
    """Fill `out` with 0.0/1.0 Bernoulli(thresh) draws; return the advanced state."""
    cdef uint64_t s = <uint64_t> state
    cdef Py_ssize_t i, n = out.shape[0]
    with nogil:
        for i in range(n):
            out[i] = 1.0 if _next_uniform(&s) < thresh else 0.0
    return int(s)


def adam_update(double[::1] params, double[::1] grad, double[::1] m,
                double[::1] v, double b1t, double b2t, double bc1,
                double bc2, double lr, double eps):
    """Fused moment update + bias-corrected parameter step, in place."""
    cdef Py_ssize_t i, n = params.shape[0]
    cdef double c1 = 1.0 - b1t
    cdef double c2 = 1.0 - b2t
    with nogil:
        for i in range(n):
            m[i] = b1t * m[i] + c1 * grad[i]
            v[i] = b2t * v[i] + c2 * (grad[i] * grad[i])
            params[i] = params[i] - lr * (m[i] / bc1) / (sqrt(v[i] / bc2) + eps)


def rmsprop_update(double[::1] params, double[::1] grad, double[::1] v,
                   double rho, double lr, double eps):
    """v <- rho*v + (1-rho)*grad^2; params <- params - lr*grad/(sqrt(v)+eps)."""
    cdef Py_ssize_t i, n = params.shape[0]
    cdef double c = 1.0 - rho
    with nogil:
        for i in range(n):
            v[i] = rho * v[i] + c * (grad[i] * grad[i])
            params[i] = params[i] - lr * grad[i] / (sqrt(v[i]) + eps)


def sgd_momentum_update(double[::1] params, double[::1] grad, double[::1] m,
                        double beta1, double lr):
    """m <- beta1*m + grad; params <- params - lr*m."""
    cdef Py_ssize_t i, n = params.shape[0]
    with nogil:
        for i in range(n):
            m[i] = beta1 * m[i] + grad[i]
            params[i] = params[i] - lr * m[i]
