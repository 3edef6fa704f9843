"""Dense float64 tensor substrate with strict shape contracts.

Tensors are plain C-contiguous float64 numpy arrays. The operations here
never broadcast: shapes must match exactly, and bias-style additions go
through the explicit repeat_rows helper. All results are fresh arrays;
inputs are never mutated. With debug checks enabled (set_debug or
SGADAM_DEBUG=1) every result is verified finite.
"""

import os

import numpy as np

from .errors import ShapeError

_debug = os.environ.get("SGADAM_DEBUG", "") not in ("", "0")


def set_debug(flag):
    """Enable or disable post-operation finiteness assertions."""
    global _debug
    _debug = bool(flag)


def assert_finite(a, context=""):
    """Raise NonFiniteError if `a` contains NaN or Inf."""
    if not np.isfinite(a).all():
        from .errors import NonFiniteError

        bad = int(np.size(a) - np.isfinite(a).sum())
        where = f" in {context}" if context else ""
        raise NonFiniteError(f"{bad} non-finite value(s){where}")


def _checked(a):
    if _debug:
        assert_finite(a, "operation result")
    return a


def tensor(data, shape=None):
    """Build a validated C-contiguous float64 array.

    `data` may be nested sequences or an ndarray; `shape` optionally
    reshapes flat data. Non-finite values are rejected.
    """
    a = np.array(data, dtype=np.float64, order="C")
    if shape is not None:
        shape = tuple(int(x) for x in shape)
        if any(x <= 0 for x in shape):
            raise ShapeError(f"extents must be positive, got {shape}")
        expected = int(np.prod(shape))
        if a.size != expected:
            raise ShapeError(
                f"data length {a.size} does not match shape {shape} (= {expected})"
            )
        a = a.reshape(shape)
    assert_finite(a, "tensor construction")
    return a


def zeros(shape):
    """Zero tensor of the given shape."""
    return np.zeros(shape, dtype=np.float64)


def matmul(a, b):
    """Row-major matrix product of a[r x k] and b[k x c]."""
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeError(f"matmul needs rank-2 operands, got {a.shape} and {b.shape}")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"matmul inner dimensions disagree: {a.shape} x {b.shape}")
    return _checked(a @ b)


def ewise(a, b, op):
    """Elementwise add/sub/mul/div of identically shaped tensors.

    div raises ZeroDivisionError on any exact-zero denominator; callers
    that want a guarded division must add their own epsilon.
    """
    if a.shape != b.shape:
        raise ShapeError(f"ewise({op}) shapes differ: {a.shape} vs {b.shape}")
    if op == "add":
        return _checked(a + b)
    if op == "sub":
        return _checked(a - b)
    if op == "mul":
        return _checked(a * b)
    if op == "div":
        if (b == 0.0).any():
            raise ZeroDivisionError("ewise(div) with exact-zero denominator")
        return _checked(a / b)
    raise ValueError(f"unknown ewise op {op!r}")


def l2_norm(a):
    """sqrt(sum(x^2)) over every element."""
    a = np.asarray(a)
    return float(np.sqrt(np.sum(a * a)))


def linf_norm(a):
    """max(|x|) over every element (0 for empty input)."""
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a)))


def reduce_sum(a, axis):
    """Sum along one axis, reducing rank by one."""
    if not 0 <= axis < a.ndim:
        raise ShapeError(f"axis {axis} out of range for rank-{a.ndim} tensor")
    return _checked(np.sum(a, axis=axis))


def repeat_rows(row, n):
    """Stack a rank-1 tensor into n identical rows (explicit bias expansion)."""
    if row.ndim != 1:
        raise ShapeError(f"repeat_rows expects rank-1 input, got shape {row.shape}")
    return np.tile(row, (n, 1))
