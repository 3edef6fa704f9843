"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-numpy
fallback is used otherwise. Set SGADAM_KERNELS=python or
SGADAM_KERNELS=compiled to force a backend (the latter raises if the
extension is missing). Both backends are bit-identical by contract.
"""

import os

from . import _kernels_py

_forced = os.environ.get("SGADAM_KERNELS", "").strip().lower()
if _forced not in ("", "python", "compiled"):
    raise ImportError(f"SGADAM_KERNELS must be 'python' or 'compiled', got {_forced!r}")

if _forced == "python":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        if _forced == "compiled":
            raise
        _impl = _kernels_py

BACKEND = _impl.BACKEND_NAME

fill_uniform = _impl.fill_uniform
fill_mask = _impl.fill_mask
adam_update = _impl.adam_update
rmsprop_update = _impl.rmsprop_update
sgd_momentum_update = _impl.sgd_momentum_update


def backend_name():
    """Name of the active kernel backend ('compiled' or 'python')."""
    return BACKEND
