"""Backend selection for grid component labeling.

The compiled Cython kernel (:mod:`robinsq._labelext`) is preferred; if the
extension failed to build or import, the pure-Python run-based implementation
(:mod:`robinsq._labelpure`) is used with identical semantics.  The active
backend name is exposed as :data:`BACKEND`.
"""

from __future__ import annotations

import numpy as np

from . import _labelpure

try:  # pragma: no cover - exercised through whichever backend is present
    from . import _labelext

    _impl = _labelext.label4
    BACKEND = "cython"
except ImportError:  # pragma: no cover
    _impl = _labelpure.label4
    BACKEND = "pure"

__all__ = ["label_components", "available_backends", "BACKEND"]


def label_components(signs: np.ndarray):
    """4-connected components of an int8 sign grid (values -1, 0, +1).

    Returns ``(labels, count)``: an int32 grid of compact component ids with
    ``-1`` on zero (masked) samples, and the component count.
    """
    signs = np.ascontiguousarray(signs, dtype=np.int8)
    return _impl(signs)


def available_backends() -> dict:
    """Mapping of backend name to its ``label4`` callable, for benchmarks."""
    out = {"pure": _labelpure.label4}
    if BACKEND == "cython":
        out["cython"] = _impl
    return out
