"""Hot stencil kernels with switchable backends.

Two implementations of every kernel exist: vectorized numpy and numba
``@njit`` loops.  The active one is chosen at import time from the
``FASMG_BACKEND`` environment variable (``numba`` or ``numpy``; default is
numba when importable) and can be switched at runtime with
:func:`use_backend`.

Both backends evaluate the same floating-point expressions in the same
association order and never enable fastmath, so results are bitwise
identical between them.  Reductions (norms, integrals, means) are not part
of this module: they always go through numpy's pairwise summation so that
convergence decisions do not depend on the backend.

Kernel index convention: arrays are "core" views where the array index
equals the grid index (cell interiors ``1..M`` with ghosts ``0``/``M+1``,
edge interiors ``1..M-1`` with boundary points ``0``/``M``).  Interior
bounds are passed explicitly and are inclusive.
"""

from __future__ import annotations

import os
import warnings

from . import numpy_backend

try:
    from . import numba_backend
except ImportError:  # pragma: no cover - numba absent
    numba_backend = None

_BACKENDS = {"numpy": numpy_backend}
if numba_backend is not None:
    _BACKENDS["numba"] = numba_backend

_KERNEL_NAMES = (
    "gs_sweep_2d", "gs_sweep_3d",
    "apply_op_2d", "apply_op_3d",
    "residual_2d", "residual_3d",
    "restrict_cc_2d", "restrict_cc_3d",
    "prolong_cc_2d", "prolong_cc_3d",
    "restrict_edge0_2d", "restrict_edge0_3d",
    "prolong_edge0_2d", "prolong_edge0_3d",
    "weno_deriv0_2d", "weno_deriv0_3d",
)

_active_name = None
_active = None


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def use_backend(name: str) -> str:
    """Select the kernel backend; returns the previously active name."""
    global _active_name, _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; have {available_backends()}")
    prev = _active_name
    _active_name = name
    _active = _BACKENDS[name]
    return prev


def active_backend() -> str:
    return _active_name


def _default_backend() -> str:
    env = os.environ.get("FASMG_BACKEND", "").strip().lower()
    if env:
        if env not in _BACKENDS:
            warnings.warn(
                f"FASMG_BACKEND={env!r} unavailable, falling back to numpy",
                RuntimeWarning,
            )
            return "numpy"
        return env
    return "numba" if "numba" in _BACKENDS else "numpy"


use_backend(_default_backend())


def _make_dispatcher(kernel_name):
    def dispatch(*args):
        return getattr(_active, kernel_name)(*args)

    dispatch.__name__ = kernel_name
    dispatch.__qualname__ = kernel_name
    dispatch.__doc__ = getattr(numpy_backend, kernel_name).__doc__
    return dispatch


for _name in _KERNEL_NAMES:
    globals()[_name] = _make_dispatcher(_name)

__all__ = list(_KERNEL_NAMES) + [
    "use_backend", "active_backend", "available_backends",
]
