"""Backend selection for the combine core.

The compiled extension is used when it was built; otherwise the pure-Python
twin takes over transparently.  Set ``PLOTKIN_WEF_BACKEND=python`` (or
``cython``) before import to force a choice; ``use_backend`` switches at
runtime, e.g. for benchmarking one against the other.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import _kernel_py

_BACKENDS = {"python": _kernel_py}
try:
    from . import _kernel_cy

    _BACKENDS["cython"] = _kernel_cy
except ImportError:
    pass

_forced = os.environ.get("PLOTKIN_WEF_BACKEND")
if _forced:
    if _forced not in _BACKENDS:
        raise ImportError(
            f"PLOTKIN_WEF_BACKEND={_forced!r} not available;"
            f" choices: {sorted(_BACKENDS)}"
        )
    _active = _forced
else:
    _active = "cython" if "cython" in _BACKENDS else "python"


def backend_name() -> str:
    """Name of the backend currently answering kernel calls."""
    return _active


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


@contextmanager
def use_backend(name: str):
    """Temporarily route kernel calls to the named backend."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; choices: {sorted(_BACKENDS)}")
    previous = _active
    _active = name
    try:
        yield
    finally:
        _active = previous


def combine_numerators(n, u_hat, v_hat, rows):
    return _BACKENDS[_active].combine_numerators(n, u_hat, v_hat, rows)


def single_weight_numerator(n, u_hat, v_hat, rows, w):
    return _BACKENDS[_active].single_weight_numerator(n, u_hat, v_hat, rows, w)
