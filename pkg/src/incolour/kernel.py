"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``INCOLOUR_PURE=1`` in the environment to force the pure-Python kernel
(used by the parity tests and the benchmark).
"""

from __future__ import annotations

import os

from . import _pykernel

FOUND = _pykernel.FOUND
EXHAUSTED = _pykernel.EXHAUSTED
CUTOFF = _pykernel.CUTOFF

_BACKENDS = {"python": _pykernel}
try:  # pragma: no cover - depends on the build environment
    from . import _ckernel  # type: ignore[attr-defined]

    _BACKENDS["c"] = _ckernel
except ImportError:  # pragma: no cover
    _ckernel = None

_active = "python" if (os.environ.get("INCOLOUR_PURE") or "c" not in _BACKENDS) else "c"


def backend_name() -> str:
    return _active


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def set_backend(name: str) -> None:
    """Switch kernels at runtime (benchmark / parity-test hook)."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"kernel backend {name!r} not available")
    _active = name


def search(nv, dom_off, dom_val, adj_off, adj, use_mrv, node_budget, deadline):
    return _BACKENDS[_active].search(
        nv, dom_off, dom_val, adj_off, adj, use_mrv, node_budget, deadline
    )
