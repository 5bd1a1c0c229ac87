"""Backend selection for the Metropolis sweep kernel.

The compiled extension is preferred; the pure-Python twin is used when the
extension is unavailable or when RINGTST_FORCE_PY is set (handy for the
backend-equivalence tests and the benchmark).
"""
from __future__ import annotations

import os

if os.environ.get("RINGTST_FORCE_PY"):
    from . import _ring_kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _ring_kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _ring_kernels_py as _impl

        BACKEND = "python"

run_sweeps = _impl.run_sweeps


def get_backend(name: str | None = None):
    """Return (run_sweeps, backend_name); name forces a specific backend."""
    if name is None:
        return run_sweeps, BACKEND
    if name == "python":
        from . import _ring_kernels_py

        return _ring_kernels_py.run_sweeps, "python"
    if name == "compiled":
        from . import _ring_kernels  # type: ignore[attr-defined]

        return _ring_kernels.run_sweeps, "compiled"
    raise ValueError(f"unknown kernel backend: {name!r}")
