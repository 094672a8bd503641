"""Kernel backend selection.

Prefers the compiled extension; falls back to the numpy implementation.
Set CONDENS_PURE_PY=1 to force the fallback (used by the benchmark and to
test both paths).
"""

import os

if os.environ.get("CONDENS_PURE_PY"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

cd_lasso = kernels.cd_lasso
stump_scan = kernels.stump_scan


def backend_name() -> str:
    return kernels.BACKEND
