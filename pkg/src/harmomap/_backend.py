"""Kernel backend selection.

The compiled extension is preferred when present; set HARMOMAP_KERNELS=py
to force the NumPy fallback (used by the benchmark for comparison).
"""

from __future__ import annotations

import os

if os.environ.get("HARMOMAP_KERNELS", "").lower() in {"py", "python"}:
    from harmomap import _kernels_py as kernels
else:
    try:
        from harmomap import _kernels  # type: ignore[attr-defined]

        kernels = _kernels
    except ImportError:
        from harmomap import _kernels_py as kernels

BACKEND = kernels.BACKEND_NAME

__all__ = ["kernels", "BACKEND"]
