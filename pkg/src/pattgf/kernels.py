"""Kernel selection: compiled core if built, pure Python otherwise.

Set ``PATTGF_PURE_PYTHON=1`` to force the fallback (used by the test
suite and the benchmark to compare both backends).
"""

from __future__ import annotations

import os

if os.environ.get("PATTGF_PURE_PYTHON") == "1":
    from ._kernel_py import BACKEND_NAME, count_constrained
else:
    try:
        from ._core import BACKEND_NAME, count_constrained  # type: ignore[attr-defined]
    except ImportError:
        from ._kernel_py import BACKEND_NAME, count_constrained

__all__ = ["BACKEND_NAME", "count_constrained"]
