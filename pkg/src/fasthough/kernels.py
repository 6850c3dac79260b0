"""Backend selection for the hot kernels.

The compiled extension (``fasthough._core``, built from ``_core.pyx``) and
the numpy fallback (``fasthough._core_py``) implement the same functions
with bit-identical results.  The extension is preferred when importable;
set ``FHT_BACKEND=c`` or ``FHT_BACKEND=py`` to force one side (``c`` raises
if the extension is missing).
"""

from __future__ import annotations

import os

from . import _core_py

_c_backend = None
try:
    from . import _core as _c_backend  # type: ignore[attr-defined]
except ImportError:
    _c_backend = None

_requested = os.environ.get("FHT_BACKEND", "auto").lower()
if _requested == "py":
    _impl = _core_py
elif _requested == "c":
    if _c_backend is None:
        raise ImportError(
            "FHT_BACKEND=c but the fasthough._core extension is not built")
    _impl = _c_backend
elif _requested == "auto":
    _impl = _c_backend if _c_backend is not None else _core_py
else:
    raise ValueError(f"unknown FHT_BACKEND value: {_requested!r}")

BACKEND = _impl.NAME

per_slope_max = _impl.per_slope_max
per_slope_max_range = _impl.per_slope_max_range
hist_counts = _impl.hist_counts
hist_counts_range = _impl.hist_counts_range
table_sums = _impl.table_sums
table_sums_range = _impl.table_sums_range
fht_accumulate = _impl.fht_accumulate


def available_backends() -> tuple[str, ...]:
    return ("c", "py") if _c_backend is not None else ("py",)


def get_backend(name: str):
    """Return a specific backend module (for benchmarks and parity tests)."""
    if name == "py":
        return _core_py
    if name == "c":
        if _c_backend is None:
            raise ValueError("compiled backend is not available")
        return _c_backend
    raise ValueError(f"unknown backend {name!r}")
