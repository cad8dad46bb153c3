"""Backend selection for the hot term-map kernels.

Prefers the compiled extension (qrr._kernels_c) when it was built; falls
back to the pure-Python twin otherwise. Set QRR_PURE=1 in the environment
to force the fallback (used by the benchmark and by tests that cross-check
the two implementations).
"""

import os

if os.environ.get("QRR_PURE") == "1":
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

add_terms = _impl.add_terms
mul_terms = _impl.mul_terms
scale_shift_terms = _impl.scale_shift_terms


def backend_name() -> str:
    """Name of the active kernel backend: "c" or "python"."""
    return BACKEND
