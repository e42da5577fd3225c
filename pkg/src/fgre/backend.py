"""Selects the arithmetic kernel backend at import time.

The compiled extension (fgre._kernels) is preferred; the pure-Python twin
is the fallback.  Set FGRE_PURE_KERNELS=1 to force the pure twin, e.g. to
benchmark or to rule the extension out while debugging.
"""

import os

if os.environ.get("FGRE_PURE_KERNELS"):
    from fgre import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from fgre import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from fgre import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"
