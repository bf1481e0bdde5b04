"""Kernel backend selection.

Prefers the compiled extension, falls back to the pure-Python twin.
Set ``SCENESYNC_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and by tests that exercise both code paths).
"""

import os

if os.environ.get("SCENESYNC_PURE_PYTHON") == "1":
    from scenesync import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from scenesync import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from scenesync import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"
