"""Kernel backend selection.

The package ships a compiled extension (``_kernel_cy``, built from Cython)
and a pure-Python twin (``_kernel_py``) with identical behavior.  By default
the compiled kernel is used when importable.  Set ``SUPCLIF_BACKEND`` to
``python`` to force the pure fallback or to ``cython`` to require the
extension.
"""

import os

_CHOICE = os.environ.get("SUPCLIF_BACKEND", "auto").strip().lower() or "auto"

if _CHOICE in ("python", "py", "pure"):
    from . import _kernel_py as kernel

    backend_name = "python"
elif _CHOICE in ("cython", "compiled", "c"):
    from . import _kernel_cy as kernel  # type: ignore[no-redef]

    backend_name = "cython"
elif _CHOICE == "auto":
    try:
        from . import _kernel_cy as kernel  # type: ignore[no-redef]

        backend_name = "cython"
    except ImportError:
        from . import _kernel_py as kernel

        backend_name = "python"
else:
    raise RuntimeError(
        f"unrecognized SUPCLIF_BACKEND value {_CHOICE!r}; "
        "use 'auto', 'python' or 'cython'"
    )
