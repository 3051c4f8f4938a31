"""Select the engine kernel at import time.

``MEMOTAB_BACKEND`` may be ``ext`` (compiled, error if missing), ``python``
(pure-Python fallback) or ``auto`` (default: compiled when importable).
"""

import os

_choice = os.environ.get("MEMOTAB_BACKEND", "auto").lower()
if _choice not in ("auto", "ext", "python"):
    raise ImportError(f"MEMOTAB_BACKEND must be auto, ext or python, not {_choice!r}")

if _choice == "python":
    from . import _engine_py as engine
else:
    try:
        from . import _engine_ext as engine
    except ImportError:
        if _choice == "ext":
            raise
        from . import _engine_py as engine

BACKEND = "python" if engine.__name__.endswith("_engine_py") else "ext"
