"""Search-kernel backend selection.

The compiled extension is preferred when importable; the pure-Python twin
is the fallback.  Set ``TOKEN_COVERS_SEARCH=python`` to force the fallback
(used by the benchmark and for debugging).
"""

from __future__ import annotations

import os

if os.environ.get("TOKEN_COVERS_SEARCH", "").lower() in ("py", "python", "pure"):
    from . import _search_py as _impl
else:
    try:
        from . import _search_c as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _search_py as _impl  # type: ignore[no-redef]

BACKEND = _impl.BACKEND_NAME

automorphism_generators = _impl.automorphism_generators
isomorphism_witness = _impl.isomorphism_witness
