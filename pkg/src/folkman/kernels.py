"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
kernels are used. Setting ``FOLKMAN_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("FOLKMAN_PURE_PYTHON", "") not in ("", "0"):
    from folkman import _pykernels as _impl
else:
    try:
        from folkman import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from folkman import _pykernels as _impl

BACKEND = _impl.BACKEND
max_clique = _impl.max_clique
count_cliques = _impl.count_cliques
flip_deltas = _impl.flip_deltas
color_search = _impl.color_search
