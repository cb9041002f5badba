"""Backend selection for the search kernels.

The compiled extension is used when it imports; set ``BELLGRAPH_PURE_PYTHON=1``
to force the pure-Python fallback.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("BELLGRAPH_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

active = compiled_backend if compiled_backend is not None else python_backend
BACKEND = active.BACKEND

search_embeddings = active.search_embeddings
canonical_order = active.canonical_order
pwh_search = active.pwh_search


def backends():
    """All importable kernel modules, compiled first."""
    return [b for b in (compiled_backend, python_backend) if b is not None]
