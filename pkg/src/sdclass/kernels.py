"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
numpy/pure-Python ``_pykernels`` twin.  Set ``SDCLASS_PURE_PYTHON=1`` to
force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("SDCLASS_PURE_PYTHON"):
    try:
        from . import _kernels as compiled_backend  # type: ignore[no-redef]
    except ImportError:
        compiled_backend = None

_impl = compiled_backend if compiled_backend is not None else python_backend

BACKEND = "compiled" if _impl is compiled_backend else "python"

weight_distribution = _impl.weight_distribution
collect_words = _impl.collect_words
covering_radius = _impl.covering_radius
orbits = _impl.orbits
refine = _impl.refine
rref_words = _impl.rref_words
permuted_rref = _impl.permuted_rref

__all__ = [
    "BACKEND",
    "collect_words",
    "compiled_backend",
    "covering_radius",
    "orbits",
    "permuted_rref",
    "python_backend",
    "refine",
    "rref_words",
    "weight_distribution",
]
