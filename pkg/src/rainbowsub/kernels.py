"""Kernel backend selection.

The compiled extension is used when it imports; otherwise, or when
``RAINBOWSUB_PURE_PYTHON`` is set to a non-empty value, the pure-Python
twins are used.  Both produce identical results.
"""

from __future__ import annotations

import os

from . import _pykernels

python_backend = _pykernels

try:
    if os.environ.get("RAINBOWSUB_PURE_PYTHON"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels as compiled_backend
except ImportError:
    compiled_backend = None

_active = compiled_backend or python_backend
BACKEND = "cython" if compiled_backend is not None and _active is compiled_backend else "python"

greedy_color = _active.greedy_color
peel = _active.peel
reach_rounds = _active.reach_rounds
