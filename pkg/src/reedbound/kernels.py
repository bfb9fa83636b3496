"""Backend selection for the bitset kernels.

The compiled extension is used when importable; setting
``REEDBOUND_PURE_PYTHON=1`` forces the interpreted twin.
"""

import os

from . import _pykernels as python_backend
from ._pykernels import *  # noqa: F401,F403
from ._pykernels import MAX_ORDER, MIN_MISSED_EXACT_MAX, PROFILE_FIELDS  # noqa: F401

compiled_backend = None
if not os.environ.get("REEDBOUND_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

_HOT = (
    "clique", "greedy_coloring", "k_coloring", "chromatic", "max_matching",
    "matching_size", "matching_covered", "greedy_classes", "min_missed",
    "vertex_critical", "cojoin_subgraph", "profile", "sweep",
)

if compiled_backend is not None:
    for _name in _HOT:
        globals()[_name] = getattr(compiled_backend, _name)
    BACKEND = "cython"
else:
    BACKEND = "python"
