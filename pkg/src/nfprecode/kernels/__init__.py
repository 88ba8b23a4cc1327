"""Channel-synthesis kernels with import-time backend selection.

The compiled Cython kernel is preferred when its extension module built;
otherwise the numpy implementation is used.  Set NFPRECODE_PURE_PYTHON=1
to force the numpy backend (used by tests and the benchmark).
"""

import os

from . import _spherical_np

try:
    from . import _spherical_cy
except ImportError:
    _spherical_cy = None

_FORCED_PURE = os.environ.get("NFPRECODE_PURE_PYTHON", "") not in ("", "0")

if _spherical_cy is not None and not _FORCED_PURE:
    _active = _spherical_cy
    BACKEND = "cython"
else:
    _active = _spherical_np
    BACKEND = "numpy"

HAVE_COMPILED = _spherical_cy is not None

channel_row = _active.channel_row


def backends():
    """Mapping of available backend name -> channel_row implementation."""
    out = {"numpy": _spherical_np.channel_row}
    if _spherical_cy is not None:
        out["cython"] = _spherical_cy.channel_row
    return out
