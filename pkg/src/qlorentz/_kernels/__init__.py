"""Kernel backend selection.

The compiled Cython core is preferred when importable; the pure-numpy
implementation is the fallback.  Set QLORENTZ_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os

from . import _py

BACKEND = "python"
wigner_d_batch = _py.wigner_d_batch
pair_apply = _py.pair_apply
pair_spin_density = _py.pair_spin_density

if not os.environ.get("QLORENTZ_PURE"):
    try:
        from . import _core

        BACKEND = "compiled"
        wigner_d_batch = _core.wigner_d_batch
        pair_apply = _core.pair_apply
        pair_spin_density = _core.pair_spin_density
    except ImportError:
        pass

__all__ = ["BACKEND", "wigner_d_batch", "pair_apply", "pair_spin_density"]
