"""Backend selection for the hot elimination loops.

The compiled ``_ckernels`` extension handles prime fields; the rationals
(and any environment without the extension) use ``_pykernels``.  Set
``MASSEYCRIT_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels as _py
from .algebra.fields import Field

_c = None
if not os.environ.get("MASSEYCRIT_PURE_PYTHON"):
    try:
        from . import _ckernels as _c  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _c = None

BACKEND = "cython" if _c is not None else "python"

_MAX_P = 1 << 31


def _compiled(F: Field) -> bool:
    return _c is not None and 0 < F.p < _MAX_P


def reduce_columns(cols, F: Field, track: bool = True):
    if _compiled(F):
        return _c.reduce_columns_modp(cols, F.p, track)
    return _py.reduce_columns(cols, F, track)


def dvr_reduce(cols, F: Field, track: bool = False):
    if _compiled(F):
        return _c.dvr_reduce_modp(cols, F.p, track)
    return _py.dvr_reduce(cols, F, track)


def fraction_free_rank(cols, F: Field) -> int:
    if _compiled(F):
        return _c.fraction_free_rank_modp(cols, F.p)
    return _py.fraction_free_rank(cols, F)
