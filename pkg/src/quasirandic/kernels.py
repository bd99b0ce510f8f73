"""Backend selection for the hot kernels.

The compiled ``_ckernels`` extension is used when importable; otherwise, or
when ``QUASIRANDIC_PURE_PYTHON`` is set to a non-empty value, the pure-Python
``_purepy`` module is used.  Both expose ``deletion_search``,
``min_deletion``, ``scan`` and ``canonical_code`` with identical results.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType

from . import _purepy


def _select() -> ModuleType:
    if os.environ.get("QUASIRANDIC_PURE_PYTHON"):
        return _purepy
    try:
        return importlib.import_module("quasirandic._ckernels")
    except ImportError:
        return _purepy


def available_backends() -> dict[str, ModuleType]:
    out = {"python": _purepy}
    try:
        out["cython"] = importlib.import_module("quasirandic._ckernels")
    except ImportError:
        pass
    return out


impl = _select()
BACKEND: str = impl.NAME

deletion_search = impl.deletion_search
min_deletion = impl.min_deletion
scan = impl.scan
canonical_code = impl.canonical_code
