"""Backend selection for the hot loops.

The compiled ``_core`` extension is used when it imports; otherwise the
pure-Python ``_pycore`` fallback. Set ``MATCHSIGN_PURE_PYTHON=1`` to force
the fallback.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType

from . import _pycore

__all__ = ["BACKEND", "load_backend", "available_backends",
           "enumerate_matchings", "matching_parities", "gf2_solve"]


def load_backend(name: str) -> ModuleType:
    if name == "python":
        return _pycore
    if name == "cython":
        return importlib.import_module("matchsign._core")
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> list:
    names = ["python"]
    try:
        load_backend("cython")
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


def _select() -> tuple:
    if os.environ.get("MATCHSIGN_PURE_PYTHON", "") not in ("", "0"):
        return "python", _pycore
    try:
        return "cython", load_backend("cython")
    except ImportError:
        return "python", _pycore


BACKEND, _impl = _select()

enumerate_matchings = _impl.enumerate_matchings
matching_parities = _impl.matching_parities
gf2_solve = _impl.gf2_solve
