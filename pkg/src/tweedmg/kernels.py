"""Relaxation-kernel backend selection.

The compiled extension (_ckernels) is preferred when it imported cleanly;
the numpy implementation (pykernels) is the fallback.  Setting the
environment variable TWEEDMG_PURE_PYTHON=1 forces the fallback.  Tests and
the benchmark switch backends explicitly via set_backend().
"""

import os

from . import pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

HAVE_EXT = _ckernels is not None

if HAVE_EXT and not os.environ.get("TWEEDMG_PURE_PYTHON"):
    _active = _ckernels
else:
    _active = pykernels


def active():
    """The currently selected kernel module."""
    return _active


def available() -> list[str]:
    return ["python"] + (["cython"] if HAVE_EXT else [])


def set_backend(name: str):
    """Select 'python' or 'cython'; returns the previous backend name."""
    global _active
    prev = _active.NAME
    if name == "python":
        _active = pykernels
    elif name == "cython":
        if not HAVE_EXT:
            raise RuntimeError("compiled kernels are not available")
        _active = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    return prev
