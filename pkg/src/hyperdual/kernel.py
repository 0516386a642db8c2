"""Kernel backend selection.

The compiled ``_kernel`` extension is used when it was built; otherwise
the pure-Python ``_kernel_py`` stands in with identical results.  Set
``HYPERDUAL_BACKEND=python`` to force the fallback.
"""
import os

from . import _kernel_py

if os.environ.get("HYPERDUAL_BACKEND", "").lower() == "python":
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl
    except ImportError:
        _impl = _kernel_py

Kernel = _impl.Kernel
BACKEND = _impl.BACKEND
PyKernel = _kernel_py.Kernel


def compiled_kernel():
    """The compiled ``Kernel`` class, or None when the extension is absent."""
    try:
        from . import _kernel
    except ImportError:
        return None
    return _kernel.Kernel
