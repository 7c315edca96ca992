"""Select the compiled Groebner kernels when available.

``SLACKKIT_PURE=1`` forces the pure-Python fallback.  :func:`use` switches
implementations at runtime (benchmarks and equivalence tests).
"""

import os
from contextlib import contextmanager

from . import _pykernels

python_kernels = _pykernels
compiled_kernels = None

if os.environ.get("SLACKKIT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_kernels  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled_kernels = None

active = compiled_kernels if compiled_kernels is not None else python_kernels

reduce_terms = active.reduce_terms
reduce_spoly = active.reduce_spoly
spoly_terms = active.spoly_terms
IMPLEMENTATION = active.IMPLEMENTATION


def _install(mod) -> None:
    global active, reduce_terms, reduce_spoly, spoly_terms, IMPLEMENTATION
    active = mod
    reduce_terms = mod.reduce_terms
    reduce_spoly = mod.reduce_spoly
    spoly_terms = mod.spoly_terms
    IMPLEMENTATION = mod.IMPLEMENTATION


@contextmanager
def use(name: str):
    """Temporarily route the kernels to ``"python"`` or ``"cython"``."""
    if name == "python":
        mod = python_kernels
    elif name == "cython":
        if compiled_kernels is None:
            raise RuntimeError("compiled kernels are not built")
        mod = compiled_kernels
    else:
        raise ValueError(f"unknown kernel implementation {name!r}")
    prev = active
    _install(mod)
    try:
        yield mod
    finally:
        _install(prev)


__all__ = ["reduce_terms", "reduce_spoly", "spoly_terms", "IMPLEMENTATION", "python_kernels", "compiled_kernels", "use"]
