"""numba shim.

Set ``ODDCOLOUR_DISABLE_JIT=1`` to force the pure-numpy kernels (also used
automatically when numba is missing).
"""
import os

_disabled = os.environ.get("ODDCOLOUR_DISABLE_JIT", "").strip().lower() in ("1", "true", "yes", "on")

try:
    if _disabled:
        raise ImportError
    from numba import njit
    JIT_AVAILABLE = True
except ImportError:
    JIT_AVAILABLE = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


def use_jit():
    return JIT_AVAILABLE
