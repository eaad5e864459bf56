"""Switch between numba-compiled kernels and the pure-numpy fallback.

Set ``INVGROUPOID_DISABLE_NUMBA=1`` to force the numpy path (useful for
debugging, or when numba is unavailable on a platform).
"""

import os

_DISABLED = os.environ.get("INVGROUPOID_DISABLE_NUMBA", "").strip().lower() in {
    "1",
    "true",
    "yes",
}

try:
    from numba import njit as _numba_njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _DISABLED


def njit(func=None, **kwargs):
    """``numba.njit`` when numba is importable, otherwise the identity decorator.

    The numba variant is always compiled when available (tests compare both
    paths); ``USE_NUMBA`` only picks which one the public kernels dispatch to.
    """
    if HAVE_NUMBA:
        kwargs.setdefault("cache", True)
        kwargs.setdefault("nogil", True)
        if func is not None:
            return _numba_njit(**kwargs)(func)
        return _numba_njit(**kwargs)
    if func is not None:
        return func
    return lambda f: f
