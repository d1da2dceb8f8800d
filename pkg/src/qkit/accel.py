"""Numba acceleration switch.

Hot kernels in :mod:`qkit.kernels` are compiled with numba when it is
importable and ``QKIT_DISABLE_NUMBA`` is unset.  Setting the variable to
``1`` (or ``true``/``yes``) forces the pure-numpy fallback paths, which
produce bit-identical results at lower speed.
"""

import os

_disabled = os.environ.get("QKIT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

NUMBA_ENABLED = False
if not _disabled:
    try:
        from numba import njit

        NUMBA_ENABLED = True
    except ImportError:
        pass

if not NUMBA_ENABLED:

    def njit(*args, **kwargs):
        """Pass-through decorator used when numba is disabled or missing."""
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap
