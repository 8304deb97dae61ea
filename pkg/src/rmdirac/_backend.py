"""Selection between numba-compiled kernels and the pure numpy path.

Set ``RMDIRAC_NUMBA=0`` in the environment to force the numpy path.  The flag
is read once at import time.
"""

import os

_FLAG = os.environ.get("RMDIRAC_NUMBA", "1").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and _FLAG not in ("0", "false", "no", "off")


def njit(fn):
    """Compile ``fn`` with numba when available, else return it unchanged."""
    if numba is None:
        return fn
    return numba.njit(cache=True)(fn)


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
