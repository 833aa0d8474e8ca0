"""Pick the hot-loop backend at import time.

The compiled extension is preferred; the pure-Python module is used when it
is missing or when ``TERNARITH_PURE_PYTHON=1`` is set.  Both modules are
reachable directly as :data:`python` and :data:`compiled` (``None`` if the
extension was not built) so tests and benchmarks can compare them.
"""
import os

from . import _pykernels as python

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and os.environ.get("TERNARITH_PURE_PYTHON", "") not in ("1", "true"):
    active = compiled
else:
    active = python

BACKEND = active.NAME


def available():
    """Backends that can be used in this interpreter, compiled first."""
    return [b for b in (compiled, python) if b is not None]
