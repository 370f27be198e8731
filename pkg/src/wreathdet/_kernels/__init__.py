"""Kernel backend selection.

The compiled Cython core is used when it was built; WREATHDET_PURE=1 forces
the pure-Python fallback. Both backends produce identical results; only the
speed differs (see benchmarks/bench_kernels.py).
"""

import os

from . import _pycore

if os.environ.get("WREATHDET_PURE") == "1":
    _impl = _pycore
else:
    try:
        from . import _cycore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pycore

BACKEND = _impl.BACKEND
nu_histogram_compose = _impl.nu_histogram_compose
nu_grouped_products = _impl.nu_grouped_products
cycle_count0 = _pycore.cycle_count0
