"""Exponent-kernel backend selection.

The compiled kernel (``_kernel_c``, Cython) is preferred when it was built;
``SKEWPBW_PURE=1`` in the environment forces the pure-Python twin. Both
expose the same functions on int tuples.
"""

import os

if os.environ.get("SKEWPBW_PURE"):
    from skewpbw import _kernel_py as _impl
else:
    try:
        from skewpbw import _kernel_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from skewpbw import _kernel_py as _impl

BACKEND = _impl.__name__.rsplit("_", 1)[-1]  # "py" or "c"

total_degree = _impl.total_degree
exp_add = _impl.exp_add
exp_sub = _impl.exp_sub
exp_max = _impl.exp_max
divides = _impl.divides
deglex_key = _impl.deglex_key
degrevlex_key = _impl.degrevlex_key
block_key = _impl.block_key
find_divisor = _impl.find_divisor
