"""Kernel backend selection.

Prefers the compiled `_core` extension; falls back to the pure-Python
`_purepy` module when the extension is unavailable or ETA_META_PURE is set.
Both expose the same functions, so everything above this module is
backend-agnostic.
"""

from __future__ import annotations

import os

if os.environ.get("ETA_META_PURE"):
    from . import _purepy as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _purepy as _impl

BACKEND = _impl.BACKEND

Law = _impl.Law
mc_law = _impl.mc_law
dp_law = _impl.dp_law
table_law = _impl.table_law
mul = _impl.mul
inv = _impl.inv
power = _impl.power
mul_many = _impl.mul_many
power_map = _impl.power_map
conj_map = _impl.conj_map
element_orders = _impl.element_orders
cyclic_index = _impl.cyclic_index
cyclic_elements = _impl.cyclic_elements
closure = _impl.closure
subset_mul_table = _impl.subset_mul_table
