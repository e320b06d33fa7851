"""Backend selection for the nested-sum kernels.

The compiled ``_ckernels`` module is used when it was built; otherwise (or
when ``FILIFORM_PURE_PYTHON`` is set to a non-empty value other than ``0``)
the pure-Python ``_pykernels`` is used.  Both expose the same functions and
return identical values.
"""

import os

from . import _pykernels

if os.environ.get("FILIFORM_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"
    else:
        BACKEND = "cython"

chain_sum = _impl.chain_sum
bracket_naive = _impl.bracket_naive
bracket_table_naive = _impl.bracket_table_naive
bracket_table_dp = _impl.bracket_table_dp
phi_values = _impl.phi_values


def available_backends() -> dict:
    """Name -> module for every backend importable in this process."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
