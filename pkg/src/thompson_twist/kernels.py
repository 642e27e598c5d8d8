"""Backend selection for the hot kernels.

The compiled extension is used when it imports; setting
``THOMPSON_TWIST_PURE=1`` forces the pure-Python twin.
"""

import os

from . import _pykernels

if os.environ.get("THOMPSON_TWIST_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND

normalize = _impl.normalize
add = _impl.add
sub = _impl.sub
mul = _impl.mul
mul_pow2 = _impl.mul_pow2
cmp = _impl.cmp
log2_ratio = _impl.log2_ratio
interp = _impl.interp
eval_f = _impl.eval_f
eval_periodic = _impl.eval_periodic
swap = _impl.swap
sort_unique = _impl.sort_unique
segment_slopes = _impl.segment_slopes
prune = _impl.prune
compose_f = _impl.compose_f
periodic_vertices = _impl.periodic_vertices
conj_vertices = _impl.conj_vertices


def available_backends():
    """Names of importable kernel modules, pure first."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
