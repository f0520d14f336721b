"""Backend selector for the GF(p) elimination kernels.

The Cython extension is optional: built when Cython + a C compiler are
around (see setup.py), otherwise the pure-Python twin takes over with
identical semantics.  BACKEND tells you which one you got.
"""

try:
    from . import _modp_cy as _impl
    BACKEND = "cython"
except ImportError:  # extension not built - fall back
    from . import _modp as _impl
    BACKEND = "python"

rref_mod = _impl.rref_mod
rank_mod = _impl.rank_mod
mat_mul_mod = _impl.mat_mul_mod
