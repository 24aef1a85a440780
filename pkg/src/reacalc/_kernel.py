"""Select the rational-function kernel: compiled if importable, else pure Python.

Set ``REACALC_PURE=1`` in the environment to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("REACALC_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ratfunc as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:  # extension not built
        from . import _ratfunc_py as _impl
else:
    from . import _ratfunc_py as _impl

normalize = _impl.normalize
f_add = _impl.f_add
f_sub = _impl.f_sub
f_mul = _impl.f_mul
f_div = _impl.f_div
p_trim = _impl.p_trim
p_add = _impl.p_add
p_sub = _impl.p_sub
p_mul = _impl.p_mul
p_neg = _impl.p_neg
p_gcd = _impl.p_gcd
p_divexact = _impl.p_divexact
