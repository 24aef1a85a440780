import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reacalc import _kernel, _ratfunc_py

compiled = pytest.importorskip("reacalc._ratfunc")

poly = st.lists(st.integers(-(2**40), 2**40), max_size=7).map(_ratfunc_py.p_trim)
small_poly = st.lists(st.integers(-20, 20), max_size=6).map(_ratfunc_py.p_trim)
nz_poly = small_poly.filter(bool)


@settings(max_examples=100, deadline=None)
@given(poly, poly)
def test_ring_ops_agree(a, b):
    for name in ("p_add", "p_sub", "p_mul", "p_gcd"):
        assert getattr(compiled, name)(a, b) == getattr(_ratfunc_py, name)(a, b)


@settings(max_examples=100, deadline=None)
@given(small_poly, nz_poly, small_poly, nz_poly)
def test_fraction_ops_agree(n1, d1, n2, d2):
    x = _ratfunc_py.normalize(n1, d1)
    y = _ratfunc_py.normalize(n2, d2)
    assert compiled.normalize(n1, d1) == x
    for name in ("f_add", "f_sub", "f_mul"):
        assert getattr(compiled, name)(*x, *y) == getattr(_ratfunc_py, name)(*x, *y)
    if y[0]:
        assert compiled.f_div(*x, *y) == _ratfunc_py.f_div(*x, *y)


def test_large_coefficients_fall_back():
    a = (2**70, 1, -(2**65))
    assert compiled.p_mul(a, a) == _ratfunc_py.p_mul(a, a)


def test_backend_selection():
    assert _kernel.BACKEND in ("compiled", "python")
    env = dict(os.environ, REACALC_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import reacalc; print(reacalc.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
