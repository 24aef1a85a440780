from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reacalc.errors import IndexOutOfRange, ParseError, StrandMismatch
from reacalc.hecke import (
    HeckeElement,
    basis,
    gen,
    multiply,
    parse_hecke,
    perm_from_word,
    reduced_word,
    rho,
    specialize_q1,
    unit,
    zk,
)
from reacalc.scalar import KAPPA, Q, qpow
from reacalc.symmetry import dj_symmetry, flip
from reacalc.tensor import identity


def test_quadratic_relation():
    t = gen(1, 2)
    assert t * t == unit(2) + t.scale(KAPPA)
    # (tau - q)(tau + q^{-1}) = 0
    assert (t - unit(2).scale(Q)) * (t + unit(2).scale(qpow(-1))) == HeckeElement(2)


def test_braid_relation():
    t1, t2 = gen(1, 3), gen(2, 3)
    assert t1 * t2 * t1 == t2 * t1 * t2
    t3 = gen(3, 4)
    assert gen(1, 4) * t3 == t3 * gen(1, 4)


def test_basis_size_and_words():
    assert len(basis(3)) == 6
    assert len(basis(4)) == 24
    for w in permutations(range(4)):
        assert perm_from_word(reduced_word(w), 4) == w


def test_group_algebra_at_kappa_zero():
    t = gen(1, 2)
    assert multiply(t, t, kappa=0) == unit(2)


def test_zk():
    assert zk(3, 3) == gen(2, 3) * gen(1, 3)
    assert zk(2, 4) == gen(1, 4)
    with pytest.raises(IndexOutOfRange):
        zk(1, 3)


def test_errors():
    with pytest.raises(IndexOutOfRange):
        gen(3, 3)
    with pytest.raises(StrandMismatch):
        gen(1, 2) + gen(1, 3)
    with pytest.raises(ParseError):
        parse_hecke("", 3)


def test_parse():
    assert parse_hecke("t1.t2", 3) == gen(1, 3) * gen(2, 3)
    assert parse_hecke("e", 2) == unit(2)
    h = parse_hecke("(q-1/q) * t2 - 3 * e + t1.t1", 3)
    assert h == gen(2, 3).scale(KAPPA) - unit(3).scale(3) + gen(1, 3) * gen(1, 3)
    assert parse_hecke(str(h), 3) == h


def test_specialize():
    h = gen(1, 2).scale(Q + 1)
    assert specialize_q1(h) == gen(1, 2).scale(2)


elements3 = st.lists(
    st.tuples(st.sampled_from(list(permutations(range(3)))), st.integers(-3, 3)), max_size=4
).map(lambda ts: HeckeElement(3, {w: c for w, c in ts}))


@settings(max_examples=40, deadline=None)
@given(elements3, elements3, elements3)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("make", [lambda: dj_symmetry(2), lambda: flip(2)])
def test_rho_is_homomorphism(make):
    s = make()
    els = basis(3)
    for a in els:
        for b in els:
            assert rho(s, a * b) == rho(s, a) @ rho(s, b)
    assert rho(s, unit(3)) == identity(s.dim_v, 3)
