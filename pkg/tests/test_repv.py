import random

import pytest

from reacalc.charmap import ch, elementary, power_sum, trace_power
from reacalc.errors import NotScalar
from reacalc.hecke import basis
from reacalc.ncalg import MODIFIED, NCPoly, re_relations, reduce
from reacalc.repv import character_check, evaluate, rep_on_v, scalar_value
from reacalc.scalar import ONE, Q, qpow
from reacalc.spectral import character, classical_character, muhat_char, powersum_direct, powersum_hat_sym
from reacalc.symmetry import dj_symmetry
from reacalc.tensor import TensorOp


def test_dim_one():
    rep = rep_on_v(dj_symmetry(1))
    assert rep.image(0, 0) == TensorOp.from_sparse(1, 1, [(0, 0, qpow(-1))])


def test_flip_gives_matrix_units(flip2):
    rep = rep_on_v(flip2)
    for i in range(2):
        for j in range(2):
            unit = TensorOp.from_sparse(2, 1, [(i, j, ONE)])
            assert rep.image(i, j) == unit


def test_relations_vanish(dj2, dj3):
    for s in (dj2, dj3):
        rep = rep_on_v(s)
        for r in re_relations(s, MODIFIED).relations:
            assert evaluate(rep, r).is_zero()


def test_unit_and_scalar(dj2):
    rep = rep_on_v(dj2)
    assert evaluate(rep, NCPoly.const(2, 1)).is_identity()
    with pytest.raises(NotScalar):
        scalar_value(evaluate(rep, NCPoly.gen(2, 0, 0)))


def random_poly(rng, n=2):
    p = NCPoly.zero(n)
    for _ in range(3):
        w = NCPoly.const(n, rng.randint(-3, 3))
        for _ in range(rng.randint(0, 3)):
            w = w * NCPoly.gen(n, rng.randrange(n), rng.randrange(n))
        p = p + w.scale(Q ** rng.randint(-2, 2))
    return p


def test_homomorphism(dj2):
    rng = random.Random(7)
    rep = rep_on_v(dj2)
    for _ in range(20):
        a, b = random_poly(rng), random_poly(rng)
        assert evaluate(rep, a * b) == evaluate(rep, a) @ evaluate(rep, b)


def test_reduce_equal_evaluate_equal(dj2):
    rep = rep_on_v(dj2)
    rels = re_relations(dj2, MODIFIED)
    z = ch(dj2, MODIFIED, basis(3)[4]).expr
    assert evaluate(rep, reduce(z, rels, 4)) == evaluate(rep, z)


def test_central_elements_are_scalar(dj2):
    rep = rep_on_v(dj2)
    for m in (2, 3):
        for b in basis(m):
            scalar_value(evaluate(rep, ch(dj2, MODIFIED, b).expr))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_power_sum_character(dj2, k):
    rep = rep_on_v(dj2)
    c = scalar_value(evaluate(rep, trace_power(dj2, k)))
    assert c == character(powersum_hat_sym(k, 2), (1, 0), hat=True)
    assert c == powersum_direct(k, muhat_char((1, 0), 2), hat=True)
    assert character_check(dj2, power_sum(dj2, MODIFIED, k))


def test_p1_on_v(dj2):
    rep = rep_on_v(dj2)
    # Tr_R Lhat = sum C_i lhat_i^i acts by sum_i C_i B_i^i = q^{-4}
    assert scalar_value(evaluate(rep, trace_power(dj2, 1))) == qpow(-4)


def test_elementary_characters(dj2, dj3):
    for k in (1, 2):
        assert character_check(dj2, elementary(dj2, MODIFIED, k))
    assert character_check(dj3, power_sum(dj3, MODIFIED, 2))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_flip_classical_values(flip2, k):
    rep = rep_on_v(flip2)
    c = scalar_value(evaluate(rep, trace_power(flip2, k)))
    assert c == classical_character(k, (1, 0), 2) == 2 ** (k - 1)
    assert character_check(flip2, power_sum(flip2, MODIFIED, k))


def test_only_defining_module(dj2):
    with pytest.raises(NotImplementedError):
        character_check(dj2, power_sum(dj2, MODIFIED, 1), lam=(2, 0))
