from itertools import permutations

import pytest

from reacalc.charmap import (
    cayley_hamilton_check,
    ch,
    ch_poly_modified,
    ch_right,
    classical_weight,
    elementary,
    l_bar,
    power_sum,
    substitute_matrix,
    trace_power,
    weight_system,
)
from reacalc.errors import ZeroSymmetrizer
from reacalc.hecke import basis, gen, unit, zk
from reacalc.ncalg import MODIFIED, RE, NCPoly, generator_matrix, is_central, re_relations, reduce
from reacalc.scalar import KAPPA, qpow
from reacalc.symmetry import dj_symmetry


def same(a, b, rels, d=4):
    return reduce(a - b, rels, d).is_zero()


def g(i, j, n=2):
    return NCPoly.gen(n, i, j)


def test_p1_is_e1(dj2):
    assert trace_power(dj2, 1) == elementary(dj2, RE, 1).expr
    # Tr_R L = q^{-3} l_1^1 + q^{-1} l_2^2 for dj(2)
    assert trace_power(dj2, 1) == g(0, 0).scale(qpow(-3)) + g(1, 1).scale(qpow(-1))


def test_ch_of_unit_and_identity(dj2):
    # ch(1_1) = Tr_R L
    assert ch(dj2, RE, unit(1)).expr == trace_power(dj2, 1)
    assert ch(dj2, RE, unit(2)).expr == trace_power(dj2, 1) * trace_power(dj2, 1)


@pytest.mark.parametrize("variant", [RE, MODIFIED])
@pytest.mark.parametrize("n", [2, 3])
def test_ch_zn_is_power_trace(dj2, variant, n):
    rels = re_relations(dj2, variant)
    assert same(ch(dj2, variant, zk(n, n)).expr, trace_power(dj2, n), rels)


@pytest.mark.parametrize("variant", [RE, MODIFIED])
def test_central_elements(dj2, variant):
    rels = re_relations(dj2, variant)
    for k in (1, 2, 3):
        assert power_sum(dj2, variant, k, check_degree=4).central
    for k in (1, 2):
        assert elementary(dj2, variant, k, check_degree=4).central
    for b in basis(3):
        assert is_central(ch(dj2, variant, b).expr, rels, 4)


def test_zero_symmetrizer(dj2):
    with pytest.raises(ZeroSymmetrizer):
        elementary(dj2, RE, 3)


def test_left_and_right_orderings_agree(dj2):
    for b in basis(3):
        assert ch(dj2, RE, b).expr == ch_right(dj2, b)


def test_worked_identities(dj2):
    re_ = re_relations(dj2, RE)
    mod = re_relations(dj2, MODIFIED)
    t1, t2 = gen(1, 3), gen(2, 3)
    p1, p2, p3 = (trace_power(dj2, k) for k in (1, 2, 3))
    assert same(weight_system(dj2, RE, t1 * t2).expr, p3, re_)
    assert same(weight_system(dj2, RE, t1 * t2).expr, weight_system(dj2, RE, t2 * t1).expr, re_)
    assert not same(weight_system(dj2, MODIFIED, t1 * t2).expr, weight_system(dj2, MODIFIED, t2 * t1).expr, mod)
    for variant, rels in ((RE, re_), (MODIFIED, mod)):
        w = weight_system(dj2, variant, t1 * t2 * t1).expr
        assert same(w, p1 * p2 + p3.scale(KAPPA), rels)
        # a consequence of the relations, not a free identity
        assert w != p1 * p2 + p3.scale(KAPPA)


@pytest.mark.parametrize("make", [lambda: dj_symmetry(2), lambda: dj_symmetry(3)])
def test_w_mod_t1t2_with_trace_of_identity(make):
    s = make()
    rels = re_relations(s, MODIFIED)
    p1, p2, p3 = (trace_power(s, k) for k in (1, 2, 3))
    w = weight_system(s, MODIFIED, gen(1, 3) * gen(2, 3)).expr
    assert same(w, p3 + p1 * p1 - p2.scale(s.tr_r_identity()), rels)
    assert not same(w, p3 + p1 * p1 - p2, rels)


def test_w_t1t2_classical(flip2):
    # sum l_a^b l_b^c l_c^a over the cyclic word reduces to p3 + p1^2 - N p2
    rels = re_relations(flip2, MODIFIED)
    p1, p2, p3 = (trace_power(flip2, k) for k in (1, 2, 3))
    w = weight_system(flip2, MODIFIED, gen(1, 3) * gen(2, 3)).expr
    assert same(w, p3 + p1 * p1 - p2.scale(2), rels)


def test_trace_identities(dj2):
    for k in (1, 2):
        lhs = l_bar(dj2, k + 1, k + 1).r_partial_trace(dj2.C, k + 1)
        rhs = l_bar(dj2, k, k).r_partial_trace(dj2.C, k).embed_first(k)
        assert lhs == rhs


def test_cayley_hamilton_re(dj2):
    ok, entries = cayley_hamilton_check(dj2, RE, degree_bound=4)
    assert ok and len(entries) == 4


def test_cayley_hamilton_wrong_sign_fails(dj2):
    from reacalc.charmap import cayley_hamilton_matrix

    mat = cayley_hamilton_matrix(dj2)
    e2 = elementary(dj2, RE, 2).expr
    # flipping the sign of the constant term breaks the identity
    bad = mat.polys()[0][0] - e2.scale(2 * qpow(2))
    assert not reduce(bad, re_relations(dj2, RE), 4).is_zero()


@pytest.mark.parametrize("fixture", ["dj2", "flip2"])
def test_modified_cayley_hamilton(fixture, request):
    s = request.getfixturevalue(fixture)
    coeffs = ch_poly_modified(s)
    mat = substitute_matrix(coeffs, s.dim_v)
    rels = re_relations(s, MODIFIED)
    assert all(reduce(p, rels, 4).is_zero() for row in mat.polys() for p in row)


def test_modified_ch_coefficients(dj2):
    c0, c1, c2 = ch_poly_modified(dj2)
    assert c2 == NCPoly.const(2, qpow(-2))
    assert c1 == NCPoly.const(2, -qpow(-3)) - g(0, 0).scale(qpow(-4)) - g(1, 1).scale(qpow(-2))


def test_classical_ch_flip(flip2):
    c0, c1, c2 = ch_poly_modified(flip2)
    assert c2 == NCPoly.const(2, 1)
    assert c1 == NCPoly.const(2, -1) - g(0, 0) - g(1, 1)


@pytest.mark.parametrize("sigma", list(permutations(range(3))))
def test_classical_weights(sigma, flip2):
    w = classical_weight(sigma, 2)
    assert is_central(w, re_relations(flip2, MODIFIED), 4)
    # one word per index tuple (i1, i2, i3): coefficients add up to N^3
    assert sum(c.constant_value() for c in w.terms.values()) == 8


def test_classical_weight_identity_perm():
    p1 = g(0, 0) + g(1, 1)
    assert classical_weight((0, 1, 2), 2) == p1 * p1 * p1
    # the full cycle gives the trace of L^3
    l3 = generator_matrix(2).power(3).trace()
    assert classical_weight((1, 2, 0), 2) == l3
