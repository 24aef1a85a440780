from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reacalc.charmap import elementary, power_sum
from reacalc.errors import NotInSpan, NotPolynomial
from reacalc.ncalg import RE, NCPoly
from reacalc.scalar import KAPPA, ONE, Q, ScalarQ, limit_q1, qint, qpow
from reacalc.spectral import (
    EvBasisElement,
    MPoly,
    Partition,
    character,
    classical_character,
    e_names,
    express_in_e_basis,
    hc_morphism,
    mu_char,
    mu_vars,
    muhat_char,
    parse_mpoly,
    powersum_direct,
    powersum_hat_sym,
    powersum_rat,
    powersum_sym,
    super_powersum,
    zamena,
)


def mu(m, n=0):
    names = mu_vars(m, n)
    return names, [MPoly.var(names, i) for i in range(len(names))]


def test_mpoly_basics():
    names, (x, y) = mu(2)
    p = (x + y) ** 2
    assert p == x * x + x * y.scale(2) + y * y
    assert p.divexact(x + y) == x + y
    with pytest.raises(NotPolynomial):
        (x * x + 1).divexact(x - y)
    assert parse_mpoly(str(p), names) == p
    assert MPoly.from_dict(p.to_dict()) == p


def test_powersum_m1():
    names, (x,) = mu(1)
    for k in (1, 2, 3):
        assert powersum_sym(k, 1) == (x**k).scale(qpow(-1))
        assert super_powersum(k, 1, 0) == (x**k).scale(qpow(-1))


def test_powersum_m2_k1():
    names, (x, y) = mu(2)
    assert powersum_sym(1, 2) == (x + y).scale(qpow(-1))
    assert powersum_sym(1, 2) == hc_morphism(EvBasisElement(MPoly.var(e_names(2), 0)))


def test_sum_of_weights_is_trace_of_identity(dj2, dj3):
    assert powersum_rat(0, 2).to_poly() == MPoly.const(mu_vars(2), dj2.tr_r_identity())
    assert powersum_rat(0, 3).to_poly() == MPoly.const(mu_vars(3), dj3.tr_r_identity())


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_powersum_symmetric(m, k):
    p = powersum_sym(k, m)
    for perm in permutations(range(m)):
        assert p.permute(perm) == p
    assert super_powersum(k, m, 0) == p
    assert p.degree() == k


def test_hc_examples():
    names, (x, y, z) = mu(3)
    one = EvBasisElement(MPoly.const(e_names(3), 1))
    assert hc_morphism(one) == MPoly.const(names, 1)
    e3 = EvBasisElement(MPoly.var(e_names(3), 2))
    assert hc_morphism(e3) == (x * y * z).scale(qpow(-3))


def test_express_in_e_basis(dj2):
    e2 = express_in_e_basis(elementary(dj2, RE, 2), dj2, RE, 2)
    assert e2.poly == MPoly.var(e_names(2), 1)
    p1 = express_in_e_basis(power_sum(dj2, RE, 1), dj2, RE, 1)
    assert p1.poly == MPoly.var(e_names(2), 0)
    # regression value for p_2 in terms of e_1^2 and e_2
    p2 = express_in_e_basis(power_sum(dj2, RE, 2), dj2, RE, 2)
    e = e_names(2)
    assert p2.poly == MPoly(e, {(2, 0): Q, (0, 1): -(Q + qpow(-1))})


def test_not_in_span(dj2):
    with pytest.raises(NotInSpan):
        express_in_e_basis(NCPoly.gen(2, 0, 1), dj2, RE, 1)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_newton_cross_check(dj2, k):
    pe = express_in_e_basis(power_sum(dj2, RE, k), dj2, RE, k)
    assert hc_morphism(pe) == powersum_sym(k, 2)
    for lam in [(0, 0), (1, 0), (1, 1), (2, 0)]:
        assert character(hc_morphism(pe), lam) == character(powersum_sym(k, 2), lam)


def test_mu_char_examples():
    assert mu_char((0, 0, 0), 3) == [qpow(-4), qpow(-2), ONE]
    assert mu_char((1, 0), 2) == [qpow(-4), ONE]
    assert muhat_char((1, 0), 2) == [qpow(-2) * qint(2), 0]
    for lam in [(3, 1, 0), (2, 2, 2)]:
        assert [limit_q1(x) for x in muhat_char(lam, 3)] == [lam[i] + 3 - (i + 1) for i in range(3)]


def test_character_examples():
    hc_e1 = hc_morphism(EvBasisElement(MPoly.var(e_names(2), 0)))
    assert character(hc_e1, (0, 0)) == qpow(-3) + qpow(-1)
    assert character(MPoly.const(mu_vars(2), 1), (3, 1)) == ONE
    with pytest.raises(NotImplementedError):
        character(super_powersum(1, 1, 1), (0,))


def test_partition():
    assert Partition((2, 1), 3) == (2, 1, 0)
    assert Partition.parse("3,1") == (3, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((1, 1, 1), 2)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("lam", [(0, 0), (1, 0), (2, 1), (4, 0), (3, 3)])
def test_composition_consistency(k, lam):
    assert character(powersum_sym(k, 2), lam) == powersum_direct(k, mu_char(lam, 2))
    assert character(powersum_hat_sym(k, 2), lam, hat=True) == powersum_direct(k, muhat_char(lam, 2), hat=True)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_hatted_matches_shift(m, k):
    from math import comb

    names = mu_vars(m)
    images = {i: (MPoly.const(names, 1) - MPoly.var(names, i)).scale(ONE / KAPPA) for i in range(m)}
    lhs = powersum_hat_sym(k, m).substitute(images, names)
    rhs = MPoly.const(names, 0)
    for j in range(k + 1):
        rhs = rhs + powersum_rat(j, m).to_poly().scale((-1) ** j * comb(k, j))
    assert lhs == rhs.scale(ONE / KAPPA**k)


def test_zamena_of_e1():
    names = mu_vars(2, hat=True)
    z = zamena(powersum_sym(1, 2))
    x, y = MPoly.var(names, 0), MPoly.var(names, 1)
    assert z == (MPoly.const(names, 2) - (x + y).scale(KAPPA)).scale(qpow(-1))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=3, unique=True))
def test_hat_weights_q1_limit(values):
    # each dhat_i tends to prod (v_i - v_p - 1)/(v_i - v_p); at integer points this is exact
    vals = [ScalarQ.coerce(v) for v in values]
    for i, vi in enumerate(values):
        w = qpow(-1)
        want = Fraction(1)
        for p, vp in enumerate(values):
            if p != i:
                w = w * (vals[i] - qpow(-2) * vals[p] - qpow(-1)) / (vals[i] - vals[p])
                want *= Fraction(vi - vp - 1, vi - vp)
        assert limit_q1(w) == want


def test_super_examples():
    names = mu_vars(0, 1)
    nu = MPoly.var(names, 0)
    for k in (1, 2, 3):
        assert super_powersum(k, 0, 1) == (nu**k).scale(-Q)


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_super_cancellation(m, k):
    p = super_powersum(k, m, 1)
    names = p.names
    nu = names.index("nu1")
    sub = p.substitute({0: MPoly.var(names, nu).scale(qpow(2))}, names)
    assert all(e[nu] == 0 for e in sub.terms)
    assert all(e[0] == 0 for e in sub.terms)
    if m == 1:
        assert sub.is_zero()


def gl2_irrep(a, b):
    """Matrices of E_ij on the gl(2) module of highest weight (a, b)."""
    n = a - b + 1
    z = [[Fraction(0)] * n for _ in range(n)]
    e = {}
    for key in product(range(2), repeat=2):
        e[key] = [row[:] for row in z]
    for j in range(n):
        e[(0, 0)][j][j] = Fraction(a - j)
        e[(1, 1)][j][j] = Fraction(b + j)
        if j + 1 < n:
            e[(1, 0)][j + 1][j] = Fraction(1)
        if j >= 1:
            e[(0, 1)][j - 1][j] = Fraction(j * (a - b - j + 1))
    return e


def matmul(x, y):
    n = len(x)
    return [[sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def gl2_power_sum(k, a, b):
    e = gl2_irrep(a, b)
    n = a - b + 1
    total = [[Fraction(0)] * n for _ in range(n)]
    for idx in product(range(2), repeat=k):
        m = None
        for t in range(k):
            f = e[(idx[t], idx[(t + 1) % k])]
            m = f if m is None else matmul(m, f)
        total = [[total[i][j] + m[i][j] for j in range(n)] for i in range(n)]
    c = total[0][0]
    assert all(total[i][j] == (c if i == j else 0) for i in range(n) for j in range(n))
    return c


def test_gl2_model_is_a_representation():
    e = gl2_irrep(3, 1)
    for (i, j), (k, m) in product(product(range(2), repeat=2), repeat=2):
        lhs = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(matmul(e[(i, j)], e[(k, m)]), matmul(e[(k, m)], e[(i, j)]))]
        rhs = [[(e[(i, m)][r][c] if k == j else 0) - (e[(k, j)][r][c] if i == m else 0) for c in range(3)] for r in range(3)]
        assert lhs == rhs


@pytest.mark.parametrize("lam", [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (3, 1)])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_classical_character_matches_gl2(lam, k):
    assert classical_character(k, lam, 2) == gl2_power_sum(k, *lam)


def test_classical_character_is_not_bare_power_sum():
    # the weights dhat_i matter: the trivial module has p_1 = 0, not m - 1 + ... sums
    assert classical_character(1, (0, 0), 2) == 0
    assert sum(lam + 2 - i for i, lam in enumerate((0, 0), start=1)) == 1
