from math import comb

import pytest

from reacalc.errors import AxiomViolation
from reacalc.scalar import KAPPA, ONE, Q, qint, qpow
from reacalc.symmetry import (
    Symmetry,
    birank_degree,
    check_braid,
    check_hecke,
    check_involutive,
    dj_symmetry,
    flip,
    from_matrix,
    hilbert_dims,
    psi_residual,
    skew_symmetrizer,
    superflip,
)
from reacalc.tensor import embed, flip_op, identity, partial_trace, r_partial_trace


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dj_axioms(n):
    s = dj_symmetry(n)
    assert check_braid(s.R)
    assert check_hecke(s.R)
    assert not check_involutive(s.R) or n == 0


def test_dj1_is_q():
    s = dj_symmetry(1)
    assert s.R[0, 0] == Q
    assert s.B[0, 0] == qpow(-1)
    assert s.C[0, 0] == qpow(-1)


@pytest.mark.parametrize("n", [2, 3])
def test_dj_c_and_b(n):
    s = dj_symmetry(n)
    # C = diag(q^{-2N+1}, ..., q^{-1}); B is the same list in reverse order
    want = [qpow(-(2 * (n - i) - 1)) for i in range(n)]
    assert [s.C[i, i] for i in range(n)] == want
    assert [s.B[i, i] for i in range(n)] == want[::-1]
    assert s.C.trace() == qpow(-n) * qint(n)
    assert (s.B @ s.C) == identity(n, 1).scale(qpow(-2 * n))


@pytest.mark.parametrize("make", [lambda: dj_symmetry(2), lambda: dj_symmetry(3), lambda: flip(2), lambda: superflip(1, 1)])
def test_skew_inverse(make):
    s = make()
    assert psi_residual(s.R, s.psi) == 0
    n = s.dim_v
    # after tracing slot 2 the remaining slots are (1, 3)
    assert partial_trace(embed(s.R, 1, 3) @ embed(s.psi, 2, 3), 2) == flip_op(n)
    # R-trace normalisation: Tr_R(2) R_12 = I
    assert r_partial_trace(s.R, s.C, 2).is_identity()


def test_flip_data():
    s = flip(3)
    assert s.C.is_identity() and s.B.is_identity()
    assert s.tr_r_identity() == 3


def test_superflip_data(sflip11):
    assert check_braid(sflip11.R) and check_involutive(sflip11.R)
    assert [sflip11.C[i, i] for i in range(2)] == [ONE, -ONE]
    assert sflip11.tr_r_identity() == 0  # superdimension


@pytest.mark.parametrize("n", [2, 3])
def test_hilbert_dims_binomial(n):
    assert hilbert_dims(dj_symmetry(n), n + 1) == [comb(n, k) for k in range(1, n + 2)]
    assert birank_degree(dj_symmetry(n)) == n


def super_exterior_dim(m, n, k):
    # even part exterior, odd part symmetric
    return sum(comb(m, k - j) * comb(n + j - 1, j) for j in range(0, k + 1))


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_superflip_dims(m, n):
    s = superflip(m, n)
    assert hilbert_dims(s, 4) == [super_exterior_dim(m, n, k) for k in range(1, 5)]
    assert birank_degree(s) is None


def test_skew_symmetrizer_idempotent(dj2):
    a2 = skew_symmetrizer(dj2, 2)
    assert a2 @ a2 == a2
    # A^(2) = (q - R)/(q + q^{-1})
    want = (identity(2, 2).scale(Q) - dj2.R).scale(ONE / qint(2))
    assert a2 == want
    assert skew_symmetrizer(dj2, 3).is_zero()


def test_bad_matrix_rejected():
    r = identity(2, 2).scale(2)
    assert check_braid(r) and not check_hecke(r)
    with pytest.raises(AxiomViolation):
        from_matrix(r)


def test_hecke_eigenvalues(dj2):
    i = identity(2, 2)
    assert ((dj2.R - i.scale(Q)) @ (dj2.R + i.scale(qpow(-1)))).is_zero()
    assert dj2.R_inv == dj2.R - i.scale(KAPPA)


def test_serialization(dj2):
    s2 = Symmetry.from_json(dj2.to_json())
    assert s2.R == dj2.R and s2.kind == dj2.kind and s2.label == dj2.label
    with pytest.raises(ValueError):
        d = dj2.to_dict()
        d["dim_v"] = 3
        Symmetry.from_dict(d)
