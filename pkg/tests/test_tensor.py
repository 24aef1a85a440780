import pytest

from reacalc.scalar import ONE, Q, ZERO, qpow
from reacalc.tensor import (
    TensorOp,
    embed,
    flip_op,
    identity,
    kron,
    partial_trace,
    permutation_op,
    r_partial_trace,
    r_trace,
    rank,
    rank_at,
)


def diag(n, vals):
    return TensorOp.from_sparse(n, 1, [(i, i, v) for i, v in enumerate(vals)])


def test_identity_and_flip():
    p = flip_op(2)
    assert (p @ p).is_identity()
    assert p.trace() == 2  # number of fixed basis vectors x_i (x) x_i
    assert identity(3, 2).trace() == 9


def test_kron_and_embed():
    a = diag(2, [Q, 1])
    b = diag(2, [1, qpow(2)])
    k = kron(a, b)
    assert k.trace() == a.trace() * b.trace()
    assert embed(a, 1, 2) == kron(a, identity(2, 1))
    assert embed(a, 2, 2) == kron(identity(2, 1), a)
    p12 = embed(flip_op(2), 1, 3)
    p23 = embed(flip_op(2), 2, 3)
    assert p12 @ p23 @ p12 == p23 @ p12 @ p23


def test_partial_trace():
    a = diag(2, [Q, 1])
    b = diag(2, [1, qpow(2)])
    assert partial_trace(kron(a, b), 2) == a.scale(b.trace())
    assert partial_trace(kron(a, b), 1) == b.scale(a.trace())
    # Tr_(2) P = I
    assert partial_trace(flip_op(2), 2).is_identity()


def test_r_trace_weights():
    c = diag(2, [qpow(-3), qpow(-1)])
    m = identity(2, 2)
    assert r_partial_trace(m, c, 2) == identity(2, 1).scale(c.trace())
    assert r_trace(identity(2, 1), c) == c.trace()


def test_permutation_op():
    # a transposition is the flip
    assert permutation_op(2, (1, 0)) == flip_op(2)
    cyc = permutation_op(2, (1, 2, 0))
    assert (cyc @ cyc @ cyc).is_identity()
    assert not cyc.is_identity()


def test_rank():
    assert rank(identity(2, 2)) == 4
    sym = (identity(2, 2) + flip_op(2)).scale(ONE / 2)
    assert rank(sym) == 3
    kq = diag(2, [Q - 1, 1])
    assert rank(kq) == 2
    assert rank_at(kq, 1) == 1


def test_json_roundtrip():
    a = kron(diag(2, [Q, 1]), flip_op(2).scale(qpow(-1) + 3))
    assert TensorOp.from_json(a.to_json()) == a


def test_arity_mismatch():
    with pytest.raises((ValueError, TypeError)):
        identity(2, 1) @ identity(2, 2)
    assert TensorOp.zeros(2, 1).is_zero()
    assert TensorOp.zeros(2, 1).trace() == ZERO
