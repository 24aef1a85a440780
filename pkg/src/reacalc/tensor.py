"""Exact dense operators on tensor powers of V = Q(q)^N.

Basis multi-indices ``(i_1, ..., i_n)`` with digits in ``0..N-1`` are encoded
row-major: ``flat = sum(i_k * N**(n-k))``, so slot 1 is the most significant
digit.  Matrix entry ``[row][col]`` is the component with lower (row) index
``row`` and upper (column) index ``col``; products are ordinary matrix
products.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .errors import PositionOutOfRange
from .scalar import ONE, ZERO, ScalarQ, eval_at

__all__ = [
    "TensorOp",
    "identity",
    "flip_op",
    "kron",
    "embed",
    "partial_trace",
    "r_partial_trace",
    "r_trace",
    "rank",
    "rank_at",
    "slot_table",
]


class TensorOp:
    """Square matrix acting on V^{(x) arity}."""

    __slots__ = ("dim_v", "arity", "rows")

    def __init__(self, dim_v: int, arity: int, rows):
        size = dim_v**arity
        rows = [[ScalarQ.coerce(x) for x in row] for row in rows]
        if len(rows) != size or any(len(r) != size for r in rows):
            raise ValueError(f"expected a {size}x{size} entry array")
        self.dim_v = dim_v
        self.arity = arity
        self.rows = rows

    @classmethod
    def _wrap(cls, dim_v, arity, rows):
        obj = object.__new__(cls)
        obj.dim_v = dim_v
        obj.arity = arity
        obj.rows = rows
        return obj

    @classmethod
    def zeros(cls, dim_v, arity):
        size = dim_v**arity
        return cls._wrap(dim_v, arity, [[ZERO] * size for _ in range(size)])

    @classmethod
    def from_sparse(cls, dim_v, arity, entries):
        """``entries``: iterable of ``(row, col, value)``."""
        out = cls.zeros(dim_v, arity)
        for r, c, v in entries:
            out.rows[r][c] = out.rows[r][c] + ScalarQ.coerce(v)
        return out

    @property
    def size(self):
        return len(self.rows)

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def nonzeros(self):
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if x.num:
                    yield i, j, x

    def _check(self, other):
        if not isinstance(other, TensorOp):
            raise TypeError("expected TensorOp")
        if other.dim_v != self.dim_v or other.arity != self.arity:
            raise ValueError("operator shapes differ")

    def __add__(self, other):
        self._check(other)
        return TensorOp._wrap(
            self.dim_v,
            self.arity,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        self._check(other)
        return TensorOp._wrap(
            self.dim_v,
            self.arity,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __neg__(self):
        return TensorOp._wrap(self.dim_v, self.arity, [[-a for a in r] for r in self.rows])

    def scale(self, s):
        s = ScalarQ.coerce(s)
        if not s:
            return TensorOp.zeros(self.dim_v, self.arity)
        return TensorOp._wrap(
            self.dim_v, self.arity, [[a * s if a.num else a for a in r] for r in self.rows]
        )

    def __mul__(self, s):
        if isinstance(s, TensorOp):
            return self @ s
        return self.scale(s)

    __rmul__ = scale

    def sparse_rows(self):
        return [[(j, x) for j, x in enumerate(r) if x.num] for r in self.rows]

    def __matmul__(self, other):
        if not isinstance(other, TensorOp):
            return NotImplemented
        self._check(other)
        size = self.size
        bs = other.sparse_rows()
        out = []
        for row in self.rows:
            acc = {}
            for j, a in enumerate(row):
                if not a.num:
                    continue
                for k, b in bs[j]:
                    t = a * b
                    prev = acc.get(k)
                    acc[k] = t if prev is None else prev + t
            new = [ZERO] * size
            for k, v in acc.items():
                new[k] = v
            out.append(new)
        return TensorOp._wrap(self.dim_v, self.arity, out)

    def __eq__(self, other):
        if not isinstance(other, TensorOp):
            return NotImplemented
        return (
            self.dim_v == other.dim_v
            and self.arity == other.arity
            and self.rows == other.rows
        )

    __hash__ = None

    def is_zero(self):
        return all(not x.num for r in self.rows for x in r)

    def is_identity(self):
        return self == identity(self.dim_v, self.arity)

    def trace(self) -> ScalarQ:
        acc = ZERO
        for i, r in enumerate(self.rows):
            acc = acc + r[i]
        return acc

    def transpose(self):
        return TensorOp._wrap(self.dim_v, self.arity, [list(c) for c in zip(*self.rows)])

    def map(self, fn):
        return TensorOp._wrap(
            self.dim_v, self.arity, [[ScalarQ.coerce(fn(x)) for x in r] for r in self.rows]
        )

    def power(self, k):
        out = identity(self.dim_v, self.arity)
        for _ in range(k):
            out = out @ self
        return out

    # -- serialization ----------------------------------------------------

    def to_dict(self):
        return {
            "dim_v": self.dim_v,
            "arity": self.arity,
            "entries": [[i, j, str(x)] for i, j, x in self.nonzeros()],
        }

    @classmethod
    def from_dict(cls, data):
        return cls.from_sparse(
            int(data["dim_v"]),
            int(data["arity"]),
            ((int(r), int(c), ScalarQ.coerce(str(v))) for r, c, v in data["entries"]),
        )

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"TensorOp(dim_v={self.dim_v}, arity={self.arity}, nnz={sum(1 for _ in self.nonzeros())})"


def identity(dim_v: int, arity: int = 1) -> TensorOp:
    size = dim_v**arity
    rows = [[ZERO] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = ONE
    return TensorOp._wrap(dim_v, arity, rows)


def flip_op(dim_v: int) -> TensorOp:
    """The flip P on V (x) V: P_{i1 i2}^{j1 j2} = delta(i1, j2) delta(i2, j1)."""
    return TensorOp.from_sparse(
        dim_v, 2, ((a * dim_v + b, b * dim_v + a, ONE) for a in range(dim_v) for b in range(dim_v))
    )


def kron(a: TensorOp, b: TensorOp) -> TensorOp:
    if a.dim_v != b.dim_v:
        raise ValueError("Kronecker factors act on different spaces")
    nb = b.size
    out = TensorOp.zeros(a.dim_v, a.arity + b.arity)
    bnz = list(b.nonzeros())
    for i, j, x in a.nonzeros():
        for k, l, y in bnz:
            out.rows[i * nb + k][j * nb + l] = x * y
    return out


def embed(x: TensorOp, k: int, p: int) -> TensorOp:
    """``I^{(k-1)} (x) X (x) I^{(p-k-a+1)}`` for ``X`` of arity ``a``."""
    a = x.arity
    if k < 1 or k + a - 1 > p:
        raise PositionOutOfRange(f"cannot place arity-{a} operator at slot {k} of {p}")
    out = x
    if k > 1:
        out = kron(identity(x.dim_v, k - 1), out)
    if p - k - a + 1 > 0:
        out = kron(out, identity(x.dim_v, p - k - a + 1))
    return out


@lru_cache(maxsize=None)
def slot_table(dim_v: int, p: int, k: int):
    """``table[r][t]``: flat index in V^{(x)p} with digit ``t`` at slot ``k`` and
    the remaining digits forming ``r`` in V^{(x)(p-1)}."""
    if k < 1 or k > p:
        raise PositionOutOfRange(f"slot {k} outside 1..{p}")
    hi = dim_v ** (p - k)
    table = []
    for r in range(dim_v ** (p - 1)):
        left, right = divmod(r, hi)
        table.append(tuple((left * dim_v + t) * hi + right for t in range(dim_v)))
    return tuple(table)


def partial_trace(m: TensorOp, k: int) -> TensorOp:
    """Contract the row and column indices at slot ``k``."""
    tab = slot_table(m.dim_v, m.arity, k)
    n = len(tab)
    rows = []
    for r in range(n):
        tr = tab[r]
        new = []
        for c in range(n):
            tc = tab[c]
            acc = ZERO
            for t in range(m.dim_v):
                x = m.rows[tr[t]][tc[t]]
                if x.num:
                    acc = acc + x
            new.append(acc)
        rows.append(new)
    return TensorOp._wrap(m.dim_v, m.arity - 1, rows)


def r_partial_trace(m: TensorOp, c: TensorOp, k: int) -> TensorOp:
    """``Tr_(k)(C_k M)``: insert ``C`` at slot ``k`` and contract that slot."""
    if c.arity != 1:
        raise ValueError("C must act on V")
    tab = slot_table(m.dim_v, m.arity, k)
    n = len(tab)
    cnz = list(c.nonzeros())
    rows = []
    for r in range(n):
        tr = tab[r]
        new = []
        for col in range(n):
            tc = tab[col]
            acc = ZERO
            for s, t, cv in cnz:
                x = m.rows[tr[t]][tc[s]]
                if x.num:
                    acc = acc + cv * x
            new.append(acc)
        rows.append(new)
    return TensorOp._wrap(m.dim_v, m.arity - 1, rows)


def r_trace(m: TensorOp, c: TensorOp) -> ScalarQ:
    """Full R-trace over all slots."""
    while m.arity > 1:
        m = r_partial_trace(m, c, m.arity)
    return (c @ m).trace()


def rank(m: TensorOp) -> int:
    """Exact rank over Q(q) by fraction-free (Bareiss) elimination."""
    rows = []
    for r in m.rows:
        if not any(x.num for x in r):
            continue
        # clear denominators so the elimination runs on polynomials
        scale = ONE
        for x in r:
            if x.num and x.den != (1,):
                d = ScalarQ._raw(x.den, (1,))
                if not (scale / d).den == (1,):
                    scale = scale * d
        rows.append([x * scale if x.num else x for x in r])
    return _bareiss_rank(rows)


def _bareiss_rank(rows):
    if not rows:
        return 0
    ncols = len(rows[0])
    prev = ONE
    rk = 0
    for col in range(ncols):
        piv = None
        for i in range(rk, len(rows)):
            if rows[i][col].num:
                piv = i
                break
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        p = rows[rk]
        pv = p[col]
        for i in range(rk + 1, len(rows)):
            ri = rows[i]
            f = ri[col]
            new = []
            for j in range(ncols):
                if j <= col:
                    new.append(ZERO)
                    continue
                a = ri[j]
                b = p[j]
                if f.num and b.num:
                    v = pv * a - f * b if a.num else -(f * b)
                elif a.num:
                    v = pv * a
                else:
                    new.append(ZERO)
                    continue
                new.append(v / prev if not prev.is_one() else v)
            rows[i] = new
        prev = pv
        rk += 1
        rows = rows[:rk] + [r for r in rows[rk:] if any(x.num for x in r)]
        if rk >= len(rows):
            break
    return rk


def rank_at(m: TensorOp, q0) -> int:
    """Rank of the specialization at ``q = q0`` (a lower bound for the exact rank)."""
    rows = [[eval_at(x, q0) if x.num else Fraction(0) for x in r] for r in m.rows]
    rk = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        p = rows[rk]
        for i in range(rk + 1, len(rows)):
            f = rows[i][col] / p[col]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], p)]
        rk += 1
    return rk


def permutation_op(dim_v: int, perm) -> TensorOp:
    """Operator sending ``x_{i_1} (x) ... (x) x_{i_n}`` to the tensor whose slot
    ``perm[k]`` holds the factor from slot ``k`` (0-based one-line ``perm``)."""
    n = len(perm)
    entries = []
    for idx in iproduct(range(dim_v), repeat=n):
        out = [0] * n
        for k in range(n):
            out[perm[k]] = idx[k]
        col = _flat(idx, dim_v)
        row = _flat(out, dim_v)
        entries.append((row, col, ONE))
    return TensorOp.from_sparse(dim_v, n, entries)


def _flat(idx, dim_v):
    f = 0
    for d in idx:
        f = f * dim_v + d
    return f


def digits(flat: int, dim_v: int, n: int):
    out = []
    for _ in range(n):
        flat, d = divmod(flat, dim_v)
        out.append(d)
    return tuple(reversed(out))
