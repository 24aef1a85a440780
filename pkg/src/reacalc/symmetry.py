"""Hecke and involutive symmetries with their skew-inverse and derived data.

A symmetry is validated when it is built: braid relation, the Hecke (or
involutive) condition and skew-invertibility are checked exactly, and the
construction raises rather than returning an unchecked object.
"""

from __future__ import annotations

import json
from itertools import product
from functools import cached_property

from .errors import AxiomViolation, NotSkewInvertible, VerificationFailed
from .scalar import ONE, Q, ZERO, KAPPA, ScalarQ, limit_q1, qint, qpow
from .tensor import TensorOp, embed, flip_op, identity, partial_trace, rank

__all__ = [
    "Symmetry",
    "dj_symmetry",
    "flip",
    "superflip",
    "from_matrix",
    "check_braid",
    "check_hecke",
    "check_involutive",
    "skew_inverse",
    "psi_residual",
    "skew_symmetrizer",
    "hilbert_dims",
    "birank_degree",
]

HECKE = "hecke"
INVOLUTIVE = "involutive"


def check_braid(r: TensorOp) -> bool:
    r12 = embed(r, 1, 3)
    r23 = embed(r, 2, 3)
    return r12 @ r23 @ r12 == r23 @ r12 @ r23


def check_hecke(r: TensorOp) -> bool:
    """``(qI - R)(q^{-1}I + R) = 0``."""
    i = identity(r.dim_v, 2)
    return ((i.scale(Q) - r) @ (i.scale(qpow(-1)) + r)).is_zero()


def check_involutive(r: TensorOp) -> bool:
    return (r @ r).is_identity()


def _solve(m, rhs):
    """Gauss-Jordan solve of ``m @ X = rhs`` over Q(q); ``None`` if singular."""
    n = len(m)
    aug = [list(m[i]) + list(rhs[i]) for i in range(n)]
    width = len(aug[0])
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col].num), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col]
        inv = ONE / p[col]
        p = [x * inv if x.num else x for x in p]
        aug[col] = p
        for i in range(n):
            if i == col:
                continue
            f = aug[i][col]
            if f.num:
                row = aug[i]
                aug[i] = [row[j] - f * p[j] if p[j].num else row[j] for j in range(width)]
    return [row[n:] for row in aug]


def skew_inverse(r: TensorOp) -> TensorOp:
    """The operator Psi with ``sum_{a,b} R_{ib}^{ja} Psi_{ak}^{bn} = delta_i^n delta_k^j``."""
    n = r.dim_v
    idx = [(i, j) for i in range(n) for j in range(n)]
    # M_{(ij),(ab)} = R_{ib}^{ja};  Y_{(ab),(kn)} = Psi_{ak}^{bn}
    m = [[r.rows[i * n + b][j * n + a] for (a, b) in idx] for (i, j) in idx]
    rhs = [[ONE if (i == nn and kk == j) else ZERO for (kk, nn) in idx] for (i, j) in idx]
    y = _solve(m, rhs)
    if y is None:
        raise NotSkewInvertible("the skew-invertibility system is singular")
    psi = TensorOp.zeros(n, 2)
    for ab, (a, b) in enumerate(idx):
        for kn, (k, nn) in enumerate(idx):
            psi.rows[a * n + k][b * n + nn] = y[ab][kn]
    # operator form: Tr_(2) R_12 Psi_23 = P_13
    if partial_trace(embed(r, 1, 3) @ embed(psi, 2, 3), 2) != flip_op(n):
        raise VerificationFailed("Psi does not satisfy Tr_(2) R_12 Psi_23 = P_13")
    return psi


def psi_residual(r: TensorOp, psi: TensorOp) -> int:
    """Number of components of ``sum R_{ib}^{ja} Psi_{ak}^{bn} - delta_i^n delta_k^j``
    that are nonzero."""
    n = r.dim_v
    bad = 0
    for i, j, k, nn in product(range(n), repeat=4):
        acc = ZERO
        for a in range(n):
            for b in range(n):
                x = r.rows[i * n + b][j * n + a]
                if x.num:
                    acc = acc + x * psi.rows[a * n + k][b * n + nn]
        if acc != (ONE if (i == nn and k == j) else ZERO):
            bad += 1
    return bad


class Symmetry:
    """A validated braiding ``R`` on V (x) V together with ``Psi``, ``C`` and ``B``."""

    def __init__(self, kind: str, r: TensorOp, label: str = "custom", validate: bool = True):
        if kind not in (HECKE, INVOLUTIVE):
            raise ValueError(f"unknown symmetry kind {kind!r}")
        if r.arity != 2:
            raise ValueError("R must act on V (x) V")
        self.kind = kind
        self.dim_v = r.dim_v
        self.R = r
        self.label = label
        self._cache = {}
        if validate:
            self.validate()

    def validate(self):
        if not check_braid(self.R):
            raise AxiomViolation("R does not satisfy the braid relation")
        if self.kind == HECKE and not check_hecke(self.R):
            raise AxiomViolation("R does not satisfy the Hecke condition")
        if self.kind == INVOLUTIVE and not check_involutive(self.R):
            raise AxiomViolation("R is not involutive")
        _ = self.psi

    @property
    def is_hecke(self):
        return self.kind == HECKE

    def coeff(self, s) -> ScalarQ:
        """Specialize a q-dependent formula coefficient: identity for Hecke
        symmetries, the q -> 1 limit for involutive ones."""
        s = ScalarQ.coerce(s)
        if self.kind == HECKE:
            return s
        return ScalarQ.coerce(limit_q1(s))

    @property
    def q(self) -> ScalarQ:
        return Q if self.kind == HECKE else ONE

    @property
    def kappa(self) -> ScalarQ:
        """``q - q^{-1}``; zero for involutive symmetries."""
        return KAPPA if self.kind == HECKE else ZERO

    @cached_property
    def psi(self) -> TensorOp:
        return skew_inverse(self.R)

    @cached_property
    def C(self) -> TensorOp:
        n, psi = self.dim_v, self.psi
        return TensorOp._wrap(
            n,
            1,
            [
                [sum((psi.rows[i * n + k][j * n + k] for k in range(n)), ZERO) for j in range(n)]
                for i in range(n)
            ],
        )

    @cached_property
    def B(self) -> TensorOp:
        n, psi = self.dim_v, self.psi
        return TensorOp._wrap(
            n,
            1,
            [
                [sum((psi.rows[k * n + i][k * n + j] for k in range(n)), ZERO) for j in range(n)]
                for i in range(n)
            ],
        )

    @cached_property
    def R_inv(self) -> TensorOp:
        # from R^2 = I + (q - q^{-1}) R; reduces to R^{-1} = R when involutive
        return self.R - identity(self.dim_v, 2).scale(self.kappa)

    def r_embed(self, k: int, p: int) -> TensorOp:
        key = ("R", k, p)
        if key not in self._cache:
            self._cache[key] = embed(self.R, k, p)
        return self._cache[key]

    def r_inv_embed(self, k: int, p: int) -> TensorOp:
        key = ("Rinv", k, p)
        if key not in self._cache:
            self._cache[key] = embed(self.R_inv, k, p)
        return self._cache[key]

    def c_power(self, n: int) -> TensorOp:
        """``C^{(x) n}``, the weight of the full R-trace on V^{(x) n}."""
        key = ("Cn", n)
        if key not in self._cache:
            out = self.C
            for _ in range(n - 1):
                from .tensor import kron

                out = kron(out, self.C)
            self._cache[key] = out
        return self._cache[key]

    def tr_r_identity(self) -> ScalarQ:
        return self.C.trace()

    # -- serialization ----------------------------------------------------

    def to_dict(self):
        d = {"kind": self.kind, "dim_v": self.dim_v, "label": self.label}
        d["R"] = self.R.to_dict()
        return d

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data):
        r = TensorOp.from_dict(data["R"])
        if int(data["dim_v"]) != r.dim_v:
            raise ValueError("header dim_v disagrees with the matrix")
        return cls(data["kind"], r, label=data.get("label", "custom"))

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"Symmetry(kind={self.kind!r}, dim_v={self.dim_v}, label={self.label!r})"


def dj_symmetry(n: int) -> Symmetry:
    """Drinfeld-Jimbo Hecke symmetry of GL(N) type in braid form.

    ``R(x_i (x) x_j) = x_j (x) x_i + (q - q^{-1})[i<j] x_i (x) x_j`` for ``i != j``
    and ``R(x_i (x) x_i) = q x_i (x) x_i``; eigenvalues ``q`` and ``-q^{-1}``.
    """
    if n < 1:
        raise ValueError("N must be positive")
    entries = []
    for i in range(n):
        for j in range(n):
            col = i * n + j
            if i == j:
                entries.append((col, col, Q))
            else:
                entries.append((j * n + i, col, ONE))
                if i < j:
                    entries.append((col, col, KAPPA))
    return Symmetry(HECKE, TensorOp.from_sparse(n, 2, entries), label=f"dj({n})")


def superflip(m: int, n: int) -> Symmetry:
    """Graded flip ``x_i (x) x_j -> (-1)^{p(i)p(j)} x_j (x) x_i``; the last ``n``
    basis vectors are odd."""
    dim = m + n
    if dim < 1:
        raise ValueError("m + n must be positive")
    parity = [0] * m + [1] * n
    entries = []
    for i in range(dim):
        for j in range(dim):
            sign = -1 if parity[i] and parity[j] else 1
            entries.append((j * dim + i, i * dim + j, sign))
    label = f"flip({m})" if n == 0 else f"superflip({m}|{n})"
    return Symmetry(INVOLUTIVE, TensorOp.from_sparse(dim, 2, entries), label=label)


def flip(n: int) -> Symmetry:
    return superflip(n, 0)


def from_matrix(r: TensorOp, kind: str = HECKE, label: str = "custom") -> Symmetry:
    return Symmetry(kind, r, label=label)


def skew_symmetrizer(s: Symmetry, k: int) -> TensorOp:
    """``A^(k)``, with ``A^(1) = I`` and
    ``A^(k) = A^(k-1) (q^{k-1} I - (k-1)_q R_{k-1}) A^(k-1) / k_q``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    key = ("A", k)
    if key in s._cache:
        return s._cache[key]
    if k == 1:
        a = identity(s.dim_v, 1)
    else:
        prev = embed(skew_symmetrizer(s, k - 1), 1, k)
        mid = identity(s.dim_v, k).scale(s.coeff(qpow(k - 1))) - s.r_embed(k - 1, k).scale(
            s.coeff(qint(k - 1))
        )
        a = (prev @ mid @ prev).scale(ONE / s.coeff(qint(k)))
        if a @ a != a:
            raise VerificationFailed(f"A^({k}) is not idempotent")
    s._cache[key] = a
    return a


def hilbert_dims(s: Symmetry, kmax: int) -> list[int]:
    """Ranks of ``A^(1..kmax)``, the dimensions of the R-skew-symmetric powers."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    out = []
    for k in range(1, kmax + 1):
        a = skew_symmetrizer(s, k)
        rk = rank(a)
        tr = a.trace()
        if tr != rk:  # trace of an idempotent is its rank
            raise VerificationFailed(f"rank {rk} of A^({k}) disagrees with its trace {tr}")
        out.append(rk)
    return out


def birank_degree(s: Symmetry, kmax: int | None = None) -> int | None:
    """Largest ``k`` with ``A^(k) != 0`` when the ranks terminate within ``kmax``
    (default ``dim_v + 1``); ``None`` when they do not (non-even case)."""
    key = ("birank", kmax)
    if key in s._cache:
        return s._cache[key]
    kmax = kmax or s.dim_v + 1
    dims = hilbert_dims(s, kmax)
    out = None
    if 0 in dims:
        out = dims.index(0)
    s._cache[key] = out
    return out
