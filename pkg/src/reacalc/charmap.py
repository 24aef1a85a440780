"""Central elements from the characteristic map.

``ch_n(z) = Tr_{R(1..n)}(rho_R(z) L_{1->n})`` where ``L_{1->n}`` is the ordered
product of the conjugated copies ``L_{k} = R_{k-1} L_{k-1} R_{k-1}^{-1}``.
Power sums, elementary symmetric polynomials, weight systems and the
Cayley-Hamilton identities are all built from this chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .errors import VerificationFailed, ZeroSymmetrizer
from .hecke import HeckeElement, reduced_word, rho
from .ncalg import (
    RE,
    NCMatrix,
    NCPoly,
    generator_matrix,
    is_central,
    re_relations,
    reduce,
)
from .scalar import ONE, Q, qint, qpow
from .symmetry import Symmetry, birank_degree, skew_symmetrizer
from .tensor import TensorOp, flip_op, identity, permutation_op, embed

__all__ = [
    "CentralElement",
    "l_bar",
    "l_chain",
    "ch",
    "weight_system",
    "power_sum",
    "elementary",
    "cayley_hamilton_matrix",
    "cayley_hamilton_check",
    "ch_poly_modified",
    "substitute_matrix",
    "classical_weight",
    "trace_power",
]


@dataclass
class CentralElement:
    expr: NCPoly
    variant: str
    provenance: str = ""
    central: bool | None = field(default=None)

    def __str__(self):
        return str(self.expr)


def l_bar(s: Symmetry, k: int, n: int | None = None) -> NCMatrix:
    """``L_{k-bar}`` on V^{(x) n} (default ``n = k``)."""
    n = n or k
    key = ("Lbar", k, n)
    if key in s._cache:
        return s._cache[key]
    if k == 1:
        out = generator_matrix(s.dim_v).embed_first(n)
    else:
        prev = l_bar(s, k - 1, n)
        out = (s.r_embed(k - 1, n) @ prev) @ s.r_inv_embed(k - 1, n)
    s._cache[key] = out
    return out


def l_chain(s: Symmetry, n: int) -> NCMatrix:
    """``L_{1-bar} L_{2-bar} ... L_{n-bar}`` on V^{(x) n}."""
    key = ("Lchain", n)
    if key in s._cache:
        return s._cache[key]
    out = l_bar(s, 1, n)
    for k in range(2, n + 1):
        out = out @ l_bar(s, k, n)
    s._cache[key] = out
    return out


def _full_r_trace(s: Symmetry, m: NCMatrix, left: TensorOp | None = None) -> NCPoly:
    """``Tr(C^{(x)n} X M)`` with an optional scalar factor ``X`` on the left."""
    w = s.c_power(m.arity)
    if left is not None:
        w = w @ left
    return m.weighted_trace(w)


def _relset(s, variant):
    return re_relations(s, variant)


def _finish(s, expr, variant, provenance, check_degree):
    ce = CentralElement(expr, variant, provenance)
    if check_degree is not None:
        ce.central = is_central(expr, _relset(s, variant), check_degree)
        if not ce.central:
            raise VerificationFailed(f"{provenance} is not central up to degree {check_degree}")
    return ce


def ch(
    s: Symmetry,
    variant: str,
    z: HeckeElement,
    n: int | None = None,
    check_degree: int | None = None,
) -> CentralElement:
    """``Tr_{R(1..n)}(rho_R(z) L_{1->n})``.  When ``check_degree`` is given the
    result is certified central up to that degree bound."""
    n = n or z.n
    expr = _full_r_trace(s, l_chain(s, n), rho(s, z, n))
    return _finish(s, expr, variant, f"ch({z})", check_degree)


def ch_right(s: Symmetry, z: HeckeElement, n: int | None = None) -> NCPoly:
    """The other ordering ``Tr_{R(1..n)}(L_{1->n} rho_R(z))``."""
    n = n or z.n
    return _full_r_trace(s, l_chain(s, n) @ rho(s, z, n))


def weight_system(
    s: Symmetry, variant: str, z: HeckeElement, n: int | None = None, check_degree=None
) -> CentralElement:
    """Quantum weight system ``Tr_{R(1..n)} L_{1->n} P(R_1, ..., R_{n-1})``."""
    n = n or z.n
    expr = ch_right(s, z, n)
    return _finish(s, expr, variant, f"w({z})", check_degree)


def trace_power(s: Symmetry, k: int) -> NCPoly:
    """``Tr_R L^k = Tr(C L^k)``."""
    key = ("TrLk", k)
    if key not in s._cache:
        lk = generator_matrix(s.dim_v).power(k)
        s._cache[key] = lk.weighted_trace(s.C)
    return s._cache[key]


def power_sum(s: Symmetry, variant: str, k: int, check_degree=None) -> CentralElement:
    if k < 1:
        raise ValueError("k must be >= 1")
    return _finish(s, trace_power(s, k), variant, f"p_{k}", check_degree)


def elementary(s: Symmetry, variant: str, k: int, check_degree=None) -> CentralElement:
    """``e_k = Tr_{R(1..k)}(A^(k) L_{1->k})``."""
    a = skew_symmetrizer(s, k)
    if a.is_zero():
        raise ZeroSymmetrizer(f"A^({k}) vanishes for {s.label}")
    key = ("e", k)
    if key not in s._cache:
        s._cache[key] = _full_r_trace(s, l_chain(s, k), a)
    return _finish(s, s._cache[key], variant, f"e_{k}", check_degree)


def cayley_hamilton_matrix(s: Symmetry, m: int | None = None) -> NCMatrix:
    """``sum_{k=0}^m (-q)^k e_k(L) L^{m-k}`` with ``e_0 = 1``."""
    if m is None:
        m = birank_degree(s)
    n = s.dim_v
    lmat = generator_matrix(n)
    total = NCMatrix.zeros(n, 1)
    for k in range(m + 1):
        ek = NCPoly.const(n, 1) if k == 0 else elementary(s, RE, k).expr
        coeff = s.coeff((-Q) ** k)
        total = total + lmat.power(m - k).scale_poly(ek.scale(coeff))
    return total


def cayley_hamilton_check(s: Symmetry, variant: str = RE, m: int | None = None, degree_bound=None):
    """Reduce every entry of the Cayley-Hamilton matrix; returns ``(ok, entries)``."""
    if m is None:
        m = birank_degree(s)
    if degree_bound is None:
        degree_bound = 2 * m
    rels = _relset(s, variant)
    mat = cayley_hamilton_matrix(s, m)
    entries = [reduce(p, rels, degree_bound) for row in mat.polys() for p in row]
    return all(e.is_zero() for e in entries), entries


def ch_poly_modified(s: Symmetry, m: int | None = None) -> list[NCPoly]:
    """Coefficients ``[c_0, ..., c_m]`` of the Cayley-Hamilton polynomial
    ``Q(t) = sum_j c_j t^j`` of the modified generating matrix,
    ``Tr_{R(1..m)}(A^(m) prod_k (q^{2(k-1)}(t - q^{1-k}(k-1)_q) I - L_{k-bar}))``."""
    if m is None:
        m = birank_degree(s)
    n = s.dim_v
    key = ("Qt", m)
    if key in s._cache:
        return s._cache[key]
    ident = identity(n, m)
    # polynomial in t with NCMatrix coefficients, lowest degree first
    poly = [NCMatrix.scalar(ident)]
    for k in range(1, m + 1):
        a = s.coeff(qpow(2 * (k - 1)))
        b = s.coeff(qpow(2 * (k - 1)) * qpow(1 - k) * qint(k - 1))
        # factor = a*t*I - (b*I + L_k)
        const = NCMatrix.scalar(ident.scale(-b)) - l_bar(s, k, m)
        lin = NCMatrix.scalar(ident.scale(a))
        new = [NCMatrix.zeros(n, m) for _ in range(len(poly) + 1)]
        for j, cm in enumerate(poly):
            new[j] = new[j] + cm @ const
            new[j + 1] = new[j + 1] + cm @ lin
        poly = new
    weight = s.c_power(m) @ skew_symmetrizer(s, m)
    coeffs = [cm.weighted_trace(weight) for cm in poly]
    s._cache[key] = coeffs
    return coeffs


def substitute_matrix(coeffs: list[NCPoly], dim_v: int) -> NCMatrix:
    """``sum_j c_j L^j`` (coefficients multiply the matrix powers from the left)."""
    lmat = generator_matrix(dim_v)
    total = NCMatrix.zeros(dim_v, 1)
    for j, c in enumerate(coeffs):
        if c:
            total = total + lmat.power(j).scale_poly(c)
    return total


# -- classical weight systems ---------------------------------------------


def _perm_operator_word(sigma):
    """Transposition word ``(a_1, ..., a_k)`` with ``P_sigma = P_{a_1} ... P_{a_k}``.

    The monomial is read so that the trace form reproduces the index-sum form
    ``l_{i_1}^{i_sigma(1)} ... l_{i_n}^{i_sigma(n)}`` (see ``classical_weight``);
    it is a reduced word of ``sigma^{-1}`` in right-to-left composition.
    """
    inv = [0] * len(sigma)
    for x, y in enumerate(sigma):
        inv[y] = x
    return reduced_word(tuple(inv))


def classical_weight(sigma, dim_v: int) -> NCPoly:
    """Weight system of a permutation (0-based one-line ``sigma``) in U(gl(N)).

    Computes the index sum ``sum_I l_{i_1}^{i_sigma(1)} ... l_{i_n}^{i_sigma(n)}``
    and the trace form ``Tr_{(1..n)} L_1 ... L_n P_sigma(P_1, ..., P_{n-1})`` and
    checks that they agree as free polynomials.
    """
    sigma = tuple(sigma)
    n = len(sigma)
    index_sum = {}
    for idx in iproduct(range(dim_v), repeat=n):
        word = tuple(idx[k] * dim_v + idx[sigma[k]] for k in range(n))
        index_sum[word] = index_sum.get(word, 0) + 1
    dva = NCPoly.from_words(dim_v, index_sum)

    p = flip_op(dim_v)
    op = identity(dim_v, n)
    for a in _perm_operator_word(sigma):
        op = op @ embed(p, a, n)
    if op != permutation_op(dim_v, sigma).transpose():
        raise VerificationFailed("transposition monomial disagrees with the permutation operator")
    chain = generator_matrix(dim_v).embed_first(n)
    for k in range(2, n + 1):
        # for the flip L_{k-bar} = L_k
        lk = _slot_matrix(dim_v, k, n)
        chain = chain @ lk
    tri = (chain @ op).trace()
    if tri != dva:
        raise VerificationFailed(f"index-sum and trace forms differ for sigma = {sigma}")
    return dva


def _slot_matrix(dim_v, k, n):
    """``L_k = I^{(k-1)} (x) L (x) I^{(n-k)}`` as an NCMatrix."""
    size = dim_v**n
    hi = dim_v ** (n - k)
    rows = [[{} for _ in range(size)] for _ in range(size)]
    for r in range(size):
        left, rest = divmod(r, dim_v * hi)
        i, right = divmod(rest, hi)
        for j in range(dim_v):
            c = (left * dim_v + j) * hi + right
            rows[r][c] = {i * dim_v + j + 1: ONE}
    return NCMatrix(dim_v, n, rows)
