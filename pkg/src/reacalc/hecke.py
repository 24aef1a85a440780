"""The Hecke algebra H_n(q) on the T_w basis and its R-matrix representation.

Permutations are 0-based one-line tuples ``w = (w(0), ..., w(n-1))`` composed
right to left, ``(s_i w)(x) = s_i(w(x))``.  A reduced word ``(a_1, ..., a_k)``
of ``w`` means ``w = s_{a_1} s_{a_2} ... s_{a_k}`` and ``T_w`` is the
product ``tau_{a_1} ... tau_{a_k}``.  Generators are 1-based: ``tau_i = T_{s_i}``
swaps the values ``i-1`` and ``i``.
"""

from __future__ import annotations

import re
from itertools import permutations

from .errors import IndexOutOfRange, ParseError, StrandMismatch
from .scalar import KAPPA, ONE, ScalarQ, limit_q1, parse_scalar
from .tensor import TensorOp, identity

__all__ = [
    "HeckeElement",
    "gen",
    "unit",
    "basis",
    "multiply",
    "zk",
    "rho",
    "reduced_word",
    "perm_from_word",
    "specialize_q1",
    "parse_hecke",
]


def _apply_left(i: int, w):
    """``s_i w`` for the 1-based generator index ``i``."""
    a, b = i - 1, i
    return tuple(b if x == a else a if x == b else x for x in w)


def _left_ascent(i: int, w) -> bool:
    # l(s_i w) > l(w) iff value i-1 sits left of value i
    return w.index(i - 1) < w.index(i)


def reduced_word(w) -> tuple[int, ...]:
    """A reduced word for ``w`` by repeatedly peeling left descents."""
    w = tuple(w)
    word = []
    n = len(w)
    while True:
        for i in range(1, n):
            if not _left_ascent(i, w):
                word.append(i)
                w = _apply_left(i, w)
                break
        else:
            return tuple(word)


def perm_from_word(word, n: int):
    w = tuple(range(n))
    for i in reversed(word):
        w = _apply_left(i, w)
    return w


def length(w) -> int:
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


class HeckeElement:
    """Finite combination of ``T_w`` with ``Q(q)`` coefficients, zero terms pruned."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for w, c in (terms or {}).items():
            c = ScalarQ.coerce(c)
            if c.num:
                w = tuple(w)
                if sorted(w) != list(range(n)):
                    raise ValueError(f"{w} is not a permutation of 0..{n - 1}")
                clean[w] = clean[w] + c if w in clean else c
        self.terms = {w: c for w, c in clean.items() if c.num}

    def _check(self, other):
        if not isinstance(other, HeckeElement):
            raise TypeError("expected HeckeElement")
        if other.n != self.n:
            raise StrandMismatch(f"strand counts {self.n} and {other.n} differ")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return HeckeElement(self.n, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s):
        s = ScalarQ.coerce(s)
        return HeckeElement(self.n, {w: c * s for w, c in self.terms.items()})

    def __rmul__(self, s):
        return self.scale(s)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return multiply(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (length(w), reduced_word(w))):
            c = self.terms[w]
            word = ".".join(f"t{i}" for i in reduced_word(w)) or "e"
            if c.is_one():
                parts.append(word)
            elif c.is_constant():
                parts.append(f"{c} * {word}")
            else:
                parts.append(f"({c}) * {word}")
        return " + ".join(parts)

    def __repr__(self):
        return f"HeckeElement({self.n}, '{self}')"


def unit(n: int) -> HeckeElement:
    return HeckeElement(n, {tuple(range(n)): ONE})


def gen(i: int, n: int) -> HeckeElement:
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"tau_{i} does not exist in H_{n}")
    return HeckeElement(n, {_apply_left(i, tuple(range(n))): ONE})


def basis(n: int):
    """All ``T_w`` of H_n(q), ordered by length then reduced word."""
    perms = sorted(permutations(range(n)), key=lambda w: (length(w), reduced_word(w)))
    return [HeckeElement(n, {w: ONE}) for w in perms]


def _left_gen(i: int, x: HeckeElement, kappa) -> dict:
    out = {}
    for w, c in x.terms.items():
        sw = _apply_left(i, w)
        if _left_ascent(i, w):
            out[sw] = out[sw] + c if sw in out else c
        else:
            # T_{s_i} T_w = (q - q^{-1}) T_w + T_{s_i w}
            out[sw] = out[sw] + c if sw in out else c
            if kappa.num:
                t = c * kappa
                out[w] = out[w] + t if w in out else t
    return out


def multiply(a: HeckeElement, b: HeckeElement, kappa=KAPPA) -> HeckeElement:
    """Product in the T_w basis.  ``kappa`` is the structure constant ``q - q^{-1}``;
    pass ``0`` for the group algebra of the symmetric group."""
    a._check(b)
    kappa = ScalarQ.coerce(kappa)
    total = {}
    for w, c in a.terms.items():
        cur = HeckeElement(b.n, {})
        cur.terms = dict(b.terms)
        for i in reversed(reduced_word(w)):
            cur.terms = {u: v for u, v in _left_gen(i, cur, kappa).items() if v.num}
        for u, v in cur.terms.items():
            t = c * v
            total[u] = total[u] + t if u in total else t
    return HeckeElement(a.n, total)


def zk(k: int, n: int) -> HeckeElement:
    """``tau_{k-1} tau_{k-2} ... tau_1`` in H_n(q)."""
    if not 2 <= k <= n:
        raise IndexOutOfRange(f"z_{k} needs 2 <= k <= n (n = {n})")
    return HeckeElement(n, {perm_from_word(tuple(range(k - 1, 0, -1)), n): ONE})


def specialize_q1(h: HeckeElement) -> HeckeElement:
    return HeckeElement(h.n, {w: ScalarQ.coerce(limit_q1(c)) for w, c in h.terms.items()})


def rho(s, h: HeckeElement, n: int | None = None) -> TensorOp:
    """R-matrix representation: ``tau_i -> R_i`` on V^{(x) n}.

    For involutive symmetries the coefficients are specialized at ``q = 1``,
    where the Hecke algebra becomes the group algebra.
    """
    if n is None:
        n = h.n
    if h.n != n:
        raise StrandMismatch(f"element has {h.n} strands, expected {n}")
    out = TensorOp.zeros(s.dim_v, n)
    cache = s._cache.setdefault(("rhoT", n), {})
    for w, c in h.terms.items():
        c = s.coeff(c)
        if not c.num:
            continue
        if w not in cache:
            op = identity(s.dim_v, n)
            for i in reduced_word(w):
                op = op @ s.r_embed(i, n)
            cache[w] = op
        out = out + cache[w].scale(c)
    return out


_WORD = re.compile(r"^(?:e|t\d+(?:\.t\d+)*)$")


def parse_hecke(text: str, n: int) -> HeckeElement:
    """Parse sums like ``"t1.t2 - (q-1/q) * t2 + 3 * e"`` into H_n(q).

    A word ``t_{a}.t_{b}...`` is the product of generators in the written
    order; it need not be reduced.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty Hecke expression")
    # split at top-level + / -
    terms, depth, cur, sign = [], 0, "", 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and cur.strip() and not cur.rstrip().endswith(("*", "^")):
            terms.append((sign, cur))
            cur, sign = "", (1 if ch == "+" else -1)
        elif depth == 0 and ch in "+-" and not cur.strip():
            sign = sign * (1 if ch == "+" else -1)
        else:
            cur += ch
        i += 1
    terms.append((sign, cur))
    total = HeckeElement(n, {})
    for sign, term in terms:
        term = term.strip()
        if "*" in term and _WORD.match(term.rsplit("*", 1)[1].strip()):
            coeff_txt, word_txt = term.rsplit("*", 1)
            coeff = parse_scalar(coeff_txt)
            word_txt = word_txt.strip()
        elif _WORD.match(term):
            coeff, word_txt = ONE, term
        else:
            coeff, word_txt = parse_scalar(term), "e"
        elem = unit(n)
        if word_txt != "e":
            for g in word_txt.split("."):
                elem = multiply(elem, gen(int(g[1:]), n))
        total = total + elem.scale(coeff * sign)
    return total
