"""Noncommutative polynomials in the generators of an RE algebra, matrices over
them, and normal forms modulo the defining relations.

Generators ``g(i, j)`` (1-based in text, 0-based in code) are the entries of
the generating matrix ``L`` (row ``i``, column ``j``) and are ordered
``g(1,1) < g(1,2) < ... < g(N,N)``.  A word is packed into one int: each
letter is the digit ``i*N + j + 1`` in base ``2**bits``, most significant
letter first.  No digit is zero, so integer order on codes is exactly the
graded-lexicographic word order, and the empty word (the unit) is ``0``.

Normal forms come from linear algebra: the span of all ``u*r*v`` with ``r`` a
defining relation and total degree at most ``d`` is brought to echelon form
keyed by leading word, and an element is reduced top-down against it.
"""

from __future__ import annotations

import heapq
from itertools import product as iproduct
import re
from functools import lru_cache

from .errors import DegreeBoundExceeded, InvolutiveUnsupported, ParseError
from .scalar import ONE, ScalarQ, parse_scalar
from .tensor import TensorOp, identity, slot_table

__all__ = [
    "NCPoly",
    "NCMatrix",
    "RelationSet",
    "Reducer",
    "re_relations",
    "reduce",
    "is_central",
    "shift_map",
    "gl_relations",
    "same_ideal_span",
    "generator_matrix",
    "parse_ncpoly",
    "RE",
    "MODIFIED",
]

RE = "re"
MODIFIED = "modified_re"


@lru_cache(maxsize=None)
def _bits(n: int) -> int:
    return (n * n).bit_length()


def code_len(code: int, bits: int) -> int:
    return (code.bit_length() + bits - 1) // bits


def word_to_code(word, bits: int) -> int:
    code = 0
    for a in word:
        code = (code << bits) | (a + 1)
    return code


def code_to_word(code: int, bits: int) -> tuple[int, ...]:
    mask = (1 << bits) - 1
    out = []
    while code:
        out.append((code & mask) - 1)
        code >>= bits
    return tuple(reversed(out))


def _acc(d, k, v):
    prev = d.get(k)
    d[k] = v if prev is None else prev + v


def _prune(d):
    return {k: v for k, v in d.items() if v.num}


def _mul_terms(a, b, bits):
    if not a or not b:
        return {}
    out = {}
    rhs = [(w, c, bits * code_len(w, bits)) for w, c in b.items()]
    for w1, c1 in a.items():
        for w2, c2, sh in rhs:
            _acc(out, (w1 << sh) | w2, c1 * c2)
    return _prune(out)


class NCPoly:
    """Element of the free algebra on the ``N^2`` generators over Q(q)."""

    __slots__ = ("dim_v", "terms")

    def __init__(self, dim_v: int, terms=None):
        self.dim_v = dim_v
        self.terms = {}
        if terms:
            for w, c in terms.items():
                c = ScalarQ.coerce(c)
                if c.num:
                    self.terms[w] = c

    @classmethod
    def _wrap(cls, dim_v, terms):
        obj = object.__new__(cls)
        obj.dim_v = dim_v
        obj.terms = terms
        return obj

    @property
    def bits(self):
        return _bits(self.dim_v)

    @classmethod
    def gen(cls, dim_v: int, i: int, j: int) -> NCPoly:
        """The generator in row ``i``, column ``j`` (0-based)."""
        return cls._wrap(dim_v, {i * dim_v + j + 1: ONE})

    @classmethod
    def const(cls, dim_v: int, c) -> NCPoly:
        c = ScalarQ.coerce(c)
        return cls._wrap(dim_v, {0: c} if c.num else {})

    @classmethod
    def zero(cls, dim_v: int) -> NCPoly:
        return cls._wrap(dim_v, {})

    @classmethod
    def from_words(cls, dim_v: int, words) -> NCPoly:
        """``words``: mapping from tuples of 0-based letter indices ``i*N + j``."""
        b = _bits(dim_v)
        out = {}
        for w, c in words.items():
            _acc(out, word_to_code(w, b), ScalarQ.coerce(c))
        return cls._wrap(dim_v, _prune(out))

    def words(self):
        b = self.bits
        for w in sorted(self.terms):
            yield code_to_word(w, b), self.terms[w]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return code_len(max(self.terms), self.bits)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, NCPoly):
            if other.dim_v != self.dim_v:
                raise ValueError("polynomials over different generator sets")
            return other
        return NCPoly.const(self.dim_v, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return NCPoly._wrap(self.dim_v, _prune(out))

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._wrap(self.dim_v, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, s) -> NCPoly:
        s = ScalarQ.coerce(s)
        if not s.num:
            return NCPoly.zero(self.dim_v)
        if s.is_one():
            return self
        return NCPoly._wrap(self.dim_v, {w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return NCPoly._wrap(self.dim_v, _mul_terms(self.terms, other.terms, self.bits))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = NCPoly.const(self.dim_v, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.dim_v == other.dim_v and self.terms == other.terms
        if isinstance(other, (int, ScalarQ)):
            return self == NCPoly.const(self.dim_v, other)
        return NotImplemented

    __hash__ = None

    def map_coefficients(self, fn) -> NCPoly:
        return NCPoly(self.dim_v, {w: fn(c) for w, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        n = self.dim_v
        parts = []
        for word, c in self.words():
            mono = ".".join(f"g({a // n + 1},{a % n + 1})" for a in word)
            if not mono:
                parts.append(f"({c})" if not c.is_constant() else str(c))
            elif c.is_one():
                parts.append(mono)
            else:
                parts.append(f"({c}) * {mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"NCPoly({self.dim_v}, '{self}')"


_GEN = re.compile(r"^g\((\d+),(\d+)\)$")


def _split_top(text):
    terms, depth, cur, sign = [], 0, "", 1
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-":
            stripped = cur.strip()
            if not stripped:
                sign = sign * (1 if ch == "+" else -1)
                continue
            if stripped.endswith(("*", "^", "/")):
                cur += ch
                continue
            terms.append((sign, stripped))
            cur, sign = "", (1 if ch == "+" else -1)
            continue
        cur += ch
    if cur.strip():
        terms.append((sign, cur.strip()))
    return terms


def parse_ncpoly(text: str, dim_v: int) -> NCPoly:
    """Parse ``"coeff * g(i,j).g(k,l) + ..."`` (1-based indices)."""
    total = NCPoly.zero(dim_v)
    for sign, term in _split_top(re.sub(r"\s+", "", text)):
        word_txt, coeff = None, ONE
        head, sep, tail = term.rpartition("*")
        if sep and all(_GEN.match(g) for g in tail.split(".")):
            coeff, word_txt = parse_scalar(head), tail
        elif all(_GEN.match(g) for g in term.split(".")):
            word_txt = term
        else:
            coeff = parse_scalar(term)
        word = []
        if word_txt:
            for g in word_txt.split("."):
                m = _GEN.match(g)
                i, j = int(m.group(1)), int(m.group(2))
                if not (1 <= i <= dim_v and 1 <= j <= dim_v):
                    raise ParseError(f"generator {g} outside 1..{dim_v}")
                word.append((i - 1) * dim_v + (j - 1))
        total = total + NCPoly.from_words(dim_v, {tuple(word): coeff * sign})
    return total


# -- matrices over NCPoly --------------------------------------------------


class NCMatrix:
    """Square matrix with NCPoly entries acting on V^{(x) arity}.

    Entries are kept as raw term dicts (code -> ScalarQ) for speed.
    """

    __slots__ = ("dim_v", "arity", "rows")

    def __init__(self, dim_v: int, arity: int, rows):
        self.dim_v = dim_v
        self.arity = arity
        self.rows = rows

    @classmethod
    def from_polys(cls, dim_v, arity, rows):
        return cls(dim_v, arity, [[dict(p.terms) for p in r] for r in rows])

    @classmethod
    def zeros(cls, dim_v, arity):
        size = dim_v**arity
        return cls(dim_v, arity, [[{} for _ in range(size)] for _ in range(size)])

    @classmethod
    def scalar(cls, op: TensorOp) -> NCMatrix:
        return cls(op.dim_v, op.arity, [[{0: x} if x.num else {} for x in r] for r in op.rows])

    @property
    def size(self):
        return len(self.rows)

    def entry(self, i, j) -> NCPoly:
        return NCPoly._wrap(self.dim_v, dict(self.rows[i][j]))

    def polys(self):
        return [[NCPoly._wrap(self.dim_v, dict(x)) for x in r] for r in self.rows]

    def __add__(self, other):
        rows = []
        for ra, rb in zip(self.rows, other.rows):
            new = []
            for a, b in zip(ra, rb):
                d = dict(a)
                for w, c in b.items():
                    _acc(d, w, c)
                new.append(_prune(d))
            rows.append(new)
        return NCMatrix(self.dim_v, self.arity, rows)

    def __neg__(self):
        return NCMatrix(
            self.dim_v, self.arity, [[{w: -c for w, c in x.items()} for x in r] for r in self.rows]
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = ScalarQ.coerce(s)
        return NCMatrix(
            self.dim_v,
            self.arity,
            [[_prune({w: c * s for w, c in x.items()}) for x in r] for r in self.rows],
        )

    def scale_poly(self, p: NCPoly) -> NCMatrix:
        """Left multiplication of every entry by the polynomial ``p``."""
        b = _bits(self.dim_v)
        return NCMatrix(
            self.dim_v, self.arity, [[_mul_terms(p.terms, x, b) for x in r] for r in self.rows]
        )

    def __matmul__(self, other):
        if isinstance(other, TensorOp):
            return self._mul_scalar_right(other)
        b = _bits(self.dim_v)
        size = self.size
        right = [[(k, x) for k, x in enumerate(r) if x] for r in other.rows]
        rows = []
        for r in self.rows:
            acc = [{} for _ in range(size)]
            for j, a in enumerate(r):
                if not a:
                    continue
                for k, bx in right[j]:
                    for w, c in _mul_terms(a, bx, b).items():
                        _acc(acc[k], w, c)
            rows.append([_prune(x) for x in acc])
        return NCMatrix(self.dim_v, self.arity, rows)

    def __rmatmul__(self, op):
        if not isinstance(op, TensorOp):
            return NotImplemented
        size = self.size
        rows = []
        for r in op.rows:
            acc = [{} for _ in range(size)]
            for j, s in enumerate(r):
                if not s.num:
                    continue
                for k, x in enumerate(self.rows[j]):
                    for w, c in x.items():
                        _acc(acc[k], w, s * c)
            rows.append([_prune(x) for x in acc])
        return NCMatrix(self.dim_v, self.arity, rows)

    def _mul_scalar_right(self, op):
        size = self.size
        right = op.sparse_rows()
        rows = []
        for r in self.rows:
            acc = [{} for _ in range(size)]
            for j, x in enumerate(r):
                if not x:
                    continue
                for k, s in right[j]:
                    for w, c in x.items():
                        _acc(acc[k], w, c * s)
            rows.append([_prune(y) for y in acc])
        return NCMatrix(self.dim_v, self.arity, rows)

    def __eq__(self, other):
        if not isinstance(other, NCMatrix):
            return NotImplemented
        return self.arity == other.arity and self.rows == other.rows

    __hash__ = None

    def is_zero(self):
        return all(not x for r in self.rows for x in r)

    def power(self, k: int) -> NCMatrix:
        out = NCMatrix.scalar(identity(self.dim_v, self.arity))
        for _ in range(k):
            out = out @ self
        return out

    def embed_first(self, p: int) -> NCMatrix:
        """``M (x) I^{(p - arity)}``."""
        extra = self.dim_v ** (p - self.arity)
        size = self.size * extra
        rows = [[{} for _ in range(size)] for _ in range(size)]
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if x:
                    for t in range(extra):
                        rows[i * extra + t][j * extra + t] = dict(x)
        return NCMatrix(self.dim_v, p, rows)

    def r_partial_trace(self, c: TensorOp, k: int) -> NCMatrix:
        """``Tr_(k)(C_k M)``."""
        tab = slot_table(self.dim_v, self.arity, k)
        n = len(tab)
        cnz = list(c.nonzeros())
        rows = []
        for r in range(n):
            tr = tab[r]
            new = []
            for col in range(n):
                tc = tab[col]
                acc = {}
                for s, t, cv in cnz:
                    for w, x in self.rows[tr[t]][tc[s]].items():
                        _acc(acc, w, cv * x)
                new.append(_prune(acc))
            rows.append(new)
        return NCMatrix(self.dim_v, self.arity - 1, rows)

    def weighted_trace(self, weight: TensorOp) -> NCPoly:
        """``Tr(W M) = sum W_I^J M_J^I`` for a scalar weight ``W``."""
        acc = {}
        for i, j, s in weight.nonzeros():
            for w, c in self.rows[j][i].items():
                _acc(acc, w, s * c)
        return NCPoly._wrap(self.dim_v, _prune(acc))

    def trace(self) -> NCPoly:
        return self.weighted_trace(identity(self.dim_v, self.arity))


def generator_matrix(dim_v: int) -> NCMatrix:
    """``L = ||l_i^j||`` with generator ``g(i, j)`` in row ``i``, column ``j``."""
    return NCMatrix(
        dim_v, 1, [[{i * dim_v + j + 1: ONE} for j in range(dim_v)] for i in range(dim_v)]
    )


# -- relations and normal forms -------------------------------------------


class RelationSet:
    """The ``N^4`` entries of the defining matrix identity, each read as ``= 0``."""

    def __init__(self, variant: str, symmetry, relations):
        self.variant = variant
        self.symmetry = symmetry
        self.relations = relations
        self._reducers = {}

    @property
    def dim_v(self):
        return self.symmetry.dim_v

    @property
    def homogeneous(self):
        return self.variant == RE

    def reducer(self, degree_bound: int) -> Reducer:
        if self.homogeneous:
            key = "graded"
        else:
            key = degree_bound
        if key not in self._reducers:
            self._reducers[key] = Reducer(self, None if self.homogeneous else degree_bound)
        return self._reducers[key]

    def default_degree(self) -> int:
        from .symmetry import birank_degree

        m = birank_degree(self.symmetry)
        return 2 * ((m or self.dim_v) + 1)


def re_relations(s, variant: str = RE) -> RelationSet:
    """Expand ``R L_1 R L_1 - L_1 R L_1 R`` (minus ``R L_1 - L_1 R`` for the
    modified algebra) into its ``N^4`` scalar relations."""
    if variant not in (RE, MODIFIED):
        raise ValueError(f"unknown variant {variant!r}")
    key = ("relations", variant)
    if key in s._cache:
        return s._cache[key]
    l1 = generator_matrix(s.dim_v).embed_first(2)
    r = s.R
    lhs = ((r @ l1) @ r) @ l1 - (l1 @ r) @ (l1 @ r)
    if variant == MODIFIED:
        lhs = lhs - ((r @ l1) - (l1 @ r))
    rels = [NCPoly._wrap(s.dim_v, x) for row in lhs.rows for x in row]
    out = RelationSet(variant, s, rels)
    s._cache[key] = out
    return out


def gl_relations(dim_v: int) -> list[NCPoly]:
    """``l_i^j l_k^m - l_k^m l_i^j - l_i^m delta_k^j + l_k^j delta_i^m`` for all indices."""
    n = dim_v
    out = []
    for i, j, k, m in iproduct(range(n), repeat=4):
        a, b = NCPoly.gen(n, i, j), NCPoly.gen(n, k, m)
        rel = a * b - b * a
        if k == j:
            rel = rel - NCPoly.gen(n, i, m)
        if i == m:
            rel = rel + NCPoly.gen(n, k, j)
        out.append(rel)
    return out


def same_ideal_span(a: RelationSet, b: RelationSet, degree_bound: int = 2) -> bool:
    """Each relation of one set reduces to zero modulo the other, both ways."""
    return all(reduce(r, b, degree_bound).is_zero() for r in a.relations) and all(
        reduce(r, a, degree_bound).is_zero() for r in b.relations
    )


def _words_of_length(length: int, n_letters: int, bits: int):
    codes = [0]
    for _ in range(length):
        codes = [(c << bits) | (a + 1) for c in codes for a in range(n_letters)]
    return codes


class Reducer:
    """Echelon basis of the ideal, either per graded component (homogeneous
    relations) or for the whole filtered piece of degree ``<= bound``."""

    def __init__(self, relset: RelationSet, bound: int | None):
        self.relset = relset
        self.bound = bound
        self.dim_v = relset.dim_v
        self.bits = _bits(self.dim_v)
        self._pivots = {}  # graded: degree -> pivots; filtered: "all" -> pivots
        self.stats = {}

    def _build(self, key):
        if key in self._pivots:
            return self._pivots[key]
        n_letters = self.dim_v**2
        bits = self.bits
        rels = [r.terms for r in self.relset.relations if r.terms]
        if key == "all":
            pairs = [
                (a, b)
                for total in range(self.bound - 1)
                for a in range(total + 1)
                for b in [total - a]
            ]
        else:
            pairs = [(a, key - 2 - a) for a in range(key - 1)]
        pivots = {}
        rows_in = 0
        for a, b in pairs:
            lefts = _words_of_length(a, n_letters, bits)
            rights = _words_of_length(b, n_letters, bits)
            shift_r = bits * b
            for rel in rels:
                for u in lefts:
                    for v in rights:
                        row = {}
                        for w, c in rel.items():
                            # u * w * v
                            wl = code_len(w, bits)
                            row[(((u << (bits * wl)) | w) << shift_r) | v] = c
                        rows_in += 1
                        self._insert(pivots, row)
        self._pivots[key] = pivots
        self.stats[key] = {"rows": rows_in, "rank": len(pivots)}
        return pivots

    @staticmethod
    def _reduce_terms(row, pivots):
        out = {}
        heap = [-w for w in row]
        heapq.heapify(heap)
        while heap:
            w = -heapq.heappop(heap)
            c = row.pop(w)
            if not c.num:
                continue
            tail = pivots.get(w)
            if tail is None:
                out[w] = c
                continue
            for w2, c2 in tail:
                t = c * c2
                prev = row.get(w2)
                if prev is None:
                    row[w2] = -t
                    heapq.heappush(heap, -w2)
                else:
                    row[w2] = prev - t
        return out

    def _insert(self, pivots, row):
        red = self._reduce_terms(row, pivots)
        if not red:
            return
        lead = max(red)
        inv = ONE / red.pop(lead)
        pivots[lead] = sorted(((w, c * inv) for w, c in red.items()), reverse=True)

    def normal_form(self, p: NCPoly) -> NCPoly:
        if p.dim_v != self.dim_v:
            raise ValueError("polynomial over a different generator set")
        if not p.terms:
            return p
        if self.bound is not None:
            if p.degree() > self.bound:
                raise DegreeBoundExceeded(f"degree {p.degree()} exceeds bound {self.bound}")
            return NCPoly._wrap(self.dim_v, self._reduce_terms(dict(p.terms), self._build("all")))
        by_deg = {}
        for w, c in p.terms.items():
            by_deg.setdefault(code_len(w, self.bits), {})[w] = c
        out = {}
        for d, terms in by_deg.items():
            if d < 2:
                out.update(terms)
            else:
                out.update(self._reduce_terms(terms, self._build(d)))
        return NCPoly._wrap(self.dim_v, out)

    def quotient_dim(self, degree: int) -> int:
        """Dimension of the reduced component of the given degree (graded case)
        or of the filtered piece of degree ``<= degree`` (filtered case)."""
        n_letters = self.dim_v**2
        if self.bound is None:
            return n_letters**degree - (len(self._build(degree)) if degree >= 2 else 0)
        total = sum(n_letters**d for d in range(degree + 1))
        piv = self._build("all")
        return total - sum(1 for w in piv if code_len(w, self.bits) <= degree)


def reduce(p: NCPoly, rels: RelationSet, degree_bound: int | None = None) -> NCPoly:
    """Canonical representative of ``p`` modulo the ideal, up to ``degree_bound``."""
    if degree_bound is None:
        degree_bound = max(p.degree(), 2)
    if p.degree() > degree_bound:
        raise DegreeBoundExceeded(f"degree {p.degree()} exceeds bound {degree_bound}")
    return rels.reducer(degree_bound).normal_form(p)


def is_central(z: NCPoly, rels: RelationSet, degree_bound: int | None = None) -> bool:
    """True iff every commutator with a generator reduces to zero."""
    if degree_bound is None:
        degree_bound = max(z.degree() + 1, 2)
    if z.degree() + 1 > degree_bound:
        raise DegreeBoundExceeded(f"deg(z) + 1 = {z.degree() + 1} exceeds bound {degree_bound}")
    n = rels.dim_v
    for i in range(n):
        for j in range(n):
            g = NCPoly.gen(n, i, j)
            if not reduce(z * g - g * z, rels, degree_bound).is_zero():
                return False
    return True


def substitute(p: NCPoly, images) -> NCPoly:
    """Algebra homomorphism of the free algebra: letter ``a`` -> ``images[a]``."""
    n = p.dim_v
    out = NCPoly.zero(n)
    cache = {}
    for word, c in p.words():
        key = word
        if key not in cache:
            acc = NCPoly.const(n, 1)
            for a in word:
                acc = acc * images[a]
            cache[key] = acc
        out = out + cache[key].scale(c)
    return out


def shift_map(p: NCPoly, s) -> NCPoly:
    """``l_i^j -> delta_i^j - (q - q^{-1}) lhat_i^j``."""
    if not s.is_hecke:
        raise InvolutiveUnsupported("the shift isomorphism degenerates at q = +-1")
    n = p.dim_v
    kappa = s.kappa
    images = []
    for i in range(n):
        for j in range(n):
            img = NCPoly.gen(n, i, j).scale(-kappa)
            if i == j:
                img = img + 1
            images.append(img)
    return substitute(p, images)
