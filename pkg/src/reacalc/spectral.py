"""Quantum eigenvalues, the quantum Harish-Chandra morphism and characters.

Symmetric polynomials live in :class:`MPoly`, a sparse commutative polynomial
over Q(q) with named variables (``mu1..mum`` then ``nu1..nun``, or
``muhat1..``).  Eigenvalue weights are sums of fractions whose denominators
are products of differences of variables; :class:`SymRat` keeps those
denominators factored so that polynomiality is certified by exact division
by each factor.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .errors import NotInSpan, NotPolynomial, ParseError
from .scalar import KAPPA, ONE, ZERO, ScalarQ, limit_q1, parse_scalar, qint, qpow

__all__ = [
    "MPoly",
    "SymRat",
    "Partition",
    "EvBasisElement",
    "mu_vars",
    "elementary_sym",
    "express_in_e_basis",
    "express_in_generators",
    "hc_morphism",
    "zamena",
    "powersum_sym",
    "powersum_hat_sym",
    "super_powersum",
    "mu_char",
    "muhat_char",
    "character",
    "powersum_direct",
]


class MPoly:
    """Commutative polynomial ``{exponent tuple: ScalarQ}`` in named variables."""

    __slots__ = ("names", "terms")

    def __init__(self, names, terms=None):
        self.names = tuple(names)
        self.terms = {}
        for e, c in (terms or {}).items():
            c = ScalarQ.coerce(c)
            if c.num:
                e = tuple(e)
                if len(e) != len(self.names):
                    raise ValueError("exponent length does not match variable count")
                self.terms[e] = self.terms[e] + c if e in self.terms else c
        self.terms = {e: c for e, c in self.terms.items() if c.num}

    @classmethod
    def _wrap(cls, names, terms):
        obj = object.__new__(cls)
        obj.names = names
        obj.terms = terms
        return obj

    @classmethod
    def var(cls, names, i) -> MPoly:
        e = [0] * len(names)
        e[i] = 1
        return cls._wrap(tuple(names), {tuple(e): ONE})

    @classmethod
    def const(cls, names, c) -> MPoly:
        c = ScalarQ.coerce(c)
        return cls._wrap(tuple(names), {(0,) * len(names): c} if c.num else {})

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.names != self.names:
                raise ValueError(f"variable sets differ: {self.names} vs {other.names}")
            return other
        return MPoly.const(self.names, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out[e] + c if e in out else c
            if v.num:
                out[e] = v
            else:
                out.pop(e, None)
        return MPoly._wrap(self.names, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._wrap(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, s):
        s = ScalarQ.coerce(s)
        if not s.num:
            return MPoly._wrap(self.names, {})
        return MPoly._wrap(self.names, {e: c * s for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t = c1 * c2
                out[e] = out[e] + t if e in out else t
        return MPoly._wrap(self.names, {e: c for e, c in out.items() if c.num})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        out = MPoly.const(self.names, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.names == other.names and self.terms == other.terms
        if isinstance(other, (int, ScalarQ)):
            return self == MPoly.const(self.names, other)
        return NotImplemented

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def divexact(self, g: MPoly) -> MPoly:
        """Exact quotient in lex order; raises NotPolynomial on a nonzero remainder."""
        g = self._coerce(g)
        if not g.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        lt_g = max(g.terms)
        inv = ONE / g.terms[lt_g]
        rem = dict(self.terms)
        quot = {}
        while rem:
            lt = max(rem)
            mono = tuple(a - b for a, b in zip(lt, lt_g))
            if min(mono) < 0:
                raise NotPolynomial("division leaves a nonzero remainder")
            c = rem[lt] * inv
            quot[mono] = c
            for e, cg in g.terms.items():
                e2 = tuple(a + b for a, b in zip(e, mono))
                v = rem.get(e2, ZERO) - c * cg
                if v.num:
                    rem[e2] = v
                else:
                    rem.pop(e2, None)
        return MPoly._wrap(self.names, quot)

    def substitute(self, images: dict, names=None) -> MPoly:
        """Replace variable ``i`` by ``images[i]`` (an MPoly over ``names``)."""
        names = tuple(names) if names is not None else self.names
        out = MPoly.const(names, 0)
        powers = {}
        for e, c in self.terms.items():
            term = MPoly.const(names, c)
            for i, k in enumerate(e):
                if k:
                    if (i, k) not in powers:
                        img = images[i] if i in images else MPoly.var(names, names.index(self.names[i]))
                        powers[(i, k)] = img**k
                    term = term * powers[(i, k)]
            out = out + term
        return out

    def evaluate(self, values) -> ScalarQ:
        acc = ZERO
        vals = [ScalarQ.coerce(v) for v in values]
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = t * v**k
            acc = acc + t
        return acc

    def permute(self, perm) -> MPoly:
        """Rename variable ``i`` to variable ``perm[i]``."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * len(e)
            for i, k in enumerate(e):
                new[perm[i]] = k
            out[tuple(new)] = c
        return MPoly._wrap(self.names, out)

    def map_coefficients(self, fn) -> MPoly:
        return MPoly(self.names, {e: fn(c) for e, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = " ".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k
            )
            if not mono:
                parts.append(str(c) if c.is_constant() else f"({c})")
            elif c.is_one():
                parts.append(mono)
            else:
                parts.append(f"({c}) * {mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"MPoly({self.names}, '{self}')"

    def to_dict(self):
        return {
            "vars": list(self.names),
            "terms": [[str(self.terms[e]), list(e)] for e in sorted(self.terms, reverse=True)],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["vars"], {tuple(e): parse_scalar(c) for c, e in data["terms"]})

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)


def parse_mpoly(text: str, names) -> MPoly:
    """Parse the text form ``"coeff * mu1^a mu2^b + ..."``."""
    from .ncalg import _split_top

    names = tuple(names)
    out = MPoly.const(names, 0)
    for sign, term in _split_top(text.strip()):
        head, sep, tail = term.rpartition("*")
        if sep and all(_is_factor(f, names) for f in tail.split()):
            coeff, mono = parse_scalar(head), tail
        elif all(_is_factor(f, names) for f in term.split()):
            coeff, mono = ONE, term
        else:
            coeff, mono = parse_scalar(term), ""
        e = [0] * len(names)
        for f in mono.split():
            n, _, k = f.partition("^")
            e[names.index(n)] += int(k) if k else 1
        out = out + MPoly(names, {tuple(e): coeff * sign})
    return out


def _is_factor(f, names):
    n, _, k = f.partition("^")
    return n in names and (not k or k.isdigit())


def mu_vars(m: int, n: int = 0, hat: bool = False):
    base = "muhat" if hat else "mu"
    nb = "nuhat" if hat else "nu"
    return tuple(f"{base}{i}" for i in range(1, m + 1)) + tuple(f"{nb}{j}" for j in range(1, n + 1))


def elementary_sym(names, k: int, which=None) -> MPoly:
    """Elementary symmetric polynomial of degree ``k`` in the variables ``which``."""
    which = range(len(names)) if which is None else which
    out = MPoly.const(names, 0)
    for combo in combinations(which, k):
        e = [0] * len(names)
        for i in combo:
            e[i] = 1
        out = out + MPoly(names, {tuple(e): ONE})
    return out


class SymRat:
    """``numerator / prod(x_a - x_b)`` with the denominator kept as factors ``(a, b)``, ``a < b``."""

    def __init__(self, num: MPoly, den=None):
        self.num = num
        self.den = Counter(den or {})

    @property
    def names(self):
        return self.num.names

    @property
    def denominator(self) -> MPoly:
        out = MPoly.const(self.names, 1)
        for (a, b), k in self.den.items():
            out = out * _diff(self.names, a, b) ** k
        return out

    def __add__(self, other: SymRat) -> SymRat:
        den = self.den | other.den
        return SymRat(self._lift(den) + other._lift(den), den)

    def _lift(self, den):
        out = self.num
        for f, k in (den - self.den).items():
            out = out * _diff(self.names, *f) ** k
        return out

    def to_poly(self) -> MPoly:
        out = self.num
        for f, k in self.den.items():
            for _ in range(k):
                out = out.divexact(_diff(self.names, *f))
        return out


def _diff(names, a, b):
    return MPoly.var(names, a) - MPoly.var(names, b)


def _frac_diff(names, a, b):
    """``1 / (x_a - x_b)`` as a SymRat with normalized factor."""
    if a < b:
        return SymRat(MPoly.const(names, 1), {(a, b): 1})
    return SymRat(MPoly.const(names, -1), {(b, a): 1})


def _mul_rat(x: SymRat, y: SymRat) -> SymRat:
    return SymRat(x.num * y.num, x.den + y.den)


def _weighted_sum(k, m, n, hat, weight_factor_mu, weight_factor_nu, lead_mu, lead_nu) -> SymRat:
    names = mu_vars(m, n, hat)
    x = [MPoly.var(names, i) for i in range(m + n)]
    total = SymRat(MPoly.const(names, 0))
    for i in range(m):
        term = SymRat(x[i] ** k * lead_mu)
        for p in range(m):
            if p != i:
                term = _mul_rat(term, SymRat(weight_factor_mu(x[i], x[p], "mm")))
                term = _mul_rat(term, _frac_diff(names, i, p))
        for j in range(m, m + n):
            term = _mul_rat(term, SymRat(weight_factor_mu(x[i], x[j], "mn")))
            term = _mul_rat(term, _frac_diff(names, i, j))
        total = total + term
    for j in range(m, m + n):
        term = SymRat(x[j] ** k * lead_nu)
        for p in range(m, m + n):
            if p != j:
                term = _mul_rat(term, SymRat(weight_factor_nu(x[j], x[p], "nn")))
                term = _mul_rat(term, _frac_diff(names, j, p))
        for i in range(m):
            term = _mul_rat(term, SymRat(weight_factor_nu(x[j], x[i], "nm")))
            term = _mul_rat(term, _frac_diff(names, j, i))
        total = total + term
    return total


def _mu_factor(xi, xp, kind):
    if kind == "mm":
        return xi - xp.scale(qpow(-2))
    return xi - xp.scale(qpow(2))  # mu_i - q^2 nu_j


def _nu_factor(xj, xp, kind):
    if kind == "nn":
        return xj - xp.scale(qpow(2))
    return xj - xp.scale(qpow(-2))  # nu_j - q^{-2} mu_i


def powersum_rat(k: int, m: int, n: int = 0) -> SymRat:
    """``sum mu_i^k d_i + sum nu_j^k f_j`` before cancellation."""
    return _weighted_sum(k, m, n, False, _mu_factor, _nu_factor, qpow(-1), -qpow(1))


def super_powersum(k: int, m: int, n: int) -> MPoly:
    """Power sum of a bi-rank ``(m|n)`` symmetry in the eigenvalues ``mu``, ``nu``."""
    if k < 0 or m + n < 1:
        raise ValueError("need k >= 0 and m + n >= 1")
    return powersum_rat(k, m, n).to_poly()


def powersum_sym(k: int, m: int) -> MPoly:
    """``p_k(L) = sum_i mu_i^k d_i`` with ``d_i = q^{-1} prod_{p != i} (mu_i - q^{-2} mu_p)/(mu_i - mu_p)``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return powersum_rat(k, m, 0).to_poly()


def powersum_hat_rat(k: int, m: int) -> SymRat:
    shift = qpow(-1)

    def fac(xi, xp, kind):
        return xi - xp.scale(qpow(-2)) - shift

    return _weighted_sum(k, m, 0, True, fac, None, qpow(-1), None)


def powersum_hat_sym(k: int, m: int) -> MPoly:
    """``p_k(Lhat) = sum_i muhat_i^k dhat_i``,
    ``dhat_i = q^{-1} prod_{p != i} (muhat_i - q^{-2} muhat_p - q^{-1})/(muhat_i - muhat_p)``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return powersum_hat_rat(k, m).to_poly()


# -- Harish-Chandra morphism ------------------------------------------------


@dataclass
class EvBasisElement:
    """Polynomial in abstract symbols ``e1..em`` standing for ``e_k(L)``.

    ``basis`` records which central elements the symbols denote: ``"e(L)"`` or,
    in the modified algebra, ``"sh(e(L))"`` (their images under the shift).
    """

    poly: MPoly
    basis: str = "e(L)"

    @property
    def m(self):
        return len(self.poly.names)

    def __str__(self):
        return str(self.poly)


def e_names(m):
    return tuple(f"e{k}" for k in range(1, m + 1))


def hc_morphism(p, m: int | None = None) -> MPoly:
    """Substitute ``e_k -> q^{-k} e_k(mu_1, ..., mu_m)``."""
    poly = p.poly if isinstance(p, EvBasisElement) else p
    m = m if m is not None else len(poly.names)
    if len(poly.names) != m:
        raise ValueError(f"expected a polynomial in e1..e{m}")
    names = mu_vars(m)
    images = {k - 1: elementary_sym(names, k).scale(qpow(-k)) for k in range(1, m + 1)}
    return poly.substitute(images, names)


def zamena(p: MPoly, kappa=KAPPA) -> MPoly:
    """Rewrite a polynomial in ``mu`` via ``mu_i = 1 - (q - q^{-1}) muhat_i``."""
    m = len(p.names)
    names = mu_vars(m, hat=True)
    images = {i: MPoly.const(names, 1) - MPoly.var(names, i).scale(kappa) for i in range(m)}
    return p.substitute(images, names)


def _e_monomials(m, max_deg):
    """Exponent vectors ``a`` with ``sum k * a_k <= max_deg``, graded order."""
    out = [()]
    for k in range(1, m + 1):
        out = [e + (a,) for e in out for a in range(max_deg // k + 1)]
    out = [e for e in out if sum((i + 1) * a for i, a in enumerate(e)) <= max_deg]
    return sorted(out, key=lambda e: (sum((i + 1) * a for i, a in enumerate(e)), e))


def express_in_e_basis(z, s, variant: str, max_deg: int, degree_bound=None) -> EvBasisElement:
    """Unique ``P`` with ``z = P(e_1(L), ..., e_m(L))`` in the quotient.

    In the modified algebra the symbols stand for the shift images of
    ``e_k(L)``, which is what the eigenvalue parameterization refers to.
    """
    from .charmap import elementary
    from .ncalg import MODIFIED, shift_map
    from .symmetry import birank_degree

    expr = z.expr if hasattr(z, "expr") else z
    m = birank_degree(s)
    gens = []
    for k in range(1, m + 1):
        ek = elementary(s, "re", k).expr
        gens.append(shift_map(ek, s) if variant == MODIFIED else ek)
    poly = express_in_generators(expr, s, variant, gens, max_deg, degree_bound, e_names(m))
    return EvBasisElement(poly, "sh(e(L))" if variant == MODIFIED else "e(L)")


def express_in_generators(expr, s, variant, gens, max_deg, degree_bound=None, names=None) -> MPoly:
    """Polynomial ``P`` (generator ``k`` of weight ``k``) with ``expr = P(gens)`` in the quotient."""
    from .ncalg import NCPoly, re_relations, reduce

    rels = re_relations(s, variant)
    bound = degree_bound or max(max_deg, expr.degree(), 2)
    monos = _e_monomials(len(gens), max_deg)
    cols = []
    for e in monos:
        prod = NCPoly.const(s.dim_v, 1)
        for k, a in enumerate(e):
            for _ in range(a):
                prod = prod * gens[k]
        cols.append(reduce(prod, rels, bound).terms)
    target = reduce(expr, rels, bound).terms
    sol = _solve_columns(cols, target)
    if sol is None:
        raise NotInSpan("element is not a polynomial in the generators within the degree bound")
    names = names or tuple(f"g{k}" for k in range(1, len(gens) + 1))
    return MPoly(names, {e: c for e, c in zip(monos, sol)})


def _solve_columns(cols, target):
    """Solve ``sum x_c * cols[c] = target`` over Q(q); ``None`` if inconsistent.

    Columns must be independent (else ``NotInSpan`` about non-uniqueness)."""
    words = sorted(set().union(*[set(c) for c in cols], set(target)), reverse=True)
    n = len(cols)
    rows = [[c.get(w, ZERO) for c in cols] + [target.get(w, ZERO)] for w in words]
    piv_cols = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col].num), None)
        if piv is None:
            raise NotInSpan("e-monomials are linearly dependent in the quotient")
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col].num:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(col)
        r += 1
    if any(rows[i][n].num for i in range(r, len(rows))):
        return None
    return [rows[i][n] for i in range(n)]


# -- characters -------------------------------------------------------------


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative integers, padded to length ``m``."""

    def __new__(cls, parts, m: int | None = None):
        parts = [int(x) for x in parts]
        if m is not None:
            if len(parts) > m:
                if any(parts[m:]):
                    raise ValueError(f"partition {parts} has more than {m} nonzero parts")
                parts = parts[:m]
            parts = parts + [0] * (m - len(parts))
        if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not a partition")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str, m: int | None = None):
        try:
            parts = [int(x) for x in text.replace(" ", "").split(",") if x]
        except ValueError:
            raise ParseError(f"cannot parse partition {text!r}") from None
        return cls(parts, m)


def _shifted(lam, m):
    lam = Partition(lam, m)
    return [lam[i] + m - (i + 1) for i in range(m)]


def mu_char(lam, m: int) -> list[ScalarQ]:
    """``mu_i(lambda) = q^{-2(lambda_i + m - i)}``."""
    return [qpow(-2 * s) for s in _shifted(lam, m)]


def muhat_char(lam, m: int) -> list[ScalarQ]:
    """``muhat_i(lambda) = q^{-(lambda_i + m - i)} (lambda_i + m - i)_q``."""
    return [qpow(-s) * qint(s) for s in _shifted(lam, m)]


def character(z: MPoly, lam, hat: bool | None = None) -> ScalarQ:
    """Evaluate a symmetric polynomial in the eigenvalues at ``mu(lambda)``
    (or ``muhat(lambda)`` for hatted variables)."""
    if any(n.startswith("nu") for n in z.names):
        raise NotImplementedError("characters of the nu eigenvalues are not known")
    m = len(z.names)
    if hat is None:
        hat = bool(z.names) and z.names[0].startswith("muhat")
    values = muhat_char(lam, m) if hat else mu_char(lam, m)
    return z.evaluate(values)


def powersum_direct(k: int, values, hat: bool = False) -> ScalarQ:
    """``sum_i v_i^k w_i(v)`` evaluated pointwise at distinct scalars ``v``."""
    values = [ScalarQ.coerce(v) for v in values]
    total = ZERO
    for i, vi in enumerate(values):
        w = qpow(-1)
        for p, vp in enumerate(values):
            if p == i:
                continue
            top = vi - qpow(-2) * vp - (qpow(-1) if hat else ZERO)
            w = w * top / (vi - vp)
        total = total + vi**k * w
    return total


def classical_character(k: int, lam, m: int):
    """q -> 1 limit of the p_k(Lhat) character (the classical formula)."""
    return limit_q1(character(powersum_hat_sym(k, m), lam, hat=True))
