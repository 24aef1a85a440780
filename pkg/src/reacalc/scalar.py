"""Exact arithmetic in Q(q), the field of rational functions in ``q``.

Values are stored as a reduced pair of integer polynomials (numerator,
denominator).  The denominator has positive leading coefficient and the
pair is coprime in Z[q], so equality is a field-by-field comparison.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from . import _kernel as K
from .errors import ParseError, PoleAtOne, PoleAtPoint

__all__ = ["ScalarQ", "Q", "qint", "qpow", "eval_at", "limit_q1", "parse_scalar"]


class ScalarQ:
    """An element of Q(q) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=(), den=(1,)):
        if isinstance(num, int):
            num = (num,) if num else ()
        n, d = K.normalize(K.p_trim(tuple(num)), K.p_trim(tuple(den)))
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, n, d):
        obj = object.__new__(cls)
        obj.num = n
        obj.den = d
        obj._hash = None
        return obj

    @classmethod
    def from_laurent(cls, terms):
        """Build from a mapping ``{exponent: integer coefficient}`` (exponents may be negative)."""
        terms = {e: c for e, c in dict(terms).items() if c}
        if not terms:
            return ZERO
        lo = min(terms)
        shift = -lo if lo < 0 else 0
        top = max(terms) + shift
        n = [0] * (top + 1)
        for e, c in terms.items():
            n[e + shift] = c
        d = (0,) * shift + (1,)
        return cls(tuple(n), d)

    @staticmethod
    def coerce(x) -> ScalarQ:
        if isinstance(x, ScalarQ):
            return x
        if isinstance(x, int):
            return _int_cache(x) if -64 <= x <= 64 else ScalarQ._raw((x,), (1,))
        if isinstance(x, Fraction):
            return ScalarQ((x.numerator,), (x.denominator,))
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot convert {type(x).__name__} to ScalarQ")

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on q")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ.coerce(other)
            except TypeError:
                return NotImplemented
        return ScalarQ._raw(*K.f_add(self.num, self.den, other.num, other.den))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ.coerce(other)
            except TypeError:
                return NotImplemented
        return ScalarQ._raw(*K.f_sub(self.num, self.den, other.num, other.den))

    def __rsub__(self, other):
        return ScalarQ.coerce(other) - self

    def __neg__(self):
        return ScalarQ._raw(K.p_neg(self.num), self.den)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ.coerce(other)
            except TypeError:
                return NotImplemented
        return ScalarQ._raw(*K.f_mul(self.num, self.den, other.num, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ.coerce(other)
            except TypeError:
                return NotImplemented
        return ScalarQ._raw(*K.f_div(self.num, self.den, other.num, other.den))

    def __rtruediv__(self, other):
        return ScalarQ.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (ONE / self) ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> ScalarQ:
        return ONE / self

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, ScalarQ):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == ScalarQ.coerce(other)
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.den == (1,) and len(self.num) <= 1:
                h = hash(self.num[0] if self.num else 0)
            else:
                h = hash((self.num, self.den))
            self._hash = h
        return h

    # -- text form --------------------------------------------------------

    def __str__(self):
        n = _poly_str(self.num)
        if self.den == (1,):
            return n
        d = _poly_str(self.den)
        if _needs_parens(self.num):
            n = f"({n})"
        if _needs_parens(self.den):
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"ScalarQ('{self}')"

    # convenience
    def eval_at(self, q0) -> Fraction:
        return eval_at(self, q0)

    def limit_q1(self) -> Fraction:
        return limit_q1(self)


def _needs_parens(p):
    nz = sum(1 for c in p if c)
    if nz > 1:
        return True
    return nz == 1 and p[-1] != 1 and len(p) > 1


def _poly_str(p):
    if not p:
        return "0"
    parts = []
    for e in range(len(p) - 1, -1, -1):
        c = p[e]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


@lru_cache(maxsize=None)
def _int_cache(x):
    return ScalarQ._raw((x,) if x else (), (1,))


ZERO = ScalarQ._raw((), (1,))
ONE = ScalarQ._raw((1,), (1,))
Q = ScalarQ._raw((0, 1), (1,))
ScalarQ.ZERO = ZERO
ScalarQ.ONE = ONE
ScalarQ.Q = Q


@lru_cache(maxsize=None)
def qpow(k: int) -> ScalarQ:
    """``q**k`` for any integer ``k``."""
    if k >= 0:
        return ScalarQ._raw((0,) * k + (1,), (1,))
    return ScalarQ._raw((1,), (0,) * (-k) + (1,))


@lru_cache(maxsize=None)
def qint(k: int) -> ScalarQ:
    """The q-integer ``(q^k - q^-k)/(q - q^-1)``; odd in ``k``."""
    if k < 0:
        return -qint(-k)
    if k == 0:
        return ZERO
    # q^{-(k-1)} + q^{-(k-3)} + ... + q^{k-1}
    return ScalarQ.from_laurent({e: 1 for e in range(-(k - 1), k, 2)})


KAPPA = Q - qpow(-1)  # q - q^{-1}


def _eval_poly(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def eval_at(s, q0) -> Fraction:
    """Exact value of ``s`` at the rational point ``q = q0``."""
    s = ScalarQ.coerce(s)
    x = Fraction(q0)
    d = _eval_poly(s.den, x)
    if d == 0:
        raise PoleAtPoint(f"{s} has a pole at q = {x}")
    return _eval_poly(s.num, x) / d


def limit_q1(s) -> Fraction:
    """Value at ``q = 1`` after cancelling common factors (already done canonically)."""
    s = ScalarQ.coerce(s)
    try:
        return eval_at(s, 1)
    except PoleAtPoint:
        raise PoleAtOne(f"{s} has a non-removable singularity at q = 1") from None


# -- parser ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|(\^)|([-+*/()]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        if m.group(1):
            out.append(("int", int(m.group(1))))
        elif m.group(2):
            out.append(("q", None))
        elif m.group(3):
            out.append(("^", None))
        else:
            out.append((m.group(4), None))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0
        self.text = text

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind=None):
        if self.i >= len(self.toks):
            raise ParseError(f"unexpected end of input in {self.text!r}")
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r} in {self.text!r}")
        self.i += 1
        return tok

    def expr(self):
        if self.peek() in ("+", "-"):
            sign = self.take()[0]
            val = self.term()
            if sign == "-":
                val = -val
        else:
            val = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.factor()
            val = val * rhs if op == "*" else val / rhs
        return val

    def factor(self):
        if self.peek() == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            elif self.peek() == "(":
                # q^(-2)
                self.take()
                neg = self.peek() == "-"
                if neg:
                    self.take()
                e = self.take("int")[1]
                self.take(")")
                return base ** (-e if neg else e)
            e = self.take("int")[1]
            base = base ** (-e if neg else e)
        return base

    def atom(self):
        kind = self.peek()
        if kind == "int":
            return ScalarQ.coerce(self.take()[1])
        if kind == "q":
            self.take()
            return Q
        if kind == "(":
            self.take()
            val = self.expr()
            self.take(")")
            return val
        raise ParseError(f"unexpected token {kind!r} in {self.text!r}")


def parse_scalar(text: str) -> ScalarQ:
    """Parse the canonical text form (and any rational expression in ``q``)."""
    p = _Parser(text)
    val = p.expr()
    if p.i != len(p.toks):
        raise ParseError(f"trailing input in {text!r}")
    return val
