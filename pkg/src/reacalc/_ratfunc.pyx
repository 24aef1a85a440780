# cython: language_level=3
"""Compiled kernel for dense integer polynomials and reduced fractions.

Same representation and functions as ``_ratfunc_py``.  Products of short
polynomials with small coefficients run in C ``long long`` arithmetic; larger
coefficients fall back to Python integers.
"""

from math import gcd as igcd, isqrt

cdef long long _SMALL = 1 << 28

ONE = (1,)
ZERO = ()


def p_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def p_add(tuple a, tuple b):
    cdef Py_ssize_t i, n
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    out = list(a)
    n = len(b)
    for i in range(n):
        out[i] += b[i]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def p_neg(a):
    return tuple(-c for c in a)


def p_sub(a, b):
    return p_add(a, p_neg(b))


def p_scale(a, c):
    if c == 0:
        return ZERO
    return tuple(c * x for x in a)


cdef bint _small(tuple a):
    cdef object c
    for c in a:
        if c >= _SMALL or c <= -_SMALL:
            return False
    return True


def p_mul(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef long long x
    cdef long long[128] buf
    if not la or not lb:
        return ZERO
    if la == 1:
        return p_scale(b, a[0])
    if lb == 1:
        return p_scale(a, b[0])
    if la + lb - 1 <= 128 and min(la, lb) <= 64 and _small(a) and _small(b):
        for i in range(la + lb - 1):
            buf[i] = 0
        for i in range(la):
            x = a[i]
            if x:
                for j in range(lb):
                    buf[i + j] += x * <long long>b[j]
        return tuple([buf[i] for i in range(la + lb - 1)])
    out = [0] * (la + lb - 1)
    for i in range(la):
        xo = a[i]
        if xo:
            for j in range(lb):
                out[i + j] += xo * b[j]
    return tuple(out)


def p_content(a):
    g = 0
    for c in a:
        g = igcd(g, c)
        if g == 1:
            break
    return g


def p_val(a):
    """Order of vanishing at q = 0."""
    i = 0
    while a[i] == 0:
        i += 1
    return i


def p_divexact(a, b):
    """Quotient ``a / b`` in Z[q], or ``None`` when it does not exist."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ZERO
    db = len(b) - 1
    if len(a) - 1 < db:
        return None
    if db == 0:
        c = b[0]
        out = []
        for x in a:
            if x % c:
                return None
            out.append(x // c)
        return tuple(out)
    rem = list(a)
    lb = b[-1]
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = rem[k + db]
        if c:
            if c % lb:
                return None
            t = c // lb
            quot[k] = t
            for j in range(db + 1):
                rem[k + j] -= t * b[j]
    for x in rem[:db]:
        if x:
            return None
    return tuple(quot)


def _eval_int(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _prim_gcd_prs(f, g):
    # primitive remainder sequence on primitive inputs
    if len(f) < len(g):
        f, g = g, f
    while g:
        df, dg = len(f) - 1, len(g) - 1
        r = list(f)
        lg = g[-1]
        for k in range(df - dg, -1, -1):
            c = r[k + dg]
            r = [x * lg for x in r]
            if c:
                for j in range(dg + 1):
                    r[k + j] -= c * g[j]
            r = r[: k + dg]
        r = p_trim(r)
        if r:
            ct = p_content(r)
            r = tuple(x // ct for x in r)
        f, g = g, r
    if f[-1] < 0:
        f = p_neg(f)
    return f


def _heu_gcd(f, g):
    # f, g primitive, nonconstant; returns primitive gcd or None on failure
    nf = max(abs(c) for c in f)
    ng = max(abs(c) for c in g)
    b = 2 * min(nf, ng) + 29
    x = max(min(b, 99 * isqrt(b)), 2 * min(nf // abs(f[-1]), ng // abs(g[-1])) + 2)
    for _ in range(6):
        h = igcd(_eval_int(f, x), _eval_int(g, x))
        coeffs = []
        half = x // 2
        while h:
            c = h % x
            if c > half:
                c -= x
            coeffs.append(c)
            h = (h - c) // x
        cand = p_trim(coeffs)
        if cand:
            ct = p_content(cand)
            cand = tuple(c // ct for c in cand)
            if cand[-1] < 0:
                cand = p_neg(cand)
            if p_divexact(f, cand) is not None and p_divexact(g, cand) is not None:
                return cand
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def p_gcd(a, b):
    """Greatest common divisor in Z[q] with positive leading coefficient."""
    if not a:
        return b if not b or b[-1] > 0 else p_neg(b)
    if not b:
        return a if a[-1] > 0 else p_neg(a)
    ca, cb = p_content(a), p_content(b)
    c = igcd(ca, cb)
    va, vb = p_val(a), p_val(b)
    v = min(va, vb)
    f = tuple(x // ca for x in a[va:])
    g = tuple(x // cb for x in b[vb:])
    if len(f) == 1 or len(g) == 1:
        h = ONE
    elif f == g or f == p_neg(g):
        h = f if f[-1] > 0 else p_neg(f)
    else:
        h = _heu_gcd(f, g)
        if h is None:
            h = _prim_gcd_prs(f, g)
    return (0,) * v + p_scale(h, c)


def _is_monomial(a):
    return a[-1] != 0 and not any(a[:-1])


def normalize(n, d):
    """Bring ``n/d`` to canonical form."""
    if not d:
        raise ZeroDivisionError("fraction with zero denominator")
    if not n:
        return ZERO, ONE
    if len(d) == 1:
        c = igcd(p_content(n), d[0])
        if d[0] < 0:
            c = -c
        if c == 1:
            return n, d
        return tuple(x // c for x in n), (d[0] // c,)
    if _is_monomial(d):
        v = min(p_val(n), len(d) - 1)
        c = igcd(p_content(n), d[-1])
        if d[-1] < 0:
            c = -c
        n = tuple(x // c for x in n[v:])
        d = (0,) * (len(d) - 1 - v) + (d[-1] // c,)
        return n, d
    g = p_gcd(n, d)
    if g != ONE:
        n = p_divexact(n, g)
        d = p_divexact(d, g)
    if d[-1] < 0:
        n, d = p_neg(n), p_neg(d)
    return n, d


def f_add(n1, d1, n2, d2):
    if not n1:
        return n2, d2
    if not n2:
        return n1, d1
    if d1 == d2:
        return normalize(p_add(n1, n2), d1)
    if d1 == ONE:
        return p_add(p_mul(n1, d2), n2), d2
    if d2 == ONE:
        return p_add(n1, p_mul(n2, d1)), d1
    g = p_gcd(d1, d2)
    if g == ONE:
        return normalize(p_add(p_mul(n1, d2), p_mul(n2, d1)), p_mul(d1, d2))
    d1g = p_divexact(d1, g)
    d2g = p_divexact(d2, g)
    return normalize(p_add(p_mul(n1, d2g), p_mul(n2, d1g)), p_mul(d1, d2g))


def f_sub(n1, d1, n2, d2):
    return f_add(n1, d1, p_neg(n2), d2)


def f_mul(n1, d1, n2, d2):
    if not n1 or not n2:
        return ZERO, ONE
    if d1 == ONE and d2 == ONE:
        return p_mul(n1, n2), ONE
    if d2 != ONE:
        g1 = p_gcd(n1, d2)
        if g1 != ONE:
            n1 = p_divexact(n1, g1)
            d2 = p_divexact(d2, g1)
    if d1 != ONE:
        g2 = p_gcd(n2, d1)
        if g2 != ONE:
            n2 = p_divexact(n2, g2)
            d1 = p_divexact(d1, g2)
    n, d = p_mul(n1, n2), p_mul(d1, d2)
    if d[-1] < 0:
        n, d = p_neg(n), p_neg(d)
    return n, d


def f_div(n1, d1, n2, d2):
    if not n2:
        raise ZeroDivisionError("division by zero rational function")
    return f_mul(n1, d1, d2, n2)
