"""End-to-end verification suite shared by ``reacalc verify all`` and the tests.

Each check returns a :class:`CheckResult` holding its individual items; a
check passes only if every item does.  Exceptions inside an item are caught
and reported as failures with the error text.
"""

from __future__ import annotations

import time
from itertools import permutations
from math import comb

from .charmap import (
    cayley_hamilton_check,
    ch,
    ch_poly_modified,
    classical_weight,
    elementary,
    l_bar,
    power_sum,
    substitute_matrix,
    trace_power,
    weight_system,
)
from .errors import ReaError
from .hecke import basis, multiply, gen, zk
from .ncalg import (
    MODIFIED,
    RE,
    RelationSet,
    gl_relations,
    is_central,
    re_relations,
    reduce,
    same_ideal_span,
)
from .repv import evaluate, predicted_character, rep_on_v, scalar_value
from .scalar import KAPPA, ONE, limit_q1, qpow
from .spectral import (
    MPoly,
    character,
    classical_character,
    express_in_e_basis,
    hc_morphism,
    mu_vars,
    muhat_char,
    powersum_hat_sym,
    powersum_rat,
    powersum_sym,
    super_powersum,
)
from .symmetry import (
    check_braid,
    check_hecke,
    check_involutive,
    dj_symmetry,
    flip,
    hilbert_dims,
    psi_residual,
    superflip,
)
from .tensor import r_partial_trace

__all__ = ["CheckResult", "CHECKS", "run_all"]


class CheckResult:
    __slots__ = ("number", "title", "items", "seconds")

    def __init__(self, number, title):
        self.number = number
        self.title = title
        self.items = []
        self.seconds = 0.0

    @property
    def passed(self):
        return bool(self.items) and all(ok for _, ok, _ in self.items)

    def add(self, label, fn):
        try:
            out = fn()
            ok, detail = out if isinstance(out, tuple) else (bool(out), "")
        except (ReaError, ArithmeticError, ValueError, NotImplementedError) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        self.items.append((label, bool(ok), detail))
        return ok

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        bad = [lbl for lbl, ok, _ in self.items if not ok]
        tail = f" (failed: {'; '.join(bad)})" if bad else ""
        return f"[{status}] criterion {self.number}: {self.title} [{self.seconds:.1f}s]{tail}"

    def to_dict(self):
        return {
            "criterion": self.number,
            "title": self.title,
            "outcome": "pass" if self.passed else "fail",
            "items": [{"label": lbl, "ok": ok, "detail": d} for lbl, ok, d in self.items],
        }


def _eq(a, b, rels, bound):
    return reduce(a - b, rels, bound).is_zero()


def check_axioms(n=2, degree=4):
    res = CheckResult(1, "braid/Hecke/involutivity axioms")
    for k in (1, 2, 3):
        r = dj_symmetry(k).R
        res.add(f"dj({k}) braid+Hecke", lambda r=r: check_braid(r) and check_hecke(r))
    for s in (flip(1), flip(2), flip(3), superflip(1, 1)):
        res.add(f"{s.label} braid+involutive", lambda s=s: check_braid(s.R) and check_involutive(s.R))
    return res


def check_skew_inverse(n=2, degree=4):
    res = CheckResult(2, "skew-inverse component system and operator form")
    syms = [dj_symmetry(1), dj_symmetry(2), dj_symmetry(3), flip(2), flip(3), superflip(1, 1)]
    for s in syms:
        # the operator form is asserted while Psi is built
        res.add(f"{s.label}", lambda s=s: (psi_residual(s.R, s.psi) == 0, "residual 0"))
    return res


def check_birank(n=2, degree=4):
    res = CheckResult(3, "Hilbert dimensions of skew-symmetric powers")
    for k in (2, 3):
        want = [comb(k, j) for j in range(1, k + 2)]
        res.add(f"dj({k})", lambda k=k, want=want: _match(hilbert_dims(dj_symmetry(k), k + 1), want))
    res.add("superflip(1|1) = [2,1,1,1]", lambda: _match(hilbert_dims(superflip(1, 1), 4), [2, 1, 1, 1]))
    return res


def _match(got, want):
    return got == want, f"got {got}, expected {want}"


def check_trace_identities(n=2, degree=4):
    res = CheckResult(4, "R-trace identities over the last factor")
    s = dj_symmetry(n)
    for k in (1, 2):
        res.add(
            f"Tr_R(k+1) R_k = I, k={k}",
            lambda k=k: r_partial_trace(s.r_embed(k, k + 1), s.C, k + 1).is_identity(),
        )
    for variant in (RE, MODIFIED):
        rels = re_relations(s, variant)
        for k in (1, 2):

            def item(k=k, rels=rels):
                lhs = l_bar(s, k + 1, k + 1).r_partial_trace(s.C, k + 1)
                rhs = l_bar(s, k, k).r_partial_trace(s.C, k).embed_first(k)
                diff = lhs - rhs
                return all(reduce(p, rels, 2).is_zero() for row in diff.polys() for p in row)

            res.add(f"{variant} Tr_R(k+1) L_(k+1) = Tr_R(k) L_k, k={k}", item)
    return res


def check_centrality(n=2, degree=4):
    res = CheckResult(5, "centrality of power sums, elementary and classical weights")
    s = dj_symmetry(n)
    for variant in (RE, MODIFIED):
        rels = re_relations(s, variant)
        for k in (1, 2, 3):
            res.add(f"{variant} p{k}", lambda k=k, rels=rels: is_central(trace_power(s, k), rels, degree))
        for k in range(1, n + 1):
            res.add(
                f"{variant} e{k}",
                lambda k=k, rels=rels: is_central(elementary(s, variant, k).expr, rels, degree),
            )
    f = flip(2)
    frels = re_relations(f, MODIFIED)
    for sigma in permutations(range(3)):
        res.add(f"gl(2) w{sigma}", lambda sigma=sigma: is_central(classical_weight(sigma, 2), frels, degree))
    return res


def check_cayley_hamilton(n=2, degree=4):
    res = CheckResult(6, "Cayley-Hamilton identities")
    s = dj_symmetry(n)
    res.add(f"dj({n}) RE", lambda: cayley_hamilton_check(s, RE, degree_bound=degree)[0])
    f = flip(2)

    def classical():
        q_t = ch_poly_modified(f)
        mat = substitute_matrix(q_t, 2)
        rels = re_relations(f, MODIFIED)
        return all(reduce(p, rels, degree).is_zero() for row in mat.polys() for p in row)

    res.add("flip(2) modified (classical)", classical)

    def modified():
        mat = substitute_matrix(ch_poly_modified(s), s.dim_v)
        rels = re_relations(s, MODIFIED)
        return all(reduce(p, rels, degree).is_zero() for row in mat.polys() for p in row)

    res.add(f"dj({n}) modified Q(Lhat)", modified)
    return res


def check_worked_identities(n=2, degree=4):
    res = CheckResult(7, "worked weight-system identities")
    s = dj_symmetry(n)
    t12 = multiply(gen(1, 3), gen(2, 3))
    t21 = multiply(gen(2, 3), gen(1, 3))
    t121 = multiply(t12, gen(1, 3))
    p = {k: trace_power(s, k) for k in (1, 2, 3)}
    for variant in (RE, MODIFIED):
        rels = re_relations(s, variant)
        for m in (2, 3):
            res.add(
                f"{variant} ch(z_{m}) = Tr_R L^{m}",
                lambda m=m, rels=rels, v=variant: _eq(ch(s, v, zk(m, m)).expr, p[m], rels, degree),
            )
    rre = re_relations(s, RE)
    rmod = re_relations(s, MODIFIED)
    res.add("w_re(t1t2) = Tr_R L^3", lambda: _eq(weight_system(s, RE, t12).expr, p[3], rre, degree))

    def w_mod():
        w = weight_system(s, MODIFIED, t12).expr
        ok = _eq(w, p[3] + p[1] * p[1] - p[2], rmod, degree)
        if ok:
            return True, ""
        alt = _eq(w, p[3] + p[1] * p[1] - p[2].scale(s.tr_r_identity()), rmod, degree)
        return False, f"p3 + p1^2 - Tr_R(I) p2 holds instead: {alt}"

    res.add("w_mod(t1t2) = p3 + p1^2 - p2", w_mod)
    for variant, rels in ((RE, rre), (MODIFIED, rmod)):
        res.add(
            f"{variant} w(t1t2t1) = p1 p2 + kappa p3",
            lambda v=variant, rels=rels: _eq(
                weight_system(s, v, t121).expr, p[1] * p[2] + p[3].scale(KAPPA), rels, degree
            ),
        )
    res.add(
        "re w(t1t2) = w(t2t1)",
        lambda: _eq(weight_system(s, RE, t12).expr, weight_system(s, RE, t21).expr, rre, degree),
    )
    return res


def check_weight_forms(n=2, degree=4):
    res = CheckResult(8, "index-sum and trace forms of classical weights")
    for sigma in permutations(range(3)):
        # classical_weight raises VerificationFailed on disagreement
        res.add(f"sigma={sigma}", lambda sigma=sigma: not classical_weight(sigma, 2).is_zero())
    return res


def _symmetric(p: MPoly, block):
    for a in range(len(block)):
        for b in range(a + 1, len(block)):
            perm = list(range(len(p.names)))
            perm[block[a]], perm[block[b]] = block[b], block[a]
            if p.permute(perm) != p:
                return False
    return True


def check_parameterizations(n=2, degree=4):
    res = CheckResult(9, "eigenvalue parameterizations of power sums")

    def polys():
        for m in (1, 2, 3):
            for k in (1, 2, 3, 4):
                if not _symmetric(powersum_sym(k, m), list(range(m))):
                    return False, f"k={k}, m={m} not symmetric"
        return True, ""

    res.add("polynomial and symmetric, k<=4, m<=3", polys)
    s = dj_symmetry(n)

    def newton():
        for k in (1, 2, 3):
            pe = express_in_e_basis(power_sum(s, RE, k), s, RE, k)
            if hc_morphism(pe) != powersum_sym(k, n):
                return False, f"k={k}"
        return True, ""

    res.add(f"dj({n}) hc(express(p_k)) = powersum, k<=3", newton)

    def hatted():
        for m in (1, 2, 3):
            for k in (1, 2, 3):
                names = mu_vars(m)
                images = {
                    i: (MPoly.const(names, 1) - MPoly.var(names, i)).scale(ONE / KAPPA)
                    for i in range(m)
                }
                lhs = powersum_hat_sym(k, m).substitute(images, names)
                rhs = MPoly.const(names, 0)
                for j in range(k + 1):
                    pj = powersum_rat(j, m).to_poly()
                    rhs = rhs + pj.scale((-1) ** j * comb(k, j))
                if lhs != rhs.scale(ONE / KAPPA**k):
                    return False, f"k={k}, m={m}"
        return True, ""

    res.add("hatted form consistent with the shift of eigenvalues", hatted)
    for m in (1, 2):

        def sup(m=m):
            for k in (1, 2, 3, 4):
                p = super_powersum(k, m, 1)
                names = p.names
                nu = names.index("nu1")
                if not _symmetric(p, list(range(m))):
                    return False, f"k={k} not symmetric"
                img = {0: MPoly.var(names, nu).scale(qpow(2))}
                sub = p.substitute(img, names)
                if any(e[nu] for e in sub.terms):
                    return False, f"k={k} depends on nu1 after mu1 = q^2 nu1"
            return True, ""

        res.add(f"super (k,{m},1) polynomial, cancellation at q^-1 mu = q nu", sup)
    return res


def check_characters(n=2, degree=4):
    res = CheckResult(10, "characters on V and their classical limit")
    s = dj_symmetry(n)
    holder = {}

    def rep():
        holder["rep"] = rep_on_v(s)
        return True

    res.add(f"dj({n}) representation on V satisfies all relations", rep)

    def scalars():
        rep = holder.get("rep") or rep_on_v(s)
        elems = [trace_power(s, k) for k in (1, 2, 3)]
        elems += [elementary(s, MODIFIED, k).expr for k in range(1, n + 1)]
        for m in (2, 3):
            for b in basis(m):
                elems.append(ch(s, MODIFIED, b).expr)
        for z in elems:
            scalar_value(evaluate(rep, z))
        return True, f"{len(elems)} elements"

    res.add("central elements act by scalars", scalars)
    lam = (1,) + (0,) * (n - 1)

    def prediction():
        rep = holder.get("rep") or rep_on_v(s)
        for k in (1, 2, 3):
            c = scalar_value(evaluate(rep, trace_power(s, k)))
            if c != character(powersum_hat_sym(k, n), lam, hat=True):
                return False, f"k={k}: parameterized character differs"
            if c != predicted_character(s, trace_power(s, k)):
                return False, f"k={k}: Harish-Chandra prediction differs"
        return True, ""

    res.add("p_k(Lhat) scalar equals spectral prediction, k<=3", prediction)

    def eigen_limit():
        for lam2 in ((0, 0), (1, 0), (2, 1), (3, 0)):
            got = [limit_q1(x) for x in muhat_char(lam2, 2)]
            if got != [lam2[i] + 2 - (i + 1) for i in range(2)]:
                return False, f"{lam2}"
        return True, ""

    res.add("q->1 limit of muhat_i(lambda) = lambda_i + m - i", eigen_limit)

    def power_limit():
        bad = []
        for lam2 in ((0, 0), (1, 0), (2, 1), (3, 0)):
            for k in (1, 2, 3):
                got = classical_character(k, lam2, 2)
                want = sum((lam2[i] + 2 - (i + 1)) ** k for i in range(2))
                if got != want:
                    bad.append(f"lambda={lam2}, k={k}: {got} != {want}")
        return not bad, "; ".join(bad[:3])

    res.add("q->1 character of p_k(Lhat) = sum (lambda_i+m-i)^k", power_limit)
    return res


def check_classical_degeneration(n=2, degree=4):
    res = CheckResult(11, "flip modified relations = gl(N) brackets")
    for k in (2, 3):
        f = flip(k)
        res.add(
            f"N={k}",
            lambda f=f, k=k: same_ideal_span(
                re_relations(f, MODIFIED), RelationSet(MODIFIED, f, gl_relations(k))
            ),
        )
    return res


CHECKS = [
    check_axioms,
    check_skew_inverse,
    check_birank,
    check_trace_identities,
    check_centrality,
    check_cayley_hamilton,
    check_worked_identities,
    check_weight_forms,
    check_parameterizations,
    check_characters,
    check_classical_degeneration,
]


def run_all(n: int = 2, degree: int = 4, only=None, progress=None) -> list[CheckResult]:
    out = []
    for i, fn in enumerate(CHECKS, start=1):
        if only and i not in only:
            continue
        t0 = time.perf_counter()
        res = fn(n=n, degree=degree)
        res.seconds = time.perf_counter() - t0
        if progress:
            progress(res)
        out.append(res)
    return out
