"""The modified RE algebra acting on V itself.

``lhat_i^j`` acts by ``x_k -> B_k^j x_i``.  The images are N x N matrices in
column convention: ``M(i,j)[a][k]`` is the coefficient of ``x_a`` in the image
of ``x_k``.  Words act letter by letter, leftmost letter outermost.
"""

from __future__ import annotations

from .errors import CharacterMismatch, NotScalar, RepresentationCheckFailed
from .ncalg import MODIFIED, NCPoly, code_to_word, re_relations
from .scalar import ONE, ZERO, ScalarQ
from .symmetry import Symmetry, birank_degree
from .tensor import TensorOp, identity

__all__ = ["RepOnV", "rep_on_v", "evaluate", "scalar_value", "character_check", "predicted_character"]


class RepOnV:
    __slots__ = ("symmetry", "images", "_words")

    def __init__(self, symmetry: Symmetry, images):
        self.symmetry = symmetry
        self.images = images  # letter index i*N + j -> TensorOp
        self._words = {}

    @property
    def dim_v(self):
        return self.symmetry.dim_v

    def image(self, i: int, j: int) -> TensorOp:
        return self.images[i * self.dim_v + j]

    def word_image(self, word) -> TensorOp:
        word = tuple(word)
        if word in self._words:
            return self._words[word]
        if not word:
            out = identity(self.dim_v, 1)
        else:
            out = self.word_image(word[:-1]) @ self.images[word[-1]]
        if len(self._words) < 20000:
            self._words[word] = out
        return out


def _images(s: Symmetry):
    n = s.dim_v
    b = s.B
    out = []
    for i in range(n):
        for j in range(n):
            entries = [(i, k, b[k, j]) for k in range(n) if b[k, j].num]
            out.append(TensorOp.from_sparse(n, 1, entries))
    return out


def rep_on_v(s: Symmetry, check: bool = True) -> RepOnV:
    """Build the defining representation and verify every modified relation."""
    rep = RepOnV(s, _images(s))
    if check:
        for k, rel in enumerate(re_relations(s, MODIFIED).relations):
            if not evaluate(rep, rel).is_zero():
                raise RepresentationCheckFailed(f"relation #{k} does not vanish on V")
    return rep


def evaluate(rep: RepOnV, p: NCPoly) -> TensorOp:
    """Image of ``p`` as an N x N matrix."""
    n = rep.dim_v
    if p.dim_v != n:
        raise ValueError("polynomial over a different generator set")
    bits = p.bits
    out = TensorOp.zeros(n, 1)
    for code, c in p.terms.items():
        out = out + rep.word_image(code_to_word(code, bits)).scale(c)
    return out


def scalar_value(m: TensorOp) -> ScalarQ:
    """``c`` if ``m = c I``, else NotScalar."""
    n = m.size
    c = m[0, 0] if n else ZERO
    for r, col, v in m.nonzeros():
        if r != col or v != c:
            raise NotScalar("operator is not a multiple of the identity")
    if n and any(m[i, i] != c for i in range(n)):
        raise NotScalar("operator is not a multiple of the identity")
    return c


def predicted_character(s: Symmetry, z, degree_bound=None) -> ScalarQ:
    """Scalar by which central ``z`` should act on V: e-basis expansion, then the
    Harish-Chandra image in hatted eigenvalues, evaluated at ``lambda = (1, 0, ...)``."""
    from .spectral import character, express_in_e_basis, hc_morphism, zamena

    m = birank_degree(s)
    expr = z.expr if hasattr(z, "expr") else z
    max_deg = max(expr.degree(), 1)
    if not s.is_hecke:
        return _predicted_involutive(s, expr, m, max_deg, degree_bound)
    p = express_in_e_basis(expr, s, MODIFIED, max_deg, degree_bound)
    sym = zamena(hc_morphism(p, m), s.kappa)
    return character(sym, (1,) + (0,) * (m - 1), hat=True)


def _predicted_involutive(s, expr, m, max_deg, degree_bound):
    # the shift degenerates at q = 1: expand in p_k(Lhat) instead and use that
    # a character is multiplicative, with the classical value of each p_k
    from .charmap import trace_power
    from .spectral import classical_character, express_in_generators

    gens = [trace_power(s, k) for k in range(1, m + 1)]
    poly = express_in_generators(expr, s, MODIFIED, gens, max_deg, degree_bound)
    lam = (1,) + (0,) * (m - 1)
    values = [classical_character(k, lam, m) for k in range(1, m + 1)]
    return ScalarQ.coerce(poly.evaluate(values))


def character_check(s: Symmetry, z, lam=None, rep: RepOnV | None = None) -> bool:
    """Check that central ``z`` acts on V by the predicted scalar."""
    m = birank_degree(s)
    if lam is not None and tuple(lam) != (1,) + (0,) * (m - 1):
        raise NotImplementedError("only the defining module lambda = (1, 0, ..., 0) is available")
    rep = rep or rep_on_v(s)
    expr = z.expr if hasattr(z, "expr") else z
    c = scalar_value(evaluate(rep, expr))
    want = predicted_character(s, expr)
    if c != want:
        raise CharacterMismatch(f"acts by {c}, predicted {want}")
    return True


def _unit_check(rep: RepOnV) -> bool:
    return evaluate(rep, NCPoly.const(rep.dim_v, ONE)).is_identity()
