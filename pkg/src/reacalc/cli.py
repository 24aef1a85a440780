"""Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 input error, 3 degree bound
(resource) error.  ``--json`` prints a ``rea-report/1`` document instead of
text; reports are deterministic unless ``--timing`` is given.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from itertools import combinations_with_replacement

from .errors import (
    DegreeBoundExceeded,
    IndexOutOfRange,
    NotInSpan,
    ParseError,
    ReaError,
    StrandMismatch,
)

SCHEMA = "rea-report/1"
EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class Report:
    __slots__ = ("command", "inputs", "outcome", "artifacts", "lines", "timing")

    def __init__(self, command, inputs):
        self.command = command
        self.inputs = inputs
        self.outcome = "pass"
        self.artifacts = {}
        self.lines = []
        self.timing = None

    def say(self, text):
        self.lines.append(text)

    def fail(self):
        self.outcome = "fail"

    def to_dict(self):
        d = {
            "schema": SCHEMA,
            "command": self.command,
            "inputs": self.inputs,
            "outcome": self.outcome,
            "artifacts": self.artifacts,
        }
        if self.timing is not None:
            d["timing"] = self.timing
        return d


def _variant(name):
    from .ncalg import MODIFIED, RE

    return {"re": RE, "mod": MODIFIED, "modified": MODIFIED, "modified_re": MODIFIED}[name]


def _symmetry(args):
    from .symmetry import Symmetry, dj_symmetry, flip, superflip

    if getattr(args, "load", None):
        with open(args.load) as fh:
            return Symmetry.from_json(fh.read())
    kind = getattr(args, "kind", "dj") or "dj"
    dim = getattr(args, "dim", None) or 2
    if kind == "dj":
        return dj_symmetry(dim)
    if kind == "flip":
        return flip(dim)
    m = getattr(args, "m", None)
    k = getattr(args, "k", None)
    return superflip(1 if m is None else m, 1 if k is None else k)


def _cmd_symmetry_build(args, rep):
    from .symmetry import (
        check_braid,
        check_hecke,
        check_involutive,
        dj_symmetry,
        flip,
        psi_residual,
        superflip,
    )

    if args.load:
        s = _symmetry(args)
    elif args.kind == "dj":
        s = dj_symmetry(args.n)
    elif args.kind == "flip":
        s = flip(args.n)
    else:
        s = superflip(args.m if args.m is not None else args.n, args.k if args.k is not None else 1)
    axioms = {"braid": check_braid(s.R)}
    if s.is_hecke:
        axioms["hecke"] = check_hecke(s.R)
    else:
        axioms["involutive"] = check_involutive(s.R)
    axioms["psi_residual_zero"] = psi_residual(s.R, s.psi) == 0
    if not all(axioms.values()):
        rep.fail()
    rep.artifacts["symmetry"] = s.to_dict()
    rep.artifacts["axioms"] = axioms
    rep.artifacts["C"] = s.C.to_dict()
    rep.artifacts["B"] = s.B.to_dict()
    rep.artifacts["tr_r_identity"] = str(s.tr_r_identity())
    rep.say(f"symmetry {s.label} (kind {s.kind}, N = {s.dim_v})")
    for name, ok in axioms.items():
        rep.say(f"  {name}: {'ok' if ok else 'FAILED'}")
    rep.say(f"  C diagonal: {[str(s.C[i, i]) for i in range(s.dim_v)]}")
    rep.say(f"  B diagonal: {[str(s.B[i, i]) for i in range(s.dim_v)]}")
    rep.say(f"  Tr_R I = {s.tr_r_identity()}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(s.to_json(indent=1, sort_keys=True) + "\n")
        rep.say(f"  written to {args.out}")


def _cmd_symmetry_birank(args, rep):
    from .symmetry import birank_degree, hilbert_dims

    s = _symmetry(args)
    dims = hilbert_dims(s, args.kmax)
    m = birank_degree(s, args.kmax)
    rep.artifacts["hilbert_dims"] = dims
    rep.artifacts["even_degree"] = m
    rep.say(f"{s.label}: ranks of A^(1..{args.kmax}) = {dims}")
    rep.say(f"  even bi-rank degree: {m if m is not None else 'not reached'}")


def _power_products(s, n):
    """``{label: prod p_k}`` over the partitions of ``n``."""
    from .charmap import trace_power
    from .ncalg import NCPoly

    out = {}
    for parts in range(1, n + 1):
        for combo in combinations_with_replacement(range(n, 0, -1), parts):
            if sum(combo) != n:
                continue
            prod = NCPoly.const(s.dim_v, 1)
            for k in combo:
                prod = prod * trace_power(s, k)
            label = " ".join(f"Tr_R L^{k}" for k in combo)
            out[label] = prod
    return out


def _cmd_central_ch(args, rep):
    from .charmap import ch
    from .hecke import parse_hecke
    from .ncalg import is_central, re_relations, reduce

    s = _symmetry(args)
    variant = _variant(args.variant)
    z = parse_hecke(args.element, args.n)
    ce = ch(s, variant, z)
    rels = re_relations(s, variant)
    central = is_central(ce.expr, rels, args.degree)
    rep.artifacts["element"] = str(z)
    rep.artifacts["ch"] = str(ce.expr)
    rep.artifacts["central"] = central
    rep.say(f"ch({z}) over {s.label}, {variant}:")
    rep.say(f"  {ce.expr}")
    rep.say(f"  central up to degree {args.degree}: {central}")
    if not central:
        rep.fail()
    equal = []
    if ce.expr.degree() <= args.degree:
        for label, p in _power_products(s, args.n).items():
            if reduce(ce.expr - p, rels, args.degree).is_zero():
                equal.append(label)
    rep.artifacts["equals"] = equal
    for label in equal:
        rep.say(f"  equals {label}")


def _cmd_central_ch_identity(args, rep):
    from .charmap import cayley_hamilton_check, ch_poly_modified, substitute_matrix
    from .ncalg import MODIFIED, re_relations, reduce

    s = _symmetry(args)
    variant = _variant(args.variant)
    if variant == MODIFIED:
        mat = substitute_matrix(ch_poly_modified(s), s.dim_v)
        rels = re_relations(s, variant)
        entries = [reduce(p, rels, args.degree) for row in mat.polys() for p in row]
    else:
        _, entries = cayley_hamilton_check(s, variant, degree_bound=args.degree)
    n = s.dim_v
    results = []
    for idx, e in enumerate(entries):
        i, j = divmod(idx, n)
        ok = e.is_zero()
        results.append({"row": i + 1, "col": j + 1, "ok": ok, "residual": str(e)})
        rep.say(f"  entry ({i + 1},{j + 1}): {'pass' if ok else 'FAIL ' + str(e)}")
        if not ok:
            rep.fail()
    rep.lines.insert(0, f"Cayley-Hamilton identity over {s.label}, {variant}:")
    rep.artifacts["entries"] = results


def _strands_of(text, given):
    if given:
        return given
    import re as _re

    idx = [int(x) for x in _re.findall(r"t(\d+)", text)]
    return max(idx, default=0) + 1


def _cmd_weights(args, rep):
    from .charmap import weight_system
    from .hecke import parse_hecke
    from .spectral import express_in_e_basis, hc_morphism, zamena

    s = _symmetry(args)
    variant = _variant(args.variant)
    n = _strands_of(args.element, args.n)
    z = parse_hecke(args.element, n)
    w = weight_system(s, variant, z)
    rep.artifacts["element"] = str(z)
    rep.artifacts["weight"] = str(w.expr)
    rep.say(f"w({z}) over {s.label}, {variant}:")
    rep.say(f"  {w.expr}")
    try:
        p = express_in_e_basis(w.expr, s, variant, max(w.expr.degree(), 1), args.degree)
        hc = hc_morphism(p)
        if variant != "re":
            hc = zamena(hc, s.kappa)
        rep.artifacts["e_basis"] = str(p)
        rep.artifacts["hc_image"] = hc.to_dict()
        rep.say(f"  in the e-basis ({p.basis}): {p}")
        rep.say(f"  Harish-Chandra image: {hc}")
    except (NotInSpan, ReaError) as exc:
        rep.artifacts["e_basis"] = None
        rep.say(f"  not expressible in the e-basis: {exc}")


def _cmd_spectral_powersum(args, rep):
    from .spectral import powersum_hat_sym, powersum_sym, super_powersum

    if args.hat:
        if args.nsuper:
            raise ValueError("--hat is only available for the even case")
        p = powersum_hat_sym(args.k, args.m)
    elif args.nsuper:
        p = super_powersum(args.k, args.m, args.nsuper)
    else:
        p = powersum_sym(args.k, args.m)
    rep.artifacts["polynomial"] = p.to_dict()
    rep.say(str(p))


def _cmd_spectral_character(args, rep):
    from .scalar import limit_q1
    from .spectral import Partition, character, powersum_hat_sym, powersum_sym

    lam = Partition.parse(args.lam)
    m = len(lam)
    if m < 1:
        raise ParseError("empty partition")
    p = powersum_hat_sym(args.k, m) if args.hat else powersum_sym(args.k, m)
    val = character(p, lam, hat=args.hat)
    rep.artifacts["character"] = str(val)
    if args.q1:
        lim = limit_q1(val)
        rep.artifacts["q1"] = str(lim)
        rep.say(str(lim))
    else:
        rep.say(str(val))


def _cmd_verify_all(args, rep):
    from .verify import run_all

    only = None
    if args.only:
        only = {int(x) for x in args.only.split(",") if x}
    results = run_all(args.n, args.degree, only)
    rep.artifacts["criteria"] = [r.to_dict() for r in results]
    for r in results:
        rep.say(r.line().replace(f" [{r.seconds:.1f}s]", "") if not args.timing else r.line())
        if not r.passed:
            rep.fail()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a machine-readable report")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing")
    common.add_argument("--load", metavar="FILE", help="serialized symmetry (JSON)")
    sym = argparse.ArgumentParser(add_help=False)
    sym.add_argument("--kind", choices=["dj", "flip", "superflip"], default="dj")
    sym.add_argument("--dim", type=int, default=2, help="dimension N of V (default 2)")

    p = argparse.ArgumentParser(prog="reacalc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="group", required=True)

    g = sub.add_parser("symmetry").add_subparsers(dest="cmd", required=True)
    b = g.add_parser("build", parents=[common])
    b.add_argument("--kind", choices=["dj", "flip", "superflip"], default="dj")
    b.add_argument("--n", type=int, default=2)
    b.add_argument("--m", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--out", metavar="FILE", help="write the serialized symmetry")
    b.set_defaults(func=_cmd_symmetry_build)
    b = g.add_parser("birank", parents=[common, sym])
    b.add_argument("--kmax", type=int, default=3)
    b.add_argument("--m", type=int)
    b.add_argument("--k", type=int)
    b.set_defaults(func=_cmd_symmetry_birank)

    g = sub.add_parser("central").add_subparsers(dest="cmd", required=True)
    b = g.add_parser("ch", parents=[common, sym])
    b.add_argument("--variant", choices=["re", "mod"], default="re")
    b.add_argument("--element", required=True)
    b.add_argument("--n", type=int, required=True, help="number of strands")
    b.add_argument("--degree", type=int, default=4)
    b.set_defaults(func=_cmd_central_ch)
    b = g.add_parser("cayley-hamilton", parents=[common, sym])
    b.add_argument("--variant", choices=["re", "mod"], default="re")
    b.add_argument("--degree", type=int, default=4)
    b.set_defaults(func=_cmd_central_ch_identity)

    b = sub.add_parser("weights", parents=[common, sym])
    b.add_argument("--element", required=True)
    b.add_argument("--variant", choices=["re", "mod"], default="re")
    b.add_argument("--n", type=int, help="number of strands (default: from the element)")
    b.add_argument("--degree", type=int)
    b.set_defaults(func=_cmd_weights)

    g = sub.add_parser("spectral").add_subparsers(dest="cmd", required=True)
    b = g.add_parser("powersum", parents=[common])
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--nsuper", type=int, default=0)
    b.add_argument("--hat", action="store_true")
    b.set_defaults(func=_cmd_spectral_powersum)
    b = g.add_parser("character", parents=[common])
    b.add_argument("--lambda", dest="lam", required=True, help='partition, e.g. "2,1,0"')
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--hat", action="store_true")
    b.add_argument("--q1", action="store_true", help="print the q -> 1 limit")
    b.set_defaults(func=_cmd_spectral_character)

    g = sub.add_parser("verify").add_subparsers(dest="cmd", required=True)
    b = g.add_parser("all", parents=[common])
    b.add_argument("--n", type=int, default=2)
    b.add_argument("--degree", type=int, default=4)
    b.add_argument("--only", help="comma-separated criterion numbers")
    b.set_defaults(func=_cmd_verify_all)
    return p


def _inputs(args):
    skip = {"func", "json", "timing", "group", "cmd"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report([args.group, args.cmd] if getattr(args, "cmd", None) else [args.group], _inputs(args))
    code = EXIT_PASS
    t0 = time.perf_counter()
    try:
        args.func(args, rep)
        if rep.outcome == "fail":
            code = EXIT_FAIL
    except DegreeBoundExceeded as exc:
        rep.outcome, code = "error", EXIT_RESOURCE
        rep.artifacts["error"] = f"{type(exc).__name__}: {exc}"
    except (ParseError, IndexOutOfRange, StrandMismatch, OSError, ValueError, KeyError) as exc:
        rep.outcome, code = "error", EXIT_INPUT
        rep.artifacts["error"] = f"{type(exc).__name__}: {exc}"
    except ReaError as exc:
        rep.outcome, code = "fail", EXIT_FAIL
        rep.artifacts["error"] = f"{type(exc).__name__}: {exc}"
    if args.timing:
        rep.timing = {"seconds": round(time.perf_counter() - t0, 3)}
    if args.json:
        print(json.dumps(rep.to_dict(), indent=1, sort_keys=True))
    else:
        for line in rep.lines:
            print(line)
        if "error" in rep.artifacts:
            print(f"error: {rep.artifacts['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
