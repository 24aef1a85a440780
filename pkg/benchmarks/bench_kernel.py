"""Compare the compiled and pure-Python rational-function kernels.

Micro benchmarks call both kernel modules directly on the same random
inputs; the end-to-end benchmark runs a verification workload in a
subprocess once per backend (``REACALC_PURE=1`` forces the fallback).

    python benchmarks/bench_kernel.py [--repeat 5] [--seed 0] [--no-e2e]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from reacalc import _ratfunc_py as pure

try:
    from reacalc import _ratfunc as compiled
except ImportError:
    compiled = None


def rand_poly(rng, deg, bound):
    p = [rng.randint(-bound, bound) for _ in range(deg + 1)]
    p[-1] = p[-1] or 1
    return tuple(p)


def workloads(rng):
    mul_pairs = [(rand_poly(rng, 8, 50), rand_poly(rng, 8, 50)) for _ in range(200)]
    # fractions with shared cyclotomic-like factors, as produced by q-integers
    base = [(1, 0, 1), (1, 0, 1, 0, 1), (-1, 0, 1), (1, 1), (0, 0, 0, 1)]
    fracs = []
    for _ in range(200):
        n = rand_poly(rng, 4, 9)
        d = (1,)
        for _ in range(rng.randint(1, 3)):
            d = pure.p_mul(d, rng.choice(base))
        fracs.append(pure.normalize(n, d))
    gcd_pairs = []
    for _ in range(100):
        g = rand_poly(rng, 3, 9)
        gcd_pairs.append((pure.p_mul(g, rand_poly(rng, 4, 9)), pure.p_mul(g, rand_poly(rng, 4, 9))))
    return {
        "p_mul": (lambda k: [k.p_mul(a, b) for a, b in mul_pairs]),
        "f_add": (lambda k: [k.f_add(*x, *y) for x, y in zip(fracs, fracs[1:])]),
        "f_mul": (lambda k: [k.f_mul(*x, *y) for x, y in zip(fracs, fracs[1:])]),
        "p_gcd": (lambda k: [k.p_gcd(a, b) for a, b in gcd_pairs]),
    }


E2E = (
    "import time; from reacalc.verify import run_all; import reacalc;"
    "t=time.perf_counter(); run_all(2, 4); print(reacalc.BACKEND, time.perf_counter()-t)"
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--no-e2e", action="store_true")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    work = workloads(rng)
    print(f"{'kernel':10s} {'python ms':>10s} {'compiled ms':>12s} {'speedup':>8s}")
    for name, fn in work.items():
        if compiled is not None and fn(pure) != fn(compiled):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        tp = min(timeit.repeat(lambda: fn(pure), number=1, repeat=args.repeat)) * 1e3
        if compiled is None:
            print(f"{name:10s} {tp:10.2f} {'n/a':>12s}")
            continue
        tc = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:10s} {tp:10.2f} {tc:12.2f} {tp / tc:7.2f}x")
    if args.no_e2e:
        return 0
    print("\nend-to-end (verification suite, N = 2, degree 4):")
    for pure_flag in ("1", "0"):
        env = dict(os.environ, REACALC_PURE=pure_flag)
        out = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True, text=True)
        if out.returncode:
            print(out.stderr, file=sys.stderr)
            return 1
        backend, secs = out.stdout.split()
        print(f"  {backend:9s} {float(secs):7.2f} s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
