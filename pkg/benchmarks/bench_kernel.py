"""Compare the compiled and pure-Python generator kernels.

Usage: python benchmarks/bench_kernel.py [--repeats N]

Part 1 times ``apply_generator`` directly on the same random inputs for each
kernel/scalar combination that is importable.  Part 2 times ``batch_E`` end
to end in a fresh interpreter per backend (selected via
QUASIKOORN_PURE_PYTHON).
"""

import argparse
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from quasikoorn import _kernel, weyl
from quasikoorn.operators import torus_act
from quasikoorn.relations import random_context, random_exponent
from quasikoorn.scalars import ParamSpec

try:
    from quasikoorn import _ckernel
except ImportError:
    _ckernel = None
try:
    from gmpy2 import mpq
except ImportError:
    mpq = None

PARAMS = ParamSpec.create(3, "3/2", "2/5", "7/3", "5/4", "3/7", "11/4")

END_TO_END = """
import time
from fractions import Fraction as F
from quasikoorn import weyl
from quasikoorn.epoly import batch_E
from quasikoorn.operators import KERNEL_BACKEND, RepContext
from quasikoorn.scalars import ParamSpec, TorusPoint
p = ParamSpec.create(2, "3/2", "2/5", "7/3", "5/4", "3/7", "11/4")
ctx = RepContext(p, weyl.orbit_of((F(3, 8), F(1, 8))), TorusPoint((F(7, 11), F(13, 3))))
t0 = time.perf_counter()
n = len(batch_E(ctx, 8))
print(KERNEL_BACKEND, n, time.perf_counter() - t0)
"""


def workload(n, seed=1):
    rng = random.Random(seed)
    cases = []
    for _ in range(n):
        ctx = random_context(PARAMS, rng)
        y = random_exponent(ctx.orbit, rng, max_word=12)
        g, _ = weyl.min_alcove_rep(y)
        cases.append((ctx, {ctx.scale(y): Fraction(rng.randint(1, 9), rng.randint(1, 9))}))
    return cases


def time_kernel(kernel, conv, cases, repeats):
    r = PARAMS.rank
    prepared = []
    for ctx, terms in cases:
        cache = {}

        def tf(Y, ctx=ctx, cache=cache):
            v = cache.get(Y)
            if v is None:
                v = cache[Y] = conv(torus_act(ctx, weyl.min_alcove_rep(ctx.unscale(Y))[0])[0])
            return v
        kp = [conv(PARAMS.hecke_parameter(j)) for j in range(r + 1)]
        up = [conv(PARAMS.u0)] + [conv(PARAMS.k)] * (r - 1) + [conv(PARAMS.ur)]
        prepared.append((ctx.D, {Y: conv(c) for Y, c in terms.items()}, kp, up, tf))
    sq = conv(PARAMS.sqrt_q)
    start = time.perf_counter()
    for _ in range(repeats):
        for D, terms, kp, up, tf in prepared:
            cur = terms
            for j in (r, 0, 1):
                cur = kernel.apply_generator(cur, j, r, D, kp[j], up[j], sq,
                                             tf if j == 0 else None)
    return time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cases", type=int, default=300)
    ap.add_argument("--repeats", type=int, default=10)
    args = ap.parse_args()
    cases = workload(args.cases)

    rows = [("python / Fraction", _kernel, Fraction)]
    if mpq is not None:
        rows.append(("python / gmpy2.mpq", _kernel, mpq))
    if _ckernel is not None:
        rows.append(("cython / Fraction", _ckernel, Fraction))
        if mpq is not None:
            rows.append(("cython / gmpy2.mpq", _ckernel, mpq))
    print(f"kernel micro-benchmark: {args.cases} inputs x 3 generators x {args.repeats} repeats")
    base = None
    for name, kernel, conv in rows:
        t = time_kernel(kernel, conv, cases, args.repeats)
        base = base or t
        print(f"  {name:<22} {t:7.2f} s   speedup {base / t:4.1f}x")

    print("end to end: batch_E, r = 2, regular orbit, l(g_y) <= 8")
    for pure in ("1", ""):
        env = dict(os.environ, QUASIKOORN_PURE_PYTHON=pure)
        if not pure:
            env.pop("QUASIKOORN_PURE_PYTHON")
        out = subprocess.run([sys.executable, "-c", END_TO_END], env=env,
                             capture_output=True, text=True, check=True).stdout.split()
        print(f"  {out[0]:<22} {float(out[2]):7.2f} s   ({out[1]} polynomials)")


if __name__ == "__main__":
    main()
