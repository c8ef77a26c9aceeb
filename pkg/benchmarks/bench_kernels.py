"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--quick]

Times each kernel on fixed random inputs with both backends, checks that the
outputs agree exactly, then times a few end-to-end clustering runs with each
backend swapped in.
"""

import argparse
import random
import sys
import time
import timeit

from softroot import functions, kernels
from softroot import _kernels_py as pyk
from softroot.clusterer import cluster
from softroot.dyadic import ComplexDyadic, Dyadic
from softroot.functions import Exp, Poly, Sin
from softroot.geometry import ComplexBox

try:
    from softroot import _kernels as cyk
except ImportError:
    cyk = None


def kernel_cases(rng):
    cases = []
    for deg in (8, 32, 96):
        re = [rng.getrandbits(64) - (1 << 63) for _ in range(deg + 1)]
        im = [rng.getrandbits(64) - (1 << 63) for _ in range(deg + 1)]
        cases.append((f"taylor_shift deg={deg}", "taylor_shift", (re, im, rng.getrandbits(40), rng.getrandbits(40))))
    for deg in (4, 8):
        # small integers: the compiled module stays in machine words here
        re = [rng.randint(-64, 64) for _ in range(deg + 1)]
        im = [rng.randint(-64, 64) for _ in range(deg + 1)]
        cases.append((f"taylor_shift deg={deg} small", "taylor_shift", (re, im, rng.randint(-7, 7), rng.randint(-7, 7))))
    for w in (64, 256, 1024):
        cases.append((f"exp_series w={w}", "exp_series", (rng.getrandbits(30), 30, w)))
        cases.append((f"sincos_series w={w}", "sincos_series", (rng.getrandbits(34), 30, w)))
    return cases


def clear_caches():
    for name in dir(functions):
        obj = getattr(functions, name)
        if hasattr(obj, "cache_clear"):
            obj.cache_clear()


def use_backend(mod):
    for name in ("taylor_shift", "exp_series", "sincos_series"):
        setattr(kernels, name, getattr(mod, name))
    clear_caches()


def end_to_end(quick):
    roots = [Dyadic(1, -2), Dyadic(1, -2) + Dyadic(1, -10), Dyadic(3), Dyadic(-5, -1)]
    runs = [
        ("exp w=8", lambda: cluster(Exp(), ComplexBox(ComplexDyadic(), 8), 0)),
        ("sin w=8 at 16i", lambda: cluster(Sin(), ComplexBox(ComplexDyadic(Dyadic(0), Dyadic(16)), 8), 0)),
        ("poly deg 4, wide box", lambda: cluster(Poly.from_roots(roots), ComplexBox(ComplexDyadic(), 16), 4)),
    ]
    if quick:
        runs = runs[:1]
    return runs


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--quick", action="store_true", help="fewer end-to-end runs")
    args = ap.parse_args(argv)

    if cyk is None:
        print("compiled kernels not built; only the Python backend is available", file=sys.stderr)
        return 1

    rng = random.Random(20240611)
    print(f"{'kernel':28s} {'python (us)':>12s} {'cython (us)':>12s} {'speedup':>8s}")
    for label, name, inp in kernel_cases(rng):
        fp, fc = getattr(pyk, name), getattr(cyk, name)
        if fp(*inp) != fc(*inp):
            print(f"MISMATCH in {label}", file=sys.stderr)
            return 2
        n = 200 if "taylor" not in label else 20
        tp = min(timeit.repeat(lambda: fp(*inp), number=n, repeat=args.repeat)) / n * 1e6
        tc = min(timeit.repeat(lambda: fc(*inp), number=n, repeat=args.repeat)) / n * 1e6
        print(f"{label:28s} {tp:12.1f} {tc:12.1f} {tp / tc:8.2f}")

    print()
    print(f"{'end-to-end':28s} {'python (s)':>12s} {'cython (s)':>12s} {'speedup':>8s}")
    original = kernels.taylor_shift, kernels.exp_series, kernels.sincos_series
    try:
        for label, run in end_to_end(args.quick):
            times = {}
            for tag, mod in (("python", pyk), ("cython", cyk)):
                use_backend(mod)
                t0 = time.perf_counter()
                run()
                times[tag] = time.perf_counter() - t0
            print(f"{label:28s} {times['python']:12.3f} {times['cython']:12.3f} {times['python'] / times['cython']:8.2f}")
    finally:
        kernels.taylor_shift, kernels.exp_series, kernels.sincos_series = original
        clear_caches()
    return 0


if __name__ == "__main__":
    sys.exit(main())
