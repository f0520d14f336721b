"""Time the pure and compiled elimination kernels against each other.

Usage:  python3 benchmarks/bench_kernels.py [--sizes 60,120,240] [--prime P]

Each size n times a reduced row echelon form of a dense random n x n
matrix over GF(p) and an n x n matrix product, for both backends that
are importable.  Results are wall-clock medians over --repeats runs.
"""

import argparse
import random
import statistics
import time

from markedbases import _modp

try:
    from markedbases import _modp_cy
except ImportError:
    _modp_cy = None


def timed(fn, repeats):
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="60,120,240",
                    help="comma-separated matrix sizes")
    ap.add_argument("--prime", type=int, default=32003)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    p = args.prime
    rng = random.Random(args.seed)
    backends = [("python", _modp)]
    if _modp_cy is not None:
        backends.append(("cython", _modp_cy))
    else:
        print("compiled kernel not built; timing the pure backend only")
    header = "%-10s %6s" + " %12s" * len(backends) + " %9s"
    names = [name for name, _ in backends]
    print(header % tuple(["kernel", "n"] + names
                         + ["speedup" if len(backends) == 2 else ""]))
    for n in (int(s) for s in args.sizes.split(",")):
        a = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        b = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        for label, call in (
                ("rref_mod", lambda mod: mod.rref_mod(a, p)),
                ("mat_mul", lambda mod: mod.mat_mul_mod(a, b, p))):
            times = [timed(lambda m=mod: call(m), args.repeats)
                     for _, mod in backends]
            row = [label, n] + ["%.4fs" % t for t in times]
            row.append("%8.1fx" % (times[0] / times[1])
                       if len(times) == 2 and times[1] > 0 else "")
            print(header % tuple(row))
        if len(backends) == 2:
            same = (_modp.rref_mod(a, p) == _modp_cy.rref_mod(a, p)
                    and _modp.mat_mul_mod(a, b, p)
                    == _modp_cy.mat_mul_mod(a, b, p))
            if not same:
                raise SystemExit("backend outputs differ at n=%d" % n)


if __name__ == "__main__":
    main()
