"""Compare the numba and pure-numpy kernels, plus an end-to-end solve.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--sizes 32,256,2048]

The end-to-end column runs each backend in a fresh interpreter because the
backend is fixed at import time by FRACFROB_DISABLE_NUMBA.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from fracfrob import _kernels_numpy as numpy_impl
from fracfrob._accel import HAVE_NUMBA

if HAVE_NUMBA:
    from fracfrob import _kernels_numba as numba_impl
else:
    numba_impl = None

# distinct roots: everything runs on the float kernels
SOLVE_SNIPPET = """
import time
from fracfrob.frobenius import ProblemSpec, solve, majorant, indicial
a, nu = 0.5, 1 / 3
prob = ProblemSpec(0.0, a, [a], [-(a * nu) ** 2, 0.0, 1.0], 1500)
roots = indicial(prob.p0, prob.q0, a)
solve(prob); majorant(prob, roots, 1.0, 2000)
t = time.perf_counter()
for _ in range(10):
    solve(prob)
    majorant(prob, roots, 1.0, 2000)
print((time.perf_counter() - t) / 10)
"""
# log case: dominated by the mpmath reduction of order, identical on both backends
LOG_SNIPPET = """
import time
from fracfrob.frobenius import ProblemSpec, solve
prob = ProblemSpec(0.0, 1.0, [1.0], [0.0, 0.0, 1.0], 100)
t = time.perf_counter()
solve(prob)
print(time.perf_counter() - t)
"""


def cases(n, rng):
    a = rng.standard_normal(n)
    a[0] = 1.0
    b = rng.standard_normal(n)
    h = rng.standard_normal(n) / np.arange(1, n + 1) ** 2
    h[0] = 0.0
    p = np.zeros(n)
    p[:1] = 0.5
    q = np.zeros(n)
    q[0], q[2] = -0.0625, 1.0
    seed = np.array([1.0])
    return {
        "cauchy": lambda m: m.cauchy(a, b, n),
        "reciprocal": lambda m: m.reciprocal(a, n),
        "exp_series": lambda m: m.exp_series(h, n),
        "frobenius": lambda m: m.frobenius(p, q, 0.5, 0.25, n),
        "majorant": lambda m: m.majorant_scaled(seed, 1.0, 0.5, 0.25, 0.5, 1.0, n),
        "horner": lambda m: m.horner(b, 0.7),
    }


def best(fn, repeat):
    number = max(1, int(0.05 / max(timeit.timeit(fn, number=1), 1e-7)))
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def end_to_end(disable, snippet=SOLVE_SNIPPET):
    env = dict(os.environ, FRACFROB_DISABLE_NUMBA="1" if disable else "0")
    out = subprocess.run([sys.executable, "-c", snippet], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sizes", default="32,256,2048")
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    if numba_impl is None:
        print("numba is not installed; timing the numpy kernels only")
    print(f"{'kernel':<12}{'n':>6}{'numpy [us]':>14}{'numba [us]':>14}{'speedup':>10}")
    for n in (int(s) for s in args.sizes.split(",")):
        for name, call in cases(n, rng).items():
            t_np = best(lambda: call(numpy_impl), args.repeat)
            if numba_impl is None:
                print(f"{name:<12}{n:>6}{t_np * 1e6:>14.1f}{'-':>14}{'-':>10}")
                continue
            ref, got = call(numpy_impl), call(numba_impl)  # also triggers compilation
            for x, y in zip(np.atleast_1d(ref) if not isinstance(ref, tuple) else ref,
                            np.atleast_1d(got) if not isinstance(got, tuple) else got):
                np.testing.assert_allclose(x, y, rtol=1e-9, atol=1e-300)
            t_nb = best(lambda: call(numba_impl), args.repeat)
            print(f"{name:<12}{n:>6}{t_np * 1e6:>14.1f}{t_nb * 1e6:>14.1f}{t_np / t_nb:>10.1f}")
    print()
    t_np = end_to_end(True)
    line = f"solve(K=1500) + majorant(2000), distinct roots: numpy {t_np * 1e3:.2f} ms"
    if HAVE_NUMBA:
        t_nb = end_to_end(False)
        line += f", numba {t_nb * 1e3:.2f} ms ({t_np / t_nb:.1f}x)"
    print(line)
    print(f"solve(K=100), equal roots (extended precision): {end_to_end(True, LOG_SNIPPET) * 1e3:.0f} ms")


if __name__ == "__main__":
    main()
