"""Benchmark the channel-row kernels: compiled extension vs numpy fallback.

Times channel synthesis for one user against square arrays of increasing
size, checks that both backends produce the same rows, and prints a
per-size comparison.  Run from the repo root:

    python3 benchmarks/bench_channel.py
    python3 benchmarks/bench_channel.py --sizes 100 200 500 --repeats 30
"""

import argparse
import time

import numpy as np

from nfprecode import ArrayConfig, build_array
from nfprecode.kernels import BACKEND, HAVE_COMPILED, backends


def time_backend(fn, elem_xyz, user, wavelength, repeats):
    # warm up, then take the fastest repeat (least scheduler noise)
    fn(elem_xyz, *user, wavelength)
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(elem_xyz, *user, wavelength)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 500],
                    help="array side lengths N (N*N elements each)")
    ap.add_argument("--repeats", type=int, default=20)
    ap.add_argument("--wavelength", type=float, default=1.0)
    args = ap.parse_args()

    impls = backends()
    print(f"active backend: {BACKEND}   compiled extension present: {HAVE_COMPILED}")
    print(f"{'N x N':>9} {'elements':>9}", end="")
    for name in impls:
        print(f" {name + ' [ms]':>13}", end="")
    if len(impls) == 2:
        print(f" {'speedup':>8}", end="")
    print(f" {'max |diff|':>11}")

    user = (0.3, -0.2, 10.0)
    for n in args.sizes:
        elem_xyz = build_array(ArrayConfig(nx=n, ny=n, spacing=0.5,
                                           wavelength=args.wavelength))
        times = {}
        rows = {}
        for name, fn in impls.items():
            times[name] = time_backend(fn, elem_xyz, user, args.wavelength,
                                       args.repeats)
            rows[name] = fn(elem_xyz, *user, args.wavelength)
        ref = rows["numpy"]
        worst = max(float(np.max(np.abs(r - ref))) for r in rows.values())
        print(f"{n:>5}x{n:<3} {n * n:>9}", end="")
        for name in impls:
            print(f" {times[name] * 1e3:>13.3f}", end="")
        if len(impls) == 2:
            print(f" {times['numpy'] / times['cython']:>7.2f}x", end="")
        print(f" {worst:>11.2e}")


if __name__ == "__main__":
    main()
