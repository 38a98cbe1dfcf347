#!/usr/bin/env python3
"""Compare the compiled kernel extension against the pure-Python fallback.

Micro section: the two kernels on window lengths spanning the built-in
presets.  Macro section: full encode+decode rounds per backend.

    python benchmarks/bench_kernels.py [--trials N]
"""

import argparse
import random
import time

from vtsync import builtin_setups, kernel_backend
from vtsync.kernels import available_backends, set_backend
from vtsync import _corepy
from vtsync.sim import run_trial

try:
    from vtsync import _core
except ImportError:
    _core = None


def timeit(fn, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    return (time.perf_counter() - t0) / reps


def micro(lengths=(12, 54, 140, 540, 2800), reps=3000):
    rnd = random.Random(0)
    print(f"{'kernel':<18} {'length':>6} {'python':>12} {'c':>12} {'speedup':>8}")
    for n in lengths:
        bits = bytes(rnd.randrange(2) for _ in range(n))
        target = rnd.randrange(n + 1)
        received = bits[:-1]
        rows = [
            ("vt_syndrome", lambda m: (lambda: m.vt_syndrome(bits))),
            ("vt_insert_decode", lambda m: (lambda: m.vt_insert_decode(received, target))),
        ]
        for name, make in rows:
            t_py = timeit(make(_corepy), reps)
            if _core is not None:
                t_c = timeit(make(_core), reps)
                print(f"{name:<18} {n:>6} {t_py * 1e6:>10.2f}us "
                      f"{t_c * 1e6:>10.2f}us {t_py / t_c:>7.1f}x")
            else:
                print(f"{name:<18} {n:>6} {t_py * 1e6:>10.2f}us {'-':>12} {'-':>8}")


def macro(trials):
    setup = builtin_setups()[0]
    print(f"\nfull encode+decode rounds ({setup.name}: n={setup.params.n}, "
          f"k={setup.k}, {trials} trials per backend)")
    results = {}
    for backend in available_backends():
        set_backend(backend)
        t0 = time.perf_counter()
        for t in range(trials):
            run_trial(setup, seed=7, index=t)
        dt = time.perf_counter() - t0
        results[backend] = dt
        print(f"  {backend:<7} {dt:6.2f}s  ({1e6 * dt / trials:7.1f} us/trial)")
    if len(results) == 2:
        print(f"  speedup: {results['python'] / results['c']:.2f}x")
    set_backend(kernel_backend)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=2000,
                    help="macro-benchmark trials per backend")
    args = ap.parse_args()
    print(f"active backend: {kernel_backend} "
          f"(available: {', '.join(available_backends())})\n")
    micro()
    macro(args.trials)


if __name__ == "__main__":
    main()
