"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_backends.py [--repeat 3]

The first numba call per kernel pays JIT compilation (or a cache load), so
it is warmed up before timing. Both backends must return identical results.
"""
import argparse
import time

import numpy as np

from stardisc._accel import HAS_NUMBA
from stardisc._kernels import poly_sum_magnitudes, r_sum_magnitudes
from stardisc.discrepancy import star_discrepancy_exact, star_discrepancy_lower
from stardisc.expsum import admissible_vectors
from stardisc.generators import generate_pset, random_points


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases():
    for N, s in ((200, 2), (400, 3), (60, 4)):
        P = random_points(N, s, 0)
        yield f"exact D*  random N={N} s={s}", lambda b, P=P: star_discrepancy_exact(P, backend=b).value
    P = generate_pset("P", 97, 3)
    yield "lower D*  korobov-P p=97 s=3, 32 restarts", lambda b: star_discrepancy_lower(P, 32, 0, backend=b).value
    H = admissible_vectors(13, 3, 13)
    yield "exp sums  family P p=13 s=3", lambda b: poly_sum_magnitudes(H, 13, b)
    yield "exp sums  family R p=13 s=3", lambda b: r_sum_magnitudes(H, 13, b)
    Hq = admissible_vectors(7, 2, 49)
    yield "exp sums  family Q p=7 s=2", lambda b: poly_sum_magnitudes(Hq, 49, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not HAS_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'case':46s} {'numpy s':>9s} {'numba s':>9s} {'speedup':>8s}")
    for name, fn in cases():
        fn("numba")  # warm-up / compile
        t_np, r_np = best_of(lambda: fn("numpy"), args.repeat)
        t_nb, r_nb = best_of(lambda: fn("numba"), args.repeat)
        if not np.allclose(r_np, r_nb, rtol=0, atol=1e-10):
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:46s} {t_np:9.4f} {t_nb:9.4f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
