"""Benchmark the compiled kernel core against the pure-numpy fallback.

Run:  python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

import numpy as np

from qlorentz._kernels import _py

try:
    from qlorentz._kernels import _core
except ImportError:
    _core = None

from qlorentz.lorentz import boost_from_velocity, embed_rotation, rotation_about


def timeit(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    lam = boost_from_velocity([0.1, -0.2, 0.85]) @ embed_rotation(
        rotation_about([1.0, 2.0, 3.0], 1.2)
    )

    cases = []

    momenta = rng.normal(scale=0.1, size=(73728, 3))  # default single-particle grid size
    cases.append(
        ("wigner_d_batch (73728 nodes)",
         lambda k: k.wigner_d_batch(lam, 1.0, momenta))
    )

    n = 2048  # default per-particle pair grid size
    g = (rng.normal(size=(2, 2, n, n)) + 1j * rng.normal(size=(2, 2, n, n)))
    d1 = _py.wigner_d_batch(lam, 1.0, rng.normal(scale=0.05, size=(n, 3)))[1]
    d2 = _py.wigner_d_batch(lam, 1.0, rng.normal(scale=0.05, size=(n, 3)))[1]
    w1 = rng.uniform(0.1, 1.0, n)
    w2 = rng.uniform(0.1, 1.0, n)
    cases.append(
        (f"pair_apply ({n}x{n} nodes)", lambda k: k.pair_apply(d1, d2, g))
    )
    cases.append(
        (f"pair_spin_density ({n}x{n} nodes)", lambda k: k.pair_spin_density(w1, w2, g))
    )

    print(f"{'kernel':<34} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for label, fn in cases:
        t_py = timeit(lambda: fn(_py), args.repeats)
        if _core is None:
            print(f"{label:<34} {t_py * 1e3:>8.1f}ms {'n/a':>10} {'-':>8}")
            continue
        t_c = timeit(lambda: fn(_core), args.repeats)
        print(f"{label:<34} {t_py * 1e3:>8.1f}ms {t_c * 1e3:>8.1f}ms {t_py / t_c:>7.1f}x")

    if _core is not None:
        # parity spot check alongside the timings
        qa, da = _py.wigner_d_batch(lam, 1.0, momenta[:1000])
        qb, db = _core.wigner_d_batch(lam, 1.0, momenta[:1000])
        assert np.max(np.abs(qa - qb)) < 1e-12 and np.max(np.abs(da - db)) < 1e-12
        print("parity check: OK")


if __name__ == "__main__":
    main()
