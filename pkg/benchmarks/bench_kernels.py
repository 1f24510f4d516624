"""Compare the compiled kernels with their pure-Python twins.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

import numpy as np

from platoon_cosim import _kernels_py
from platoon_cosim.cv2x import CommParams, Topology, random_rra_arrays, sample_fast_fading, sample_slow_fading

try:
    from platoon_cosim import _kernels as compiled
except ImportError:
    compiled = None


def interval_args(rng, C):
    slow = sample_slow_fading(Topology.default(C), C, rng)
    _, g_v2v, _, g_i2v, g_cross = sample_fast_fading(slow, C.M, rng, C.n_comm)
    sub, pw = random_rra_arrays(rng, C, 4, C.n_comm)
    return (np.zeros(4), g_v2v, g_i2v, g_cross, sub, pw, C.P_I, C.sigma2, C.W / C.N_c, C.comm_interval, C.N_Q, True)


def chain_args(rng, n):
    n_x, n_a, tm = 3, 2, 3
    P = rng.dirichlet(np.ones(n_x), (n_x, n_a))
    D = np.zeros((tm, n_x, tm))
    for t in range(tm):
        D[t, :, :min(t + 2, tm)] = rng.dirichlet(np.ones(min(t + 2, tm)), n_x)
    xs = np.zeros(n + tm + 1, dtype=np.int64)
    taus = np.ones(n + 1, dtype=np.int64)
    acts = np.zeros(n + tm, dtype=np.int64)
    return (np.cumsum(P, -1), np.cumsum(D, -1), xs, taus, acts, rng.random(n), rng.random(n), rng.random(n), tm)


def timed(fn, args_fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        args = args_fn()
        t = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--chain-steps", type=int, default=100_000)
    args = ap.parse_args()
    C = CommParams()
    rng = np.random.default_rng(0)
    cases = [("comm_interval (50 ms, 4 links)", "comm_interval", lambda: interval_args(rng, C)),
             (f"delayed_chain ({args.chain_steps} steps)", "delayed_chain", lambda: chain_args(rng, args.chain_steps))]
    print(f"{'kernel':<36}{'python':>12}{'cython':>12}{'speedup':>10}")
    for label, name, make in cases:
        py = timed(getattr(_kernels_py, name), make, args.repeat)
        if compiled is None:
            print(f"{label:<36}{py * 1e3:>10.2f}ms{'n/a':>12}{'':>10}")
            continue
        cy = timed(getattr(compiled, name), make, args.repeat)
        print(f"{label:<36}{py * 1e3:>10.2f}ms{cy * 1e3:>10.3f}ms{py / cy:>9.0f}x")


if __name__ == "__main__":
    main()
