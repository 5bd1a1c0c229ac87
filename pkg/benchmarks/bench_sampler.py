"""Throughput comparison of the compiled and pure-Python sweep kernels.

Usage: python benchmarks/bench_sampler.py [P] [n_sweeps]
"""
import sys
import time

import numpy as np

from ringtst.kernels import get_backend
from ringtst.params import ThermoParams
from ringtst.potentials import Harmonic


def bench(backend: str, P: int, n_sweeps: int) -> float:
    run, name = get_backend(backend)
    params = ThermoParams(beta=2.0, bead_count=P)
    code, pa, pb = Harmonic(omega=1.0).kernel_params()
    rng = np.random.default_rng(0)
    q = np.zeros(P)
    bp = rng.uniform(-1, 1, (n_sweeps, P))
    bl = np.log(rng.random((n_sweeps, P)))
    tp = rng.uniform(-1, 1, n_sweeps)
    tl = np.log(rng.random(n_sweeps))
    t0 = time.perf_counter()
    run(q, params.epsilon, params.spring_coefficient, code, pa, pb, 0.5, 0.5, bp, bl, tp, tl)
    dt = time.perf_counter() - t0
    moves = n_sweeps * P
    print(f"{name:>8s}: {dt:8.4f} s  ({moves / dt / 1e6:7.2f} M bead moves/s)")
    return dt


def main():
    P = int(sys.argv[1]) if len(sys.argv) > 1 else 64
    n_sweeps = int(sys.argv[2]) if len(sys.argv) > 2 else 20_000
    print(f"P = {P}, sweeps = {n_sweeps}")
    t_py = bench("python", P, n_sweeps)
    t_c = bench("compiled", P, n_sweeps)
    print(f"speedup: {t_py / t_c:.1f}x")


if __name__ == "__main__":
    main()
