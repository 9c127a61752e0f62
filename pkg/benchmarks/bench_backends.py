#!/usr/bin/env python3
"""Benchmark: numba kernels vs the pure-numpy fallback.

Times the two hot paths on both backends: the chain construction +
residual sweep (the workload behind `ekchain sweep` and the verification
corpus) and the simultaneous root iteration.

Usage:
    python benchmarks/bench_backends.py [--sequences N] [--grid N]
                                        [--max-degree N] [--polys N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from ekchain.kernels import numba_backend, numpy_backend

BACKENDS = [("numba", numba_backend), ("numpy", numpy_backend)]

PHASE_OFFSET = 0.6180339887498949


def make_sequences(rng, count: int, max_degree: int) -> list[np.ndarray]:
    seqs = []
    for _ in range(count):
        n = int(rng.integers(1, max_degree + 1))
        seqs.append(np.sort(rng.uniform(0.05, 1.0, n + 1)))
    return seqs


def make_polys(rng, count: int, max_degree: int) -> list[np.ndarray]:
    return [
        rng.uniform(0.05, 10.0, int(rng.integers(2, max_degree + 2)))
        for _ in range(count)
    ]


def bench_chain_sweep(mod, seqs, thetas) -> float:
    start = time.perf_counter()
    for p in seqs:
        flags = np.zeros(len(p) - 1, dtype=bool)
        for th in thetas:
            arrays = mod.chain_arrays(p, float(th))
            mod.chain_residuals(*arrays, flags)
    return time.perf_counter() - start


def bench_roots(mod, polys) -> float:
    start = time.perf_counter()
    for a in polys:
        d = len(a) - 1
        z0 = np.exp(1j * (2.0 * np.pi * np.arange(d) / d + PHASE_OFFSET))
        z, _, _ = mod.aberth_solve(a, z0, 1e-14, 200)
        mod.newton_polish(a, z, 3)
    return time.perf_counter() - start


def warmup(mod) -> None:
    p = np.array([1.0, 2.0, 3.0])
    arrays = mod.chain_arrays(p, 1.0)
    mod.chain_residuals(*arrays, np.zeros(2, dtype=bool))
    a = np.array([1.0, 2.0, 3.0])
    z0 = np.exp(1j * (np.pi * np.arange(2) + PHASE_OFFSET))
    z, _, _ = mod.aberth_solve(a, z0, 1e-14, 50)
    mod.newton_polish(a, z, 1)
    mod.horner_many(a, z)


def main() -> None:
    parser = argparse.ArgumentParser(description="Compare kernel backends")
    parser.add_argument("--sequences", type=int, default=100)
    parser.add_argument("--grid", type=int, default=720)
    parser.add_argument("--max-degree", type=int, default=50)
    parser.add_argument("--polys", type=int, default=400)
    args = parser.parse_args()

    rng = np.random.default_rng(20240901)
    seqs = make_sequences(rng, args.sequences, args.max_degree)
    polys = make_polys(rng, args.polys, 12)
    thetas = (np.arange(args.grid) + 0.5) * (2.0 * np.pi / args.grid)

    print(
        f"chain sweep: {args.sequences} sequences (degree <= {args.max_degree}) "
        f"x {args.grid} angles; roots: {args.polys} polynomials (degree <= 12)"
    )
    print()

    results = {}
    for name, mod in BACKENDS:
        print(f"warming up {name} ...")
        warmup(mod)
        results[name] = (
            bench_chain_sweep(mod, seqs, thetas),
            bench_roots(mod, polys),
        )

    print()
    print(f"{'backend':<10} {'chain sweep (s)':<18} {'roots (s)':<12}")
    print("-" * 42)
    for name, (t_chain, t_roots) in results.items():
        print(f"{name:<10} {t_chain:<18.3f} {t_roots:<12.3f}")

    nb_chain, nb_roots = results["numba"]
    np_chain, np_roots = results["numpy"]
    print()
    print(f"numba speedup: chain sweep {np_chain / nb_chain:.2f}x, roots {np_roots / nb_roots:.2f}x")


if __name__ == "__main__":
    main()
