#!/usr/bin/env python3
"""Compare the jitted kernels against the pure-numpy fallback.

Run twice to see both paths:

    python3 benchmarks/bench_kernels.py
    FAREYCHECK_NO_NUMBA=1 python3 benchmarks/bench_kernels.py

or pass --both to spawn the fallback run as a subprocess automatically.
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np


def bench(repeat: int) -> None:
    from fareycheck import _kernels, gen_torus_triangulation
    from fareycheck.topology import _norm_edge, edge_signature_masks, tree_cotree

    label = "numba" if _kernels.NUMBA_ENABLED else "fallback"

    t77 = gen_torus_triangulation(7, 7)
    indptr, indices = _kernels.graph_csr(t77.map.graph)
    # warm-up pays the jit compile cost outside the timed region
    _kernels.psi_scan(indptr, indices, 5, 10**8)
    t0 = time.perf_counter()
    for _ in range(repeat):
        status, count, _, _ = _kernels.psi_scan(indptr, indices, 5, 10**8)
    dt = (time.perf_counter() - t0) / repeat
    print(f"[{label}] psi_scan T(7,7) n=5: {dt * 1e3:8.2f} ms "
          f"({count} subgraphs)")

    t99 = gen_torus_triangulation(9, 9)
    tc = tree_cotree(t99.map)
    masks = edge_signature_masks(t99.map, tc)
    indptr, indices = _kernels.graph_csr(t99.map.graph)
    esig = np.zeros(len(indices), dtype=np.int64)
    for v in range(t99.map.graph.n):
        for t in range(int(indptr[v]), int(indptr[v + 1])):
            esig[t] = masks.get(_norm_edge(v, int(indices[t])), 0)
    _kernels.cycle_scan(indptr, indices, esig)
    t0 = time.perf_counter()
    for _ in range(repeat):
        _, length, _ = _kernels.cycle_scan(indptr, indices, esig)
    dt = (time.perf_counter() - t0) / repeat
    print(f"[{label}] cycle_scan T(9,9):   {dt * 1e3:8.2f} ms "
          f"(shortest noncontractible = {length})")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--both", action="store_true",
                    help="also run the fallback path in a subprocess")
    args = ap.parse_args()
    bench(args.repeat)
    if args.both and "FAREYCHECK_NO_NUMBA" not in os.environ:
        env = dict(os.environ, FAREYCHECK_NO_NUMBA="1")
        subprocess.run(
            [sys.executable, __file__, "--repeat", str(args.repeat)],
            env=env, check=True,
        )


if __name__ == "__main__":
    main()
