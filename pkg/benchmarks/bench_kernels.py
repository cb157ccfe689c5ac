"""Benchmark the compiled (numba) kernels against the pure-python fallback.

The backend is fixed per process at import time, so each backend runs in
a fresh subprocess with SSIG_BACKEND set accordingly.  Usage:

    python benchmarks/bench_kernels.py            # compare both backends
    python benchmarks/bench_kernels.py --worker   # internal: one backend
"""

import argparse
import json
import os
import subprocess
import sys
import time


def workloads():
    import random

    from ssig import build_graph
    from ssig.arith import Fp2, PolyFp2, roots_with_multiplicity
    from ssig.kernels import supersingular_scan

    def bench_root_finding():
        rng = random.Random(1)
        F = Fp2(10007)
        for trial in range(2000):
            deg = rng.randint(2, 8)
            coeffs = [F.element(rng.randrange(F.p), rng.randrange(F.p))
                      for _ in range(deg + 1)]
            coeffs[-1] = F.one()
            roots_with_multiplicity(PolyFp2(F, coeffs), seed=trial)

    def bench_seed_scan():
        for p in (1009, 2689, 5077):
            supersingular_scan(p)

    def bench_graph_build():
        for p in (601, 1009, 1873):
            for ell in (2, 3):
                build_graph(p, ell)

    return [
        ("root finding (2000 polys, p=10007)", bench_root_finding),
        ("supersingular seed scan (3 primes)", bench_seed_scan),
        ("graph construction (6 graphs)", bench_graph_build),
    ]


def run_worker():
    from ssig.kernels import BACKEND

    results = {"backend": BACKEND, "timings": {}}
    # warm-up triggers JIT compilation so it is not billed to the timings
    for name, fn in workloads():
        fn()
    for name, fn in workloads():
        t0 = time.perf_counter()
        fn()
        results["timings"][name] = time.perf_counter() - t0
    print(json.dumps(results))


def run_backend(backend):
    env = dict(os.environ, SSIG_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--worker"],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--worker", action="store_true")
    args = parser.parse_args()
    if args.worker:
        run_worker()
        return

    reports = {}
    for backend in ("python", "numba"):
        try:
            reports[backend] = run_backend(backend)
        except subprocess.CalledProcessError as exc:
            print(f"{backend}: unavailable ({exc.stderr.strip().splitlines()[-1]})")
    if not reports:
        sys.exit(1)

    names = list(next(iter(reports.values()))["timings"])
    width = max(len(n) for n in names)
    header = f"{'workload':<{width}}"
    for backend in reports:
        header += f"  {backend:>10}"
    if len(reports) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for name in names:
        line = f"{name:<{width}}"
        for backend in reports:
            line += f"  {reports[backend]['timings'][name]:>9.3f}s"
        if len(reports) == 2:
            ratio = (reports["python"]["timings"][name]
                     / reports["numba"]["timings"][name])
            line += f"  {ratio:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
