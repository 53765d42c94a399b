"""Compare the numba and numpy row-transfer kernels.

    python benchmarks/bench_kernels.py [N ...]

Each backend runs in a fresh interpreter (the backend is fixed at import via
SW_NO_NUMBA).  Results are checked for agreement before timings are printed.
"""

import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from artifact import kernels
out = {"backend": kernels.BACKEND, "runs": []}
for N in map(int, sys.argv[1:]):
    rng = np.random.default_rng(N)
    t = rng.normal(size=N) + 1j * rng.normal(size=N)
    W = kernels.weights_array("vicious", 0.3 + 0.2j, t)
    vec = rng.normal(size=1 << N) + 1j * rng.normal(size=1 << N)
    kernels.row_apply(vec, W, 1.0 + 0j, N)          # warm up / compile
    reps = max(1, 2 ** (16 - N))
    t0 = time.perf_counter()
    for _ in range(reps):
        r = kernels.row_apply(vec, W, 1.0 + 0j, N)
    dt = (time.perf_counter() - t0) / reps
    out["runs"].append({"N": N, "seconds": dt, "checksum": [float(r.sum().real), float(r.sum().imag)]})
print(json.dumps(out))
"""


def run(no_numba, Ns):
    env = dict(os.environ, SW_NO_NUMBA="1" if no_numba else "0")
    res = subprocess.run([sys.executable, "-c", WORKER, *map(str, Ns)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    Ns = [int(a) for a in sys.argv[1:]] or [6, 8, 10, 12]
    fast, slow = run(False, Ns), run(True, Ns)
    print(f"{'N':>3} {fast['backend']:>12} {slow['backend']:>12} {'speedup':>8}")
    for a, b in zip(fast["runs"], slow["runs"]):
        ca, cb = complex(*a["checksum"]), complex(*b["checksum"])
        assert abs(ca - cb) <= 1e-9 * max(1.0, abs(cb)), (a["N"], ca, cb)
        print(f"{a['N']:>3} {a['seconds']:12.2e} {b['seconds']:12.2e} {b['seconds'] / a['seconds']:8.1f}")


if __name__ == "__main__":
    main()
