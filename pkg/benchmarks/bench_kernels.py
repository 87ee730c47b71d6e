"""Compare the numba and numpy backends of the search kernels.

Each backend runs in its own interpreter because the backend is chosen at
import time.  Usage:

    python benchmarks/bench_kernels.py [--max-len 8] [--max-entry 12] [--max-d 5] [--bound 1000]
"""

import argparse
import json
import os
import subprocess
import sys

_WORKER = """
import json, sys, time
from manetti import kernels
max_len, max_entry, max_d, bound, repeat = map(int, sys.argv[1:])
kernels.t_string_scan(2, 4, 1)   # trigger compilation outside the timed region
kernels.markov_scan(1, 1, 1, 3, 5)
timings = {}
for name, call in (
    ("t_string_scan", lambda: kernels.t_string_scan(max_len, max_entry, max_d)),
    ("markov_scan", lambda: kernels.markov_scan(1, 1, 1, 3, bound)),
):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = call()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    timings[name] = {"seconds": best, "size": len(result)}
print(json.dumps({"backend": kernels.BACKEND, "timings": timings}))
"""


def run_backend(disable_numba, args):
    env = dict(os.environ)
    env.pop("MANETTI_DISABLE_NUMBA", None)
    if disable_numba:
        env["MANETTI_DISABLE_NUMBA"] = "1"
    argv = [str(x) for x in (args.max_len, args.max_entry, args.max_d, args.bound, args.repeat)]
    out = subprocess.run([sys.executable, "-c", _WORKER, *argv], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--max-entry", type=int, default=12)
    p.add_argument("--max-d", type=int, default=5)
    p.add_argument("--bound", type=int, default=1000)
    p.add_argument("--repeat", type=int, default=1)
    args = p.parse_args(argv)

    reports = [run_backend(False, args), run_backend(True, args)]
    print(f"{'kernel':<16}{'backend':<10}{'seconds':>10}{'results':>10}")
    for name in ("t_string_scan", "markov_scan"):
        for r in reports:
            t = r["timings"][name]
            print(f"{name:<16}{r['backend']:<10}{t['seconds']:>10.3f}{t['size']:>10}")
    for name in ("t_string_scan", "markov_scan"):
        sizes = {r["timings"][name]["size"] for r in reports}
        if len(sizes) != 1:
            print(f"warning: backends disagree on {name}: {sorted(sizes)}")
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
