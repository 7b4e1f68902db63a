"""Wall-clock comparison of the compiled and pure-Python kernels.

Each backend runs in a fresh interpreter (the backend is fixed at import).
Work counts must match exactly; only the timings differ.

    python3 benchmarks/bench_backends.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
from buchigames import SOLVERS, kernels
from buchigames.generators import GenSpec, generate
from buchigames.oracle import oracle_solve

cases = [
    ("gadget_chain", GenSpec("gadget_chain", 512), ["classical", "alternative", "improved"]),
    ("gadget_chain_cycles", GenSpec("gadget_chain_cycles", 128), ["classical", "alternative", "improved"]),
    ("random_bounded", GenSpec("random_bounded", 3000, 4, seed=1), ["classical", "alternative", "improved", "dovetail"]),
]
repeat = int(sys.argv[1])
out = {"backend": kernels.BACKEND, "rows": []}
for fam, spec, algs in cases:
    g = generate(spec)
    for alg in algs:
        best, work = float("inf"), None
        for _ in range(repeat):
            t = time.perf_counter()
            work = SOLVERS[alg](g).metrics.edge_examinations
            best = min(best, time.perf_counter() - t)
        out["rows"].append([fam, spec.n, alg, work, best])
from buchigames.oracle import strategy_space
seed = 0
while not 10**4 <= strategy_space(generate(GenSpec("random_bounded", 10, 3, seed=seed))) <= 5 * 10**4:
    seed += 1
g = generate(GenSpec("random_bounded", 10, 3, seed=seed))
t = time.perf_counter()
v = oracle_solve(g)
out["rows"].append(["oracle", 10, "oracle", v.strategy_pairs_examined, time.perf_counter() - t])
print(json.dumps(out))
"""


def run(pure, repeat):
    env = dict(os.environ)
    env.pop("BUCHIGAMES_PURE_PYTHON", None)
    if pure:
        env["BUCHIGAMES_PURE_PYTHON"] = "1"
    proc = subprocess.run([sys.executable, "-c", WORKLOAD, str(repeat)], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    if fast["backend"] != "cython":
        print("compiled extension not available; both runs used the Python kernels")
    print(f"{'family':<20} {'n':>5} {'algorithm':<12} {'work':>10} {'python s':>9} "
          f"{'compiled s':>10} {'speedup':>8}")
    for a, b in zip(fast["rows"], slow["rows"]):
        assert a[:4] == b[:4], f"work differs between backends: {a} vs {b}"
        print(f"{a[0]:<20} {a[1]:>5} {a[2]:<12} {a[3]:>10} {b[4]:>9.4f} {a[4]:>10.4f} "
              f"{b[4] / a[4]:>7.1f}x")


if __name__ == "__main__":
    main()
