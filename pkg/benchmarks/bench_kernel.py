"""Compare the compiled and pure-Python search kernels on fixed workloads.

    python3 benchmarks/bench_kernel.py [--repeat N]

Both kernels must return the same labelings; the script checks that before
timing anything.
"""

from __future__ import annotations

import argparse
import statistics
import time

from sumgraph import Mode, gen_gap_graph, gen_standard, induce
from sumgraph.induction import c2_of_A
from sumgraph.search import SearchConfig, available_kernels, find_labelings

WORKLOADS = [
    ("gap graph k=8 gap=7, all labelings B=60", lambda: gen_gap_graph(8, 7).graph,
     dict(max_label=60, max_results=0)),
    ("C^2(A_6), minimal, B=300", lambda: c2_of_A(6).graph,
     dict(max_label=300, require_label_one=True)),
    ("C^2(A_7), minimal, B=150", lambda: c2_of_A(7).graph,
     dict(max_label=150, require_label_one=True)),
    ("{2,3,4,6,7} with loops, minimal, B=500", lambda: induce([2, 3, 4, 6, 7], Mode.LOOPS).graph,
     dict(max_label=500, require_label_one=True)),
    ("cycle 5 + 2 isolates, all labelings B=30", lambda: gen_standard("cycle", 5, 2),
     dict(max_label=30, max_results=0)),
]


def _time(G, cfg, kernel, repeat):
    runs, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = find_labelings(G, cfg, kernel)
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs), out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    kernels = available_kernels()
    if "compiled" not in kernels:
        print("compiled kernel not built; only the Python kernel is available")
    print(f"{'workload':44} {'nodes':>9} " + " ".join(f"{k:>10}" for k in kernels) + "   speedup")
    for name, make, kw in WORKLOADS:
        G = make()
        cfg = SearchConfig(mode=G.mode, time_budget=0, **kw)
        times, outs = {}, {}
        for k in kernels:
            times[k], outs[k] = _time(G, cfg, k, args.repeat)
        sols = {k: sorted(L.labels for L in o.labelings) for k, o in outs.items()}
        assert len({str(s) for s in sols.values()}) == 1, f"kernels disagree on {name}"
        nodes = outs[kernels[0]].nodes_explored
        speed = f"{times['python'] / times['compiled']:8.1f}x" if len(kernels) == 2 else ""
        print(f"{name:44} {nodes:>9} " + " ".join(f"{times[k]:9.3f}s" for k in kernels) + f"  {speed}")


if __name__ == "__main__":
    main()
