"""Compare the compiled kernels with their pure-Python twins.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the same inputs in both backends; outputs are checked
for equality before timings are reported.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from tga import _pykernels
from tga.oracles import random_connected_graph

try:
    from tga import _kernels
except ImportError:
    sys.exit("compiled extension not built; run `pip install -e . --no-build-isolation` first")


def cases(seed: int):
    rng = random.Random(seed)
    k6 = [(a, b) for a in range(6) for b in range(a, 6)]
    yield "edge_sum_closure K6+loops cap 4", "edge_sum_closure", (6, k6, 4)
    member = _pykernels.edge_sum_closure(6, k6, 2)
    yield "indecomposable n=6 cap 2", "indecomposable", (bytes(member), 6, 2)
    graphs = [random_connected_graph(rng, 6) for _ in range(50)]
    flows = [(g.n, [list(a) for a in g.adj], [rng.randint(0, 3) for _ in range(g.n)])
             for g in graphs]
    yield "cover_flow 50 random 6-vertex graphs", "cover_flow_batch", (flows,)


def run(backend, name, args):
    if name == "cover_flow_batch":
        return [backend.cover_flow(*a) for a in args[0]]
    return getattr(backend, name)(*args)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    print(f"seed {args.seed}, best of {args.repeat}")
    print(f"{'kernel':40s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for label, name, inputs in cases(args.seed):
        py_out, cy_out = run(_pykernels, name, inputs), run(_kernels, name, inputs)
        if py_out != cy_out:
            print(f"{label}: backends disagree", file=sys.stderr)
            return 1
        times = []
        for backend in (_pykernels, _kernels):
            t = timeit.Timer(lambda: run(backend, name, inputs))
            number, _ = t.autorange()
            times.append(min(t.repeat(args.repeat, number)) / number * 1e3)
        print(f"{label:40s} {times[0]:10.3f} {times[1]:10.3f} {times[0] / times[1]:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
