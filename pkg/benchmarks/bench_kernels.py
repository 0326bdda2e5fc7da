"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from matchsign.embedding import parity_table, stembridge_profile
from matchsign.graph import complete_graph, grid_graph
from matchsign.kernels import available_backends, load_backend


def _workloads():
    rng = random.Random(0)
    out = []
    for name, g in [("grid 6x6", grid_graph(6, 6)), ("grid 4x8", grid_graph(4, 8)), ("K12", complete_graph(12))]:
        us = [e.u for e in g.edges]
        vs = [e.v for e in g.edges]
        out.append((f"enumerate {name}", lambda b, g=g, us=us, vs=vs: b.enumerate_matchings(g.n, us, vs, 10**7)))
    g = complete_graph(12)
    py = load_backend("python")
    rows = py.enumerate_matchings(g.n, [e.u for e in g.edges], [e.v for e in g.edges], 10**7)
    table = parity_table(stembridge_profile(g), g)
    out.append(("parities K12", lambda b: b.matching_parities(rows, len(g.edges), table)))
    ncols = 200
    sys_rows = [rng.getrandbits(ncols) for _ in range(2000)]
    hidden = rng.getrandbits(ncols)
    rhs = [bin(r & hidden).count("1") % 2 for r in sys_rows]
    out.append(("gf2 2000x200", lambda b: b.gf2_solve(sys_rows, rhs, ncols)))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = {name: load_backend(name) for name in available_backends()}
    print(f"{'workload':<22}" + "".join(f"{n:>12}" for n in backends) + "     speedup")
    for label, fn in _workloads():
        times = {}
        results = {}
        for name, b in backends.items():
            results[name] = fn(b)
            times[name] = min(timeit.repeat(lambda: fn(b), number=1, repeat=args.repeat))
        vals = list(results.values())
        assert all(v == vals[0] for v in vals), f"backends disagree on {label}"
        line = f"{label:<22}" + "".join(f"{times[n] * 1e3:>10.1f}ms" for n in backends)
        if "cython" in times:
            line += f"  {times['python'] / times['cython']:>8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
