"""Compare the compiled subset engine against the pure-Python fallback.

Each case sweeps every edge subset of a map and asks the engine for the
contraction/restriction profile, which is the inner loop of every
polynomial computation.  Run with:

    python3 benchmarks/bench_backends.py
"""

import random
import sys
import time

sys.path.insert(0, "tests")

from corpus import random_rotation_system
from surfpoly.builders import BouquetSpec, from_rotation_system, standard_bouquet
from surfpoly.kernel import available_backends, engine


def sweep(eng, m):
    for mask in range(1 << m):
        eng.profile(mask)


def bench(label, p, repeats=3):
    row = [label, f"m={p.m}"]
    times = {}
    for backend in available_backends():
        eng = engine(p, backend)
        best = min(
            _timed(sweep, eng, p.m) for _ in range(repeats)
        )
        times[backend] = best
        row.append(f"{backend}: {best * 1000:8.2f} ms")
    if len(times) == 2:
        row.append(f"speedup: {times['python'] / times['c']:5.1f}x")
    print("  ".join(row))


def _timed(fn, *args):
    start = time.perf_counter()
    fn(*args)
    return time.perf_counter() - start


def main():
    print(f"backends available: {', '.join(available_backends())}")
    rng = random.Random(7)
    for g, m in ((1, 8), (2, 10), (3, 12)):
        bench(f"orientable bouquet g={g}", standard_bouquet(BouquetSpec(True, g, m)))
    for g, m in ((2, 10), (4, 12)):
        bench(f"non-orientable bouquet g={g}", standard_bouquet(BouquetSpec(False, g, m)))
    for i in range(3):
        p = from_rotation_system(random_rotation_system(rng, max_edges=12))
        bench(f"random map #{i}", p)


if __name__ == "__main__":
    main()
