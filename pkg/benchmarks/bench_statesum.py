"""Compare the compiled and pure-Python Kauffman bracket kernels.

    python benchmarks/bench_statesum.py [--repeat 3] [--max-crossings 17]

Both kernels must return identical state histograms; the script checks that
before timing.
"""
from __future__ import annotations

import argparse
import sys
import time

from slopekit.bracket import HAVE_COMPILED, StateSumConfig, state_histogram
from slopekit.fixtures import load_fixtures


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-crossings", type=int, default=17)
    args = ap.parse_args(argv)
    if not HAVE_COMPILED:
        print("compiled kernel not available; build it with `pip install --no-build-isolation -e .`")
        return 1
    fs = load_fixtures()
    diagrams = {**fs.diagrams, **{n: p.diagram for n, p in fs.pairs.items()}}
    rows = sorted((len(d), n) for n, d in diagrams.items() if 8 <= len(d) <= args.max_crossings)
    py, cy = StateSumConfig(backend="python"), StateSumConfig(backend="compiled")
    print(f"{'diagram':<18}{'n':>4}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for size, name in rows:
        d = diagrams[name]
        if state_histogram(d, py) != state_histogram(d, cy):
            print(f"{name}: kernels disagree", file=sys.stderr)
            return 1
        tp = best_of(lambda: state_histogram(d, py), args.repeat)
        tc = best_of(lambda: state_histogram(d, cy), args.repeat)
        print(f"{name:<18}{size:>4}{tp:>12.4f}{tc:>12.4f}{tp / max(tc, 1e-9):>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
