"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py            # quick set
    python3 benchmarks/bench_kernels.py --full     # adds labeled order 6 (about a minute in Python)
"""

import argparse
import importlib
import time

from bckbench import _kernels_py
from bckbench.constructions import lemma2_algebra


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def cases(full):
    a = lemma2_algebra(6)
    t, n = a.table.flat, a.order
    yield "is_bck, order 7", lambda k: k.is_bck(t, n), 20
    yield "canonical, order 7", lambda k: k.canonical(t, n), 5
    yield "first_bounded_pair, order 7", lambda k: k.first_bounded_pair(t, n), 20
    yield "search labeled, order 5", lambda k: len(k.search(5)[0]), 1
    yield "search monotone, order 6", lambda k: len(k.search(6, (), -1, True)[0]), 1
    if full:
        yield "search labeled, order 6", lambda k: len(k.search(6)[0]), 1


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--full", action="store_true")
    args = parser.parse_args()
    try:
        compiled = importlib.import_module("bckbench._kernels")
    except ImportError:
        raise SystemExit("compiled kernels not built; run pip install -e . --no-build-isolation")

    print(f"{'kernel':32} {'cython':>10} {'python':>10} {'speedup':>8}")
    for name, fn, repeat in cases(args.full):
        tc, rc = _time(lambda: fn(compiled), repeat)
        tp, rp = _time(lambda: fn(_kernels_py), repeat)
        if rc != rp and not (isinstance(rc, (list, tuple)) and list(rc) == list(rp)):
            raise SystemExit(f"{name}: backends disagree ({rc!r} vs {rp!r})")
        print(f"{name:32} {tc * 1e3:9.2f}ms {tp * 1e3:9.2f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
